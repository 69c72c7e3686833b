#ifndef BIANCHI_QUATERNION_HPP
#define BIANCHI_QUATERNION_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "bianchi/arith.hpp"
#include "bianchi/quadfield.hpp"

namespace bianchi {

enum class SubgroupKind { D3, T, D2max };

inline constexpr SubgroupKind all_kinds[] = {SubgroupKind::D3, SubgroupKind::T, SubgroupKind::D2max};

inline const char* to_string(SubgroupKind k)
{
    switch (k) {
    case SubgroupKind::D3: return "D3";
    case SubgroupKind::T: return "T";
    case SubgroupKind::D2max: return "D2max";
    }
    return "?";
}

inline SubgroupKind parse_kind(const std::string& s)
{
    if (s == "d3" || s == "D3") return SubgroupKind::D3;
    if (s == "t" || s == "T") return SubgroupKind::T;
    if (s == "d2" || s == "D2" || s == "d2max" || s == "D2max") return SubgroupKind::D2max;
    throw std::invalid_argument("unknown subgroup kind: " + s);
}

// a quaternion algebra over Q, up to isomorphism, is its set of ramified places
class QuaternionAlgebraQ {
public:
    QuaternionAlgebraQ() = default;

    static QuaternionAlgebraQ from_ramification(std::vector<Place> places)
    {
        std::sort(places.begin(), places.end());
        if (std::adjacent_find(places.begin(), places.end()) != places.end())
            throw std::invalid_argument("ramification set has repeated places");
        if (places.size() % 2)
            throw std::invalid_argument("ramification set must have even cardinality");
        QuaternionAlgebraQ F;
        F.ramified_ = std::move(places);
        return F;
    }

    static QuaternionAlgebraQ matrix_algebra() { return {}; }

    const std::vector<Place>& ramified() const { return ramified_; }
    bool ramified_at(Place v) const { return std::binary_search(ramified_.begin(), ramified_.end(), v); }
    bool is_division() const { return !ramified_.empty(); }

    std::string to_string() const
    {
        std::string s = "{";
        for (std::size_t i = 0; i < ramified_.size(); ++i) {
            if (i) s += ",";
            s += ramified_[i].to_string();
        }
        return s + "}";
    }

    friend bool operator==(const QuaternionAlgebraQ& a, const QuaternionAlgebraQ& b) { return a.ramified_ == b.ramified_; }

private:
    std::vector<Place> ramified_;
};

inline QuaternionAlgebraQ from_hilbert_pair(i64 a, i64 b)
{
    std::vector<Place> ram;
    for (Place v : relevant_places({a, b}))
        if (hilbert_symbol(a, b, v) == -1) ram.push_back(v);
    return QuaternionAlgebraQ::from_ramification(std::move(ram));
}

inline int local_symbol(const QuaternionAlgebraQ& F, Place v) { return F.ramified_at(v) ? -1 : 1; }

inline i64 sigma(const QuaternionAlgebraQ& F)
{
    i64 s = 1;
    for (Place v : F.ramified()) s = v.is_infinite() ? -s : checked_mul(s, v.prime());
    return s;
}

inline i64 sigma_k(const QuaternionAlgebraQ& F, const ImagQuadField& k)
{
    i64 s = 1;
    for (Place v : F.ramified())
        if (!v.is_infinite() && splitting(k, v.prime()) == SplitType::Split) s = checked_mul(s, v.prime());
    return s;
}

inline bool embeds_in_common_extension(const QuaternionAlgebraQ& E, const QuaternionAlgebraQ& F, const ImagQuadField& k)
{
    return sigma_k(E, k) == sigma_k(F, k);
}

// Replaces tau by an integer with the same Hilbert symbols against -d that is
// squarefree, prime to D, and 1 mod 4 when d is even.
inline i64 normalize_tau(i64 tau, const ImagQuadField& k)
{
    if (tau == 0) throw std::invalid_argument("normalize_tau: tau must be nonzero");
    const i64 d = k.d();
    tau = squarefree_part(tau);

    i64 g = gcd(tau, d);
    for (int iter = 0; g > 1; ++iter) {
        if (iter >= 64) throw std::logic_error("normalize_tau: gcd clearing did not terminate");
        tau = squarefree_part(checked_mul(tau / g, d / g + g));
        i64 g2 = gcd(tau, d);
        if (g2 >= g && g2 > 1) throw std::logic_error("normalize_tau: gcd did not decrease");
        g = g2;
    }
    if (tau % 2 == 0 && d % 4 == 1) tau = squarefree_part(checked_mul(tau / 2, (d + 1) / 2));
    if (d % 2 == 0 && mod(tau, 4) == 3) tau = squarefree_part(checked_mul(tau, d + 1));
    return tau;
}

struct GroupAlgebraData {
    SubgroupKind kind;
    QuaternionAlgebraQ algebra;
    i64 lambda_of_group_order;
    i64 aut_index;
};

inline GroupAlgebraData group_algebra(SubgroupKind kind)
{
    auto ram = [](i64 p) {
        return QuaternionAlgebraQ::from_ramification({Place::finite(p), Place::infinity()});
    };
    switch (kind) {
    case SubgroupKind::D3: return {kind, ram(3), 1, 2};
    case SubgroupKind::T: return {kind, ram(2), 1, 2};
    case SubgroupKind::D2max: return {kind, ram(2), 2, 6};
    }
    throw std::invalid_argument("group_algebra: bad kind");
}

}

#endif
