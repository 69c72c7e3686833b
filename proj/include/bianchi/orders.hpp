#ifndef BIANCHI_ORDERS_HPP
#define BIANCHI_ORDERS_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bianchi/arith.hpp"
#include "bianchi/quadfield.hpp"
#include "bianchi/quaternion.hpp"

namespace bianchi {

// the index of a maximal order in another, modulo rational squares
class LambdaClass {
public:
    explicit LambdaClass(i64 v = 1)
    {
        if (v < 1 || !is_squarefree(v))
            throw std::invalid_argument("LambdaClass: value must be a squarefree positive integer, got " + std::to_string(v));
        value_ = v;
    }
    static LambdaClass from_index(i64 n)
    {
        if (n < 1) throw std::invalid_argument("LambdaClass: index must be positive");
        return LambdaClass(squarefree_part(n));
    }
    i64 value() const { return value_; }
    friend bool operator==(LambdaClass, LambdaClass) = default;

private:
    i64 value_ = 1;
};

struct LocalCountQuery {
    i64 p;
    SplitType split_type;
    bool algebra_split;
    int index_exponent;
    int d_mod4 = 1;
};

// a character on places, stored as its set of -1 places
class HilbertCharacter {
public:
    HilbertCharacter() = default;
    explicit HilbertCharacter(std::vector<Place> minus)
    {
        std::sort(minus.begin(), minus.end());
        minus.erase(std::unique(minus.begin(), minus.end()), minus.end());
        if (minus.size() % 2)
            throw std::invalid_argument("HilbertCharacter: odd number of -1 entries");
        minus_ = std::move(minus);
    }

    // v -> (a, -d)_v
    static HilbertCharacter of_norm_symbol(i64 a, const ImagQuadField& k)
    {
        std::vector<Place> minus;
        for (Place v : relevant_places({a, k.d()}))
            if (hilbert_symbol(a, -k.d(), v) == -1) minus.push_back(v);
        return HilbertCharacter(std::move(minus));
    }

    int operator()(Place v) const { return std::binary_search(minus_.begin(), minus_.end(), v) ? -1 : 1; }
    const std::vector<Place>& minus_places() const { return minus_; }
    bool is_trivial() const { return minus_.empty(); }

    friend HilbertCharacter operator*(const HilbertCharacter& a, const HilbertCharacter& b)
    {
        std::vector<Place> out;
        std::set_symmetric_difference(a.minus_.begin(), a.minus_.end(), b.minus_.begin(), b.minus_.end(),
                                      std::back_inserter(out));
        return HilbertCharacter(std::move(out));
    }
    friend bool operator==(const HilbertCharacter&, const HilbertCharacter&) = default;

private:
    std::vector<Place> minus_;
};

inline HilbertCharacter character_of_algebra(const QuaternionAlgebraQ& F) { return HilbertCharacter(F.ramified()); }

inline std::vector<i64> squarefree_divisors(i64 n)
{
    std::vector<i64> out{1};
    for (i64 p : prime_divisors(n)) {
        std::size_t m = out.size();
        for (std::size_t i = 0; i < m; ++i) out.push_back(out[i] * p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool compatible_order_exists(i64 lambda, const QuaternionAlgebraQ& F, const ImagQuadField& k)
{
    if (lambda < 1) throw std::invalid_argument("compatible_order_exists: lambda must be positive");
    return gcd(lambda, sigma_k(F, k)) == 1 && is_ideal_norm(lambda, k);
}

inline bool maximal_orders_isomorphic(LambdaClass l1, LambdaClass l2, const QuaternionAlgebraQ& F, const ImagQuadField& k)
{
    const i64 base = squarefree_part(checked_mul(l1.value(), l2.value()));
    for (i64 f : squarefree_divisors(sigma_k(F, k)))
        if (is_global_norm(checked_mul(f, base), k)) return true;
    return false;
}

// the character every Lambda(F cap M) must carry for M of type lambda_m
inline HilbertCharacter intersection_character(const QuaternionAlgebraQ& F, LambdaClass lambda_m, const ImagQuadField& k)
{
    if (sigma_k(F, k) != 1)
        throw std::invalid_argument("intersection_character: algebra does not embed in M2(k)");
    return character_of_algebra(F) * HilbertCharacter::of_norm_symbol(checked_mul(sigma(F), lambda_m.value()), k);
}

inline std::optional<i64> common_extension_divisor(const QuaternionAlgebraQ& F, LambdaClass lambda_f,
                                                   const QuaternionAlgebraQ& F2, LambdaClass lambda_f2,
                                                   LambdaClass lambda_mm2, const ImagQuadField& k)
{
    const i64 sk = sigma_k(F, k);
    if (sk != sigma_k(F2, k))
        throw std::invalid_argument("common_extension_divisor: algebras have different split ramification");
    const HilbertCharacter target = character_of_algebra(F) * character_of_algebra(F2);
    i64 base = checked_mul(sigma(F), lambda_f.value());
    base = checked_mul(base, lambda_mm2.value());
    base = checked_mul(base, sigma(F2));
    base = squarefree_part(checked_mul(base, lambda_f2.value()));
    for (i64 f : squarefree_divisors(sk))
        if (HilbertCharacter::of_norm_symbol(checked_mul(f, base), k) == target) return f;
    return std::nullopt;
}

namespace detail {

// rows: index 2,4,...,64,>=128; columns: (d=1 split, d=1 div, d=2 split, d=2 div)
inline constexpr i64 dyadic_table[7][4] = {
    {1, 3, 1, 3},
    {1, 2, 1, 2},
    {2, 4, 2, 4},
    {4, 8, 4, 4},
    {8, 8, 4, 8},
    {8, 8, 8, 16},
    {8, 8, 16, 16},
};

}

// For p = 2 with d = 3 mod 4 the prime is not ramified in k, so such queries
// must be posed as Split or Inert.
inline i64 local_embedding_count(const LocalCountQuery& q)
{
    if (!is_prime(q.p)) throw std::invalid_argument("local_embedding_count: p must be prime");
    if (q.index_exponent < 0) throw std::invalid_argument("local_embedding_count: negative index exponent");
    const int e = q.index_exponent;
    switch (q.split_type) {
    case SplitType::Split:
        if (!q.algebra_split)
            throw std::invalid_argument("local_embedding_count: a prime split in k cannot ramify in a compatible algebra");
        return e == 0 ? 1 : 2;
    case SplitType::Inert:
        if (e % 2) throw std::invalid_argument("local_embedding_count: odd index exponent at an inert prime");
        return (e == 0 && q.algebra_split) ? 1 : 2;
    case SplitType::Ramified:
        break;
    }
    if (e == 0) return 1;
    const i64 p = q.p;
    if (p != 2) {
        if (e == 1) return q.algebra_split ? 1 : p + 1;
        if (e == 2) return q.algebra_split ? p - 1 : 2 * p;
        return 2 * p;
    }
    if (q.d_mod4 != 1 && q.d_mod4 != 2)
        throw std::invalid_argument("local_embedding_count: 2 is ramified only for d = 1, 2 mod 4");
    const int row = std::min(e, 7) - 1;
    const int col = (q.d_mod4 == 2 ? 2 : 0) + (q.algebra_split ? 0 : 1);
    return detail::dyadic_table[row][col];
}

inline i64 global_embedding_count(i64 lambda, const QuaternionAlgebraQ& F, const ImagQuadField& k)
{
    if (!compatible_order_exists(lambda, F, k))
        throw std::invalid_argument("global_embedding_count: no compatible order for lambda " + std::to_string(lambda));
    const int dm4 = static_cast<int>(k.d() % 4);
    auto local = [&](i64 p, int e) {
        return local_embedding_count({p, splitting(k, p), !F.ramified_at(Place::finite(p)), e, dm4});
    };
    i64 c = 1;
    for (auto [p, e] : factorize(lambda).factors) c = checked_mul(c, local(p, e));
    for (Place v : F.ramified()) {
        if (v.is_infinite() || lambda % v.prime() == 0) continue;
        if (splitting(k, v.prime()) == SplitType::Inert) c = checked_mul(c, local(v.prime(), 0));
    }
    return c;
}

struct AutomorphismIndexData {
    int t;
    int r;
    int s;
    i64 index;
};

inline AutomorphismIndexData automorphism_index_data(const QuaternionAlgebraQ& F, const ImagQuadField& k)
{
    const i64 sk = sigma_k(F, k);
    AutomorphismIndexData a{};
    a.t = static_cast<int>(discriminant_primes(k).size());
    a.r = static_cast<int>(prime_divisors(sk).size());
    int norms = 0;
    for (i64 f : squarefree_divisors(sk))
        if (is_global_norm(f, k)) ++norms;
    while ((1 << a.s) < norms) ++a.s;
    if ((1 << a.s) != norms) throw std::logic_error("automorphism_index: norm divisors do not form a group");
    a.index = ipow(2, a.t + a.r + a.s - 1);
    return a;
}

inline i64 automorphism_index(const QuaternionAlgebraQ& F, const ImagQuadField& k)
{
    return automorphism_index_data(F, k).index;
}

// s from the rank over F_2 of ((1 - (q,-d)_p)/2) for p | D, q | sigma_k
inline int norm_divisor_rank_s(const QuaternionAlgebraQ& F, const ImagQuadField& k)
{
    const auto qs = prime_divisors(sigma_k(F, k));
    std::vector<std::uint64_t> rows;
    for (i64 p : discriminant_primes(k)) {
        std::uint64_t row = 0;
        for (std::size_t j = 0; j < qs.size(); ++j)
            if (hilbert_symbol(qs[j], -k.d(), Place::finite(p)) == -1) row |= std::uint64_t{1} << j;
        rows.push_back(row);
    }
    int rank = 0;
    for (std::size_t col = 0; col < qs.size(); ++col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        auto it = std::find_if(rows.begin() + rank, rows.end(), [&](std::uint64_t r) { return r & bit; });
        if (it == rows.end()) continue;
        std::iter_swap(rows.begin() + rank, it);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (static_cast<int>(i) != rank && (rows[i] & bit)) rows[i] ^= rows[rank];
        ++rank;
    }
    return static_cast<int>(qs.size()) - rank;
}

struct EmbeddingClassCounts {
    i64 B;
    i64 B1;
};

inline EmbeddingClassCounts embedding_class_counts(i64 lambda, const QuaternionAlgebraQ& F, const ImagQuadField& k)
{
    const i64 B = checked_mul(global_embedding_count(lambda, F, k), automorphism_index(F, k));
    return {B, checked_mul(2, B)};
}

}

#endif
