#ifndef BIANCHI_CLASSIFY_HPP
#define BIANCHI_CLASSIFY_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bianchi/arith.hpp"
#include "bianchi/orders.hpp"
#include "bianchi/quadfield.hpp"
#include "bianchi/quaternion.hpp"

namespace bianchi {

// the group lies in no maximal order of any k-quaternion algebra
class NonexistentError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class InternalMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require_squarefree_d(i64 d)
{
    if (d < 1 || !is_squarefree(d))
        throw std::invalid_argument("d must be a squarefree positive integer, got " + std::to_string(d));
}

// primes of d that violate the congruence condition for kind
inline std::vector<i64> failing_primes(SubgroupKind kind, i64 d)
{
    require_squarefree_d(d);
    std::vector<i64> bad;
    for (i64 p : prime_divisors(d)) {
        bool ok = true;
        switch (kind) {
        case SubgroupKind::D3: ok = p == 3 || p % 3 == 1; break;
        case SubgroupKind::T: ok = p == 2 || p % 8 == 1 || p % 8 == 3; break;
        case SubgroupKind::D2max: ok = p == 2 || p % 4 == 1; break;
        }
        if (!ok) bad.push_back(p);
    }
    return bad;
}

inline bool contains_in_psl2(SubgroupKind kind, i64 d) { return failing_primes(kind, d).empty(); }

inline bool contains_in_order(SubgroupKind kind, LambdaClass lambda_m, i64 d)
{
    require_squarefree_d(d);
    const ImagQuadField k = make_field(d);
    if (!is_ideal_norm(lambda_m.value(), k))
        throw std::invalid_argument("contains_in_order: lambda " + std::to_string(lambda_m.value()) +
                                    " is not the type of an M2(k) maximal order");
    i64 a = 0, skip = 0;
    switch (kind) {
    case SubgroupKind::D3: a = -3; skip = 3; break;
    case SubgroupKind::T: a = -2; skip = 2; break;
    case SubgroupKind::D2max: a = -1; skip = 2; break;
    }
    a = checked_mul(a, lambda_m.value());
    for (Place v : relevant_places({a, d, 3})) {
        if (v.is_infinite() || v.prime() == skip) continue;
        if (hilbert_symbol(a, -d, v) != 1) return false;
    }
    return true;
}

inline bool exists_in_some_maximal_order(SubgroupKind kind, i64 d)
{
    require_squarefree_d(d);
    return kind != SubgroupKind::D2max || d % 4 != 3;
}

inline bool host_algebra_split(SubgroupKind kind, i64 d)
{
    require_squarefree_d(d);
    switch (kind) {
    case SubgroupKind::D3: return d % 3 != 2;
    case SubgroupKind::T: return d % 8 != 7;
    case SubgroupKind::D2max:
        if (d % 4 == 3) throw NonexistentError("maximal D2 does not exist in any maximal order for d = 3 mod 4");
        return true;
    }
    throw std::invalid_argument("host_algebra_split: bad kind");
}

inline i64 gamma(SubgroupKind kind, i64 d)
{
    require_squarefree_d(d);
    const auto ps = prime_divisors(d);
    int t = 0;
    switch (kind) {
    case SubgroupKind::D3: {
        for (i64 p : prime_divisors(make_field(d).discriminant()))
            if (p != 3) ++t;
        if (d % 3 != 2) return ipow(2, t);
        for (i64 p : ps)
            if (p % 12 == 5 || p % 12 == 7) return ipow(2, t);
        return ipow(2, t + 1);
    }
    case SubgroupKind::T: {
        for (i64 p : ps)
            if (p != 2) ++t;
        if (d % 8 != 7) return ipow(2, t);
        for (i64 p : ps)
            if (p % 8 == 3 || p % 8 == 5) return ipow(2, t);
        return ipow(2, t + 1);
    }
    case SubgroupKind::D2max:
        if (d % 4 == 3) throw NonexistentError("maximal D2 does not exist in any maximal order for d = 3 mod 4");
        for (i64 p : ps)
            if (p != 2) ++t;
        return ipow(2, t);
    }
    throw std::invalid_argument("gamma: bad kind");
}

inline i64 gamma_composed(SubgroupKind kind, i64 d)
{
    require_squarefree_d(d);
    const ImagQuadField k = make_field(d);
    const GroupAlgebraData g = group_algebra(kind);
    if (!compatible_order_exists(g.lambda_of_group_order, g.algebra, k))
        throw NonexistentError(std::string(to_string(kind)) + " lies in no maximal order for d = " + std::to_string(d));
    const i64 b1 = embedding_class_counts(g.lambda_of_group_order, g.algebra, k).B1;
    if (b1 % g.aut_index)
        throw InternalMismatch("embedding count not divisible by the group automorphism index");
    return b1 / g.aut_index;
}

struct KindReport {
    SubgroupKind kind;
    bool exists_in_psl2 = false;
    bool exists_in_some_maximal_order = false;
    std::optional<bool> host_split;
    std::optional<i64> gamma;
    std::vector<i64> failing_primes;
};

struct ClassificationReport {
    i64 d = 0;
    std::array<KindReport, 3> kinds;

    const KindReport& operator[](SubgroupKind k) const { return kinds[static_cast<int>(k)]; }
};

inline ClassificationReport classify(i64 d)
{
    require_squarefree_d(d);
    ClassificationReport rep;
    rep.d = d;
    for (SubgroupKind kind : all_kinds) {
        KindReport& kr = rep.kinds[static_cast<int>(kind)];
        kr.kind = kind;
        kr.failing_primes = failing_primes(kind, d);
        kr.exists_in_psl2 = kr.failing_primes.empty();
        kr.exists_in_some_maximal_order = exists_in_some_maximal_order(kind, d);
        if (!kr.exists_in_some_maximal_order) continue;
        kr.host_split = host_algebra_split(kind, d);
        const i64 g1 = gamma(kind, d);
        const i64 g2 = gamma_composed(kind, d);
        if (g1 != g2)
            throw InternalMismatch("gamma mismatch for " + std::string(to_string(kind)) + " at d = " + std::to_string(d) +
                                   ": closed form " + std::to_string(g1) + ", composed " + std::to_string(g2));
        kr.gamma = g1;
    }
    return rep;
}

}

#endif
