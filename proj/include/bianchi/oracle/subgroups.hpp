#ifndef BIANCHI_ORACLE_SUBGROUPS_HPP
#define BIANCHI_ORACLE_SUBGROUPS_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bianchi/classify.hpp"
#include "bianchi/oracle/ring.hpp"

namespace bianchi::oracle {

inline constexpr int default_height = 10;
inline constexpr int max_height = 16;

struct SubgroupWitness {
    SubgroupKind kind;
    std::vector<Mat2> generators;
    bool relations_verified = false;
};

namespace detail {

inline bool in_box(OElem e, i64 h) { return e.x >= -h && e.x <= h && e.y >= -h && e.y <= h; }

inline bool even(OElem e) { return e.x % 2 == 0 && e.y % 2 == 0; }

inline bool positive_representative(const Mat2& m)
{
    for (i64 v : {m.a.x, m.a.y, m.b.x, m.b.y, m.c.x, m.c.y, m.d.x, m.d.y})
        if (v != 0) return v > 0;
    return false;
}

// trace of U*V without forming the product
inline OElem trace_product(const IntegerRing& R, const Mat2& u, const Mat2& v)
{
    return R.add(R.add(R.mul(u.a, v.a), R.mul(u.b, v.c)), R.add(R.mul(u.c, v.b), R.mul(u.d, v.d)));
}

// (I - U - V - UV) / 2 if integral
inline std::optional<Mat2> tetrahedral_extension(const IntegerRing& R, const Mat2& u, const Mat2& v)
{
    Mat2 n = mat_add(R, identity(), mat_neg(R, mat_add(R, mat_add(R, u, v), mat_mul(R, u, v))));
    for (OElem e : {n.a, n.b, n.c, n.d})
        if (!even(e)) return std::nullopt;
    auto half = [](OElem e) { return OElem{e.x / 2, e.y / 2}; };
    return Mat2{half(n.a), half(n.b), half(n.c), half(n.d)};
}

}

inline std::vector<Mat2> enumerate_torsion_elements(const ImagQuadField& k, int height, std::vector<int> traces = {-1, 0, 1})
{
    if (height < 0 || height > max_height)
        throw std::invalid_argument("enumerate_torsion_elements: height must be in [0, " + std::to_string(max_height) + "]");
    const IntegerRing R(k);
    const i64 h = height;
    std::vector<Mat2> out;
    std::vector<OElem> box;
    for (i64 x = -h; x <= h; ++x)
        for (i64 y = -h; y <= h; ++y) box.push_back({x, y});

    for (int t : traces) {
        for (OElem a : box) {
            const OElem dd{t - a.x, -a.y};
            if (!detail::in_box(dd, h)) continue;
            const OElem bc = R.sub(R.mul(a, dd), {1, 0});
            if (bc == OElem{0, 0}) {
                for (OElem c : box) out.push_back({a, {0, 0}, c, dd});
                for (OElem b : box)
                    if (b != OElem{0, 0}) out.push_back({a, b, {0, 0}, dd});
                continue;
            }
            for (OElem b : box) {
                if (b == OElem{0, 0}) continue;
                auto c = R.exact_div(bc, b);
                if (c && detail::in_box(*c, h)) out.push_back({a, b, *c, dd});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool verify_witness(const ImagQuadField& k, const SubgroupWitness& w)
{
    const IntegerRing R(k);
    const Mat2 I = identity();
    const Mat2 minus_I = mat_neg(R, I);
    auto is_sl2 = [&](const Mat2& m) { return det(R, m) == OElem{1, 0}; };
    auto conj_inverts = [&](const Mat2& u, const Mat2& v) {
        return mat_mul(R, mat_mul(R, v, u), adjugate(R, v)) == adjugate(R, u);
    };
    if (w.generators.size() < 2) return false;
    const Mat2& U = w.generators[0];
    const Mat2& V = w.generators[1];
    if (!is_sl2(U) || !is_sl2(V)) return false;
    if (mat_mul(R, V, V) != minus_I || !conj_inverts(U, V)) return false;

    switch (w.kind) {
    case SubgroupKind::D3:
        return w.generators.size() == 2 && mat_mul(R, mat_mul(R, U, U), U) == minus_I;
    case SubgroupKind::T:
    case SubgroupKind::D2max: {
        if (mat_mul(R, U, U) != minus_I) return false;
        auto W = detail::tetrahedral_extension(R, U, V);
        if (w.kind == SubgroupKind::D2max) return w.generators.size() == 2 && !W;
        return W && w.generators.size() == 3 && w.generators[2] == *W && is_sl2(*W) &&
               mat_mul(R, mat_mul(R, *W, *W), *W) == minus_I;
    }
    }
    return false;
}

// first witness in lexicographic order of (U, V) over elements of height <= H
inline std::optional<SubgroupWitness> find_subgroup(SubgroupKind kind, const ImagQuadField& k, int height)
{
    const IntegerRing R(k);
    const std::vector<Mat2> involutions = enumerate_torsion_elements(k, height, {0});
    std::vector<Mat2> halves;
    for (const Mat2& m : involutions)
        if (detail::positive_representative(m)) halves.push_back(m);

    const std::vector<Mat2> firsts =
        kind == SubgroupKind::D3 ? enumerate_torsion_elements(k, height, {1}) : halves;
    const OElem zero{0, 0};

    for (const Mat2& U : firsts) {
        for (const Mat2& V : halves) {
            if (detail::trace_product(R, U, V) != zero) continue;
            SubgroupWitness w{kind, {U, V}, false};
            if (kind != SubgroupKind::D3) {
                auto W = detail::tetrahedral_extension(R, U, V);
                if (kind == SubgroupKind::T) {
                    if (!W) continue;
                    w.generators.push_back(*W);
                } else if (W) {
                    continue;
                }
            }
            w.relations_verified = verify_witness(k, w);
            if (!w.relations_verified)
                throw std::logic_error("find_subgroup: candidate passed the search filter but failed verification");
            return w;
        }
    }
    return std::nullopt;
}

}

#endif
