#ifndef BIANCHI_ORACLE_LOCAL_TREE_HPP
#define BIANCHI_ORACLE_LOCAL_TREE_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bianchi/arith.hpp"
#include "bianchi/quadfield.hpp"

namespace bianchi::oracle {

class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LocalLatticeVertex {
    int a;
    i64 b0, b1;  // b = b0 + b1*pi
    int n;
};

struct LocalCountResult {
    i64 count = 0;             // vertices per target order
    int targets = 0;           // distinct orders of the requested index containing O_p
    std::size_t vertices = 0;  // vertices enumerated
};

namespace detail {

// u + v*pi with pi^2 = -d
struct LElem {
    i64 u = 0, v = 0;
};

struct LocalRing {
    i64 d;
    LElem mul(LElem x, LElem y) const
    {
        return {checked_add(checked_mul(x.u, y.u), -checked_mul(d, checked_mul(x.v, y.v))),
                checked_add(checked_mul(x.u, y.v), checked_mul(x.v, y.u))};
    }
    LElem add(LElem x, LElem y) const { return {x.u + y.u, x.v + y.v}; }
    LElem neg(LElem x) const { return {-x.u, -x.v}; }
};

using LMat = std::array<LElem, 4>;  // row-major

inline LMat lmul(const LocalRing& R, const LMat& p, const LMat& q)
{
    return {R.add(R.mul(p[0], q[0]), R.mul(p[1], q[2])), R.add(R.mul(p[0], q[1]), R.mul(p[1], q[3])),
            R.add(R.mul(p[2], q[0]), R.mul(p[3], q[2])), R.add(R.mul(p[2], q[1]), R.mul(p[3], q[3]))};
}

using Row = std::array<i64, 4>;
using Echelon = std::array<Row, 4>;

// canonical echelon form of a submodule of (Z/p^K)^4, with pivot exponents
inline std::pair<Echelon, std::array<int, 4>> echelon_mod(std::vector<Row> rows, i64 p, int K)
{
    const i64 q = ipow(p, K);
    auto val = [&](i64 x) {
        if (x == 0) return K;
        int v = 0;
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        return v;
    };
    auto inverse = [&](i64 u) {
        i64 g = q, x = 0, x1 = 1, a = mod(u, q);
        while (a) {
            i64 t = g / a;
            g -= t * a;
            std::swap(g, a);
            x -= t * x1;
            std::swap(x, x1);
        }
        return mod(x, q);
    };
    for (Row& r : rows)
        for (i64& x : r) x = mod(x, q);

    Echelon E{};
    std::array<int, 4> ex{};
    for (int col = 0; col < 4; ++col) {
        int best = -1, bv = K;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            int v = val(rows[i][col]);
            if (v < bv) {
                bv = v;
                best = i;
            }
        }
        ex[col] = bv;
        if (best < 0) {
            E[col] = Row{};
            continue;
        }
        Row piv = rows[best];
        rows.erase(rows.begin() + best);
        const i64 pv = ipow(p, bv);
        const i64 uinv = inverse(piv[col] / pv);
        for (i64& x : piv) x = mod(x * uinv, q);
        for (Row& r : rows) {
            const i64 f = r[col] / pv;
            for (int j = 0; j < 4; ++j) r[j] = mod(r[j] - f * piv[j], q);
        }
        Row extra;
        bool nonzero = false;
        const i64 mult = ipow(p, K - bv);
        for (int j = 0; j < 4; ++j) {
            extra[j] = mod(piv[j] * mult, q);
            nonzero = nonzero || extra[j] != 0;
        }
        if (nonzero) rows.push_back(extra);
        E[col] = piv;
    }
    for (int j = 1; j < 4; ++j) {
        const i64 pv = ipow(p, ex[j]);
        for (int i = 0; i < j; ++i) {
            const i64 f = E[i][j] / pv;
            for (int c = 0; c < 4; ++c) E[i][c] = mod(E[i][c] - f * E[j][c], q);
        }
    }
    return {E, ex};
}

inline std::vector<LocalLatticeVertex> vertices_up_to(i64 p, int radius)
{
    std::vector<LocalLatticeVertex> out{{0, 0, 0, 0}};
    for (int n = 1; n <= radius; ++n) {
        for (int a = 0; a <= n; ++a) {
            const i64 m0 = ipow(p, (a + 1) / 2), m1 = ipow(p, a / 2);
            for (i64 b0 = 0; b0 < m0; ++b0)
                for (i64 b1 = 0; b1 < m1; ++b1) {
                    if (a > 0 && a < n && b0 % p == 0) continue;
                    out.push_back({a, b0, b1, n});
                }
        }
    }
    return out;
}

inline LocalCountResult count_at(i64 p, const ImagQuadField& k, i64 tau, int r, int radius, int K)
{
    const i64 d = k.d();
    const LocalRing R{d};
    auto pi_pow = [&](int e) {
        LElem x{1, 0};
        for (int i = 0; i < e; ++i) x = R.mul(x, {0, 1});
        return x;
    };
    const LElem one{1, 0}, zero{0, 0}, pi{0, 1}, t{tau, 0};
    // basis of F(tau): 1, diag(pi, -pi), [[0,1],[tau,0]], [[0,pi],[-tau*pi,0]]
    const std::array<LMat, 4> basis = {LMat{one, zero, zero, one}, LMat{pi, zero, zero, R.neg(pi)},
                                       LMat{zero, one, t, zero}, LMat{zero, pi, R.neg(R.mul(t, pi)), zero}};

    const bool split = hilbert_symbol(tau, -d, Place::finite(p)) == 1;
    const int vtau = valuation(tau, p);
    const int E = (radius + 1) / 2 + 1;

    std::map<Echelon, i64> hits;
    const auto verts = vertices_up_to(p, radius);
    for (const auto& vx : verts) {
        const LElem b{vx.b0, vx.b1};
        const LMat J{pi_pow(vx.a), b, zero, pi_pow(vx.n - vx.a)};
        const LMat adjJ{J[3], R.neg(J[1]), R.neg(J[2]), J[0]};
        const int m = vx.n / 2;
        const int eu = vx.n % 2 ? m + 1 : m, ev = m;

        std::vector<Row> rows;
        bool contains_op = true;
        std::array<std::array<LElem, 4>, 4> Y;  // Y[basis][entry]
        for (int i = 0; i < 4; ++i) Y[i] = lmul(R, lmul(R, adjJ, basis[i]), J);
        const i64 pu = ipow(p, eu), pvv = ipow(p, ev);
        for (int entry = 0; entry < 4; ++entry) {
            Row fu, fv;
            for (int i = 0; i < 4; ++i) {
                fu[i] = Y[i][entry].u;
                fv[i] = Y[i][entry].v;
            }
            if (fu[1] % pu || fv[1] % pvv) contains_op = false;
            const i64 su = ipow(p, E - eu), sv = ipow(p, E - ev);
            for (int i = 0; i < 4; ++i) {
                fu[i] = checked_mul(fu[i], su);
                fv[i] = checked_mul(fv[i], sv);
            }
            rows.push_back(fu);
            rows.push_back(fv);
        }
        if (!contains_op) continue;

        auto [ech, ex] = echelon_mod(rows, p, K);
        int sum = 0;
        for (int e : ex) sum += e;
        const int vdisc = 2 * (4 * E - sum) + 2 + 2 * vtau;
        const int excess = vdisc - (split ? 0 : 2);
        if (excess < 0 || excess % 2)
            throw PrecisionError("local tree: inconsistent discriminant valuation " + std::to_string(vdisc));
        if (excess / 2 == r) ++hits[ech];
    }

    LocalCountResult res;
    res.vertices = verts.size();
    res.targets = static_cast<int>(hits.size());
    for (const auto& [key, c] : hits) {
        if (res.count != 0 && res.count != c)
            throw std::logic_error("local tree: orders of equal index have different vertex counts");
        res.count = c;
    }
    return res;
}

}

inline LocalCountResult count_maximal_orders_local_at(i64 p, const ImagQuadField& k, i64 tau, int r, int radius, int precision)
{
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("local tree: p must be an odd prime");
    if (k.d() % p) throw std::invalid_argument("local tree: p must be ramified in k");
    if (tau == 0 || valuation(tau, p) > 1) throw std::invalid_argument("local tree: tau must be nonzero with v_p(tau) <= 1");
    if (r < 0 || r > 3) throw std::invalid_argument("local tree: index exponent must be in [0, 3]");
    if (radius < r || precision < radius + 1) throw std::invalid_argument("local tree: radius or precision too small");
    return detail::count_at(p, k, tau, r, radius, precision);
}

// number of maximal orders N of M2(k_p) with F(tau)_p cap N equal to a given
// order of index p^r containing the integers of k_p
inline i64 count_maximal_orders_local(i64 p, const ImagQuadField& k, i64 tau, int r)
{
    if (tau == 0) throw std::invalid_argument("local tree: tau must be nonzero");
    // a uniformizer in tau pushes the maximal orders containing F(tau)_p one step out
    const int radius = r + 1 + valuation(tau, p);
    const int K = radius + 2;
    const auto a = count_maximal_orders_local_at(p, k, tau, r, radius, K);
    const auto b = count_maximal_orders_local_at(p, k, tau, r, radius, K + 1);
    if (a.count != b.count || a.targets != b.targets)
        throw PrecisionError("local tree: count changed from " + std::to_string(a.count) + " to " +
                             std::to_string(b.count) + " when precision was raised");
    return a.count;
}

}

#endif
