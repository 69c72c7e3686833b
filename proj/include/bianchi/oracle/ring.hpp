#ifndef BIANCHI_ORACLE_RING_HPP
#define BIANCHI_ORACLE_RING_HPP

#include <array>
#include <compare>
#include <optional>
#include <ostream>
#include <string>

#include "bianchi/arith.hpp"
#include "bianchi/quadfield.hpp"

namespace bianchi::oracle {

// x + y*omega
struct OElem {
    i64 x = 0;
    i64 y = 0;
    friend auto operator<=>(const OElem&, const OElem&) = default;
};

// ring of integers of Q(sqrt(-d)) with basis 1, omega
class IntegerRing {
public:
    explicit IntegerRing(const ImagQuadField& k) : d_(k.d()), half_(k.half_integral_generator()), m_((k.d() + 1) / 4) {}

    i64 d() const { return d_; }

    OElem add(OElem a, OElem b) const { return {a.x + b.x, a.y + b.y}; }
    OElem sub(OElem a, OElem b) const { return {a.x - b.x, a.y - b.y}; }
    OElem neg(OElem a) const { return {-a.x, -a.y}; }

    OElem mul(OElem a, OElem b) const
    {
        const i64 yy = checked_mul(a.y, b.y);
        const i64 cross = checked_add(checked_mul(a.x, b.y), checked_mul(a.y, b.x));
        if (half_)  // omega^2 = omega - m
            return {checked_add(checked_mul(a.x, b.x), -checked_mul(m_, yy)), checked_add(cross, yy)};
        return {checked_add(checked_mul(a.x, b.x), -checked_mul(d_, yy)), cross};
    }

    OElem conj(OElem a) const
    {
        if (half_) return {a.x + a.y, -a.y};
        return {a.x, -a.y};
    }

    i64 norm(OElem a) const
    {
        if (half_) return a.x * a.x + a.x * a.y + m_ * a.y * a.y;
        return a.x * a.x + d_ * a.y * a.y;
    }

    // a / b when the quotient lies in the ring
    std::optional<OElem> exact_div(OElem a, OElem b) const
    {
        const i64 n = norm(b);
        if (n == 0) return std::nullopt;
        const OElem t = mul(a, conj(b));
        if (t.x % n || t.y % n) return std::nullopt;
        return OElem{t.x / n, t.y / n};
    }

    std::string to_string(OElem a) const
    {
        return "(" + std::to_string(a.x) + (a.y < 0 ? "-" : "+") + std::to_string(a.y < 0 ? -a.y : a.y) + "w)";
    }

private:
    i64 d_;
    bool half_;
    i64 m_;
};

struct Mat2 {
    OElem a, b, c, d;
    friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

inline Mat2 identity() { return {{1, 0}, {0, 0}, {0, 0}, {1, 0}}; }

inline Mat2 mat_mul(const IntegerRing& R, const Mat2& p, const Mat2& q)
{
    return {R.add(R.mul(p.a, q.a), R.mul(p.b, q.c)), R.add(R.mul(p.a, q.b), R.mul(p.b, q.d)),
            R.add(R.mul(p.c, q.a), R.mul(p.d, q.c)), R.add(R.mul(p.c, q.b), R.mul(p.d, q.d))};
}

inline Mat2 mat_add(const IntegerRing& R, const Mat2& p, const Mat2& q)
{
    return {R.add(p.a, q.a), R.add(p.b, q.b), R.add(p.c, q.c), R.add(p.d, q.d)};
}

inline Mat2 mat_neg(const IntegerRing& R, const Mat2& p) { return {R.neg(p.a), R.neg(p.b), R.neg(p.c), R.neg(p.d)}; }

inline OElem det(const IntegerRing& R, const Mat2& p) { return R.sub(R.mul(p.a, p.d), R.mul(p.b, p.c)); }

inline OElem trace(const IntegerRing& R, const Mat2& p) { return R.add(p.a, p.d); }

// inverse for determinant one
inline Mat2 adjugate(const IntegerRing& R, const Mat2& p) { return {p.d, R.neg(p.b), R.neg(p.c), p.a}; }

inline std::string to_string(const IntegerRing& R, const Mat2& m)
{
    return "[[" + R.to_string(m.a) + "," + R.to_string(m.b) + "],[" + R.to_string(m.c) + "," + R.to_string(m.d) + "]]";
}

}

#endif
