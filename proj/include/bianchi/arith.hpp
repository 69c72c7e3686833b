#ifndef BIANCHI_ARITH_HPP
#define BIANCHI_ARITH_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>
#include <algorithm>

namespace bianchi {

using i64 = std::int64_t;

inline i64 checked_mul(i64 a, i64 b)
{
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline i64 checked_add(i64 a, i64 b)
{
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

// always in [0, m)
inline i64 mod(i64 a, i64 m)
{
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 gcd(i64 a, i64 b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline bool is_prime(i64 n)
{
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (i64 q = 5; q <= n / q; q += 6)
        if (n % q == 0 || n % (q + 2) == 0) return false;
    return true;
}

inline int valuation(i64 n, i64 p)
{
    if (n == 0) throw std::invalid_argument("valuation of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline i64 ipow(i64 b, int e)
{
    i64 r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, b);
    return r;
}

class Place {
public:
    static Place infinity() { return Place(0); }
    static Place finite(i64 p)
    {
        if (!is_prime(p)) throw std::invalid_argument("place must be a prime, got " + std::to_string(p));
        return Place(p);
    }

    bool is_infinite() const { return p_ == 0; }
    i64 prime() const
    {
        if (p_ == 0) throw std::logic_error("infinite place has no prime");
        return p_;
    }

    std::string to_string() const { return p_ == 0 ? std::string("inf") : std::to_string(p_); }

    friend bool operator==(Place a, Place b) { return a.p_ == b.p_; }
    // finite places ascending, infinity last
    friend bool operator<(Place a, Place b)
    {
        if (a.p_ == 0) return false;
        if (b.p_ == 0) return true;
        return a.p_ < b.p_;
    }

private:
    explicit Place(i64 p) : p_(p) {}
    i64 p_;
};

struct Factorization {
    int sign = 1;
    std::vector<std::pair<i64, int>> factors;

    i64 value() const
    {
        i64 r = sign;
        for (auto [p, e] : factors) r = checked_mul(r, ipow(p, e));
        return r;
    }
    std::vector<i64> primes() const
    {
        std::vector<i64> out;
        for (auto [p, e] : factors) out.push_back(p);
        return out;
    }
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

inline Factorization factorize(i64 n)
{
    if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
    if (n == std::numeric_limits<i64>::min()) throw std::overflow_error("factorize: value out of range");
    Factorization f;
    if (n < 0) {
        f.sign = -1;
        n = -n;
    }
    for (i64 q = 2; q <= n / q; q += (q == 2 ? 1 : 2)) {
        if (n % q) continue;
        int e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        f.factors.emplace_back(q, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

inline std::vector<i64> prime_divisors(i64 n) { return factorize(n).primes(); }

inline i64 squarefree_part(i64 n)
{
    auto f = factorize(n);
    i64 r = f.sign;
    for (auto [p, e] : f.factors)
        if (e % 2) r *= p;
    return r;
}

inline bool is_squarefree(i64 n)
{
    if (n == 0) return false;
    for (auto [p, e] : factorize(n).factors)
        if (e > 1) return false;
    return true;
}

namespace detail {

inline int jacobi(i64 a, i64 n)
{
    a = mod(a, n);
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

}

inline int kronecker(i64 a, i64 n)
{
    if (n == 0) throw std::invalid_argument("kronecker: n must be nonzero");
    if (n == std::numeric_limits<i64>::min()) throw std::overflow_error("kronecker: value out of range");
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    if (v > 0) {
        if (a % 2 == 0) return 0;
        i64 a8 = mod(a, 8);
        if (v % 2 && (a8 == 3 || a8 == 5)) result = -result;
    }
    return result * detail::jacobi(a, n);
}

inline int hilbert_symbol(i64 a, i64 b, Place v)
{
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
    if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;

    const i64 p = v.prime();
    int alpha = 0, beta = 0;
    while (a % p == 0) { a /= p; ++alpha; }
    while (b % p == 0) { b /= p; ++beta; }

    if (p != 2) {
        int s = 1;
        if ((alpha & beta & 1) && p % 4 == 3) s = -s;
        if (beta & 1) s *= kronecker(a, p);
        if (alpha & 1) s *= kronecker(b, p);
        return s;
    }
    auto eps = [](i64 u) { return mod(u, 4) == 3 ? 1 : 0; };
    auto omg = [](i64 u) { i64 r = mod(u, 8); return (r == 3 || r == 5) ? 1 : 0; };
    int e = eps(a) * eps(b) + (alpha & 1) * omg(b) + (beta & 1) * omg(a);
    return (e & 1) ? -1 : 1;
}

struct Rational {
    i64 num;
    i64 den = 1;
};

// a rational and num*den differ by a square
inline int hilbert_symbol(Rational a, Rational b, Place v)
{
    if (a.den == 0 || b.den == 0) throw std::invalid_argument("hilbert_symbol: zero denominator");
    if (a.num == 0 || b.num == 0) throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
    i64 x = checked_mul(squarefree_part(a.num), squarefree_part(a.den));
    i64 y = checked_mul(squarefree_part(b.num), squarefree_part(b.den));
    return hilbert_symbol(x, y, v);
}

// 2, the odd primes dividing any of the values, and infinity
inline std::vector<Place> relevant_places(std::initializer_list<i64> values)
{
    std::vector<i64> ps{2};
    for (i64 x : values)
        for (i64 p : prime_divisors(x)) ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    std::vector<Place> out;
    for (i64 p : ps) out.push_back(Place::finite(p));
    out.push_back(Place::infinity());
    return out;
}

}

#endif
