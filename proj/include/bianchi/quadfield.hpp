#ifndef BIANCHI_QUADFIELD_HPP
#define BIANCHI_QUADFIELD_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "bianchi/arith.hpp"

namespace bianchi {

enum class SplitType { Split, Inert, Ramified };

inline const char* to_string(SplitType s)
{
    switch (s) {
    case SplitType::Split: return "split";
    case SplitType::Inert: return "inert";
    case SplitType::Ramified: return "ramified";
    }
    return "?";
}

// k = Q(sqrt(-d))
class ImagQuadField {
public:
    i64 d() const { return d_; }
    i64 discriminant() const { return disc_; }
    // ring generator is (1 + sqrt(-d))/2 rather than sqrt(-d)
    bool half_integral_generator() const { return d_ % 4 == 3; }

    friend bool operator==(const ImagQuadField& a, const ImagQuadField& b) { return a.d_ == b.d_; }

private:
    explicit ImagQuadField(i64 d) : d_(d), disc_(d % 4 == 3 ? -d : -4 * d) {}
    i64 d_;
    i64 disc_;
    friend ImagQuadField make_field(i64);
};

inline ImagQuadField make_field(i64 d)
{
    if (d < 1) throw std::invalid_argument("make_field: d must be positive, got " + std::to_string(d));
    if (d > (std::numeric_limits<i64>::max() / 4)) throw std::overflow_error("make_field: d too large");
    if (!is_squarefree(d)) throw std::invalid_argument("make_field: d must be squarefree, got " + std::to_string(d));
    return ImagQuadField(d);
}

inline ImagQuadField make_field_from_squarefree_part(i64 d)
{
    if (d < 1) throw std::invalid_argument("make_field: d must be positive, got " + std::to_string(d));
    return make_field(squarefree_part(d));
}

inline SplitType splitting(const ImagQuadField& k, i64 p)
{
    if (!is_prime(p)) throw std::invalid_argument("splitting: not a prime: " + std::to_string(p));
    const i64 D = k.discriminant();
    if (D % p == 0) return SplitType::Ramified;
    return kronecker(D, p) == 1 ? SplitType::Split : SplitType::Inert;
}

inline std::vector<i64> discriminant_primes(const ImagQuadField& k) { return prime_divisors(k.discriminant()); }

inline bool is_ideal_norm(i64 lambda, const ImagQuadField& k)
{
    if (lambda < 1) throw std::invalid_argument("is_ideal_norm: lambda must be positive");
    for (auto [p, e] : factorize(lambda).factors)
        if (e % 2 && splitting(k, p) == SplitType::Inert) return false;
    return true;
}

inline bool is_global_norm(i64 lambda, const ImagQuadField& k)
{
    if (lambda == 0) throw std::invalid_argument("is_global_norm: lambda must be nonzero");
    for (Place v : relevant_places({lambda, k.d()}))
        if (hilbert_symbol(lambda, -k.d(), v) != 1) return false;
    return true;
}

}

#endif
