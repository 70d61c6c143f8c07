#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "gcditer/numeric.hpp"

namespace gcditer {

/// Univariate polynomial in t with exact rational coefficients, stored in
/// ascending degree with no trailing zeros. The zero polynomial is the empty
/// sequence; degree() is -1 for it.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(Rat constant) {
        if (!gcditer::is_zero(constant)) coeffs_.push_back(std::move(constant));
    }
    explicit RatPoly(long constant) : RatPoly(Rat(constant)) {}

    static RatPoly from_coeffs(std::vector<Rat> ascending);
    static RatPoly variable();                      // t
    static RatPoly monomial(Rat c, std::size_t e);  // c * t^e

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && gcditer::is_one(coeffs_[0]); }

    /// Coefficient of t^i; zero beyond the degree.
    const Rat& operator[](std::size_t i) const {
        static const Rat kZero;
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }
    const Rat& leading() const { return coeffs_.back(); }  // pre: nonzero
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o);
    RatPoly& operator*=(const Rat& s);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(RatPoly a, const Rat& s) { return a *= s; }
    friend RatPoly operator*(const Rat& s, RatPoly a) { return a *= s; }

    friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

    /// Quotient and remainder over the rationals; divisor must be nonzero.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;
    /// Exact quotient if divisor divides this with zero remainder.
    bool divide_exact(const RatPoly& divisor, RatPoly& quotient) const;
    bool divisible_by(const RatPoly& divisor) const;

    RatPoly monic() const;  // pre: nonzero
    RatPoly derivative() const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// Monic greatest common divisor over Q[t]; gcd(f, 0) = monic(f).
/// Both arguments zero is an error.
RatPoly poly_gcd(const RatPoly& f, const RatPoly& g);

/// Exact k-th power (k = 0 gives 1).
RatPoly poly_pow(const RatPoly& f, unsigned long k);

/// Exact evaluation at a rational point.
Rat poly_eval(const RatPoly& f, const Rat& x);

/// Monic product of the distinct irreducible factors: monic(f / gcd(f, f')).
/// Zero input is an error.
RatPoly squarefree_part(const RatPoly& f);

/// Monic least common multiple; zero if either argument is zero.
RatPoly poly_lcm(const RatPoly& f, const RatPoly& g);

}  // namespace gcditer
