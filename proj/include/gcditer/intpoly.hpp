#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gcditer/numeric.hpp"
#include "gcditer/ratpoly.hpp"

namespace gcditer {
namespace detail {

/// Integer polynomial kernel behind the rational layer. Coefficients ascend,
/// no trailing zeros, empty = 0. Sized for large-k surveys: powers and gcds of
/// degree-several-hundred polynomials with multi-thousand-bit coefficients.
using IntPoly = std::vector<Int>;

int ip_deg(const IntPoly& f);  // -1 for zero
void ip_trim(IntPoly& f);
IntPoly ip_mul(const IntPoly& a, const IntPoly& b);
IntPoly ip_pow(const IntPoly& f, unsigned long k);
void ip_sub_const(IntPoly& f, const Int& c);

/// Nonnegative gcd of all coefficients (0 for the zero polynomial).
Int ip_content(const IntPoly& f);
/// Content-free copy with positive leading coefficient.
IntPoly ip_primitive(const IntPoly& f);

/// Exact division over Z; returns false (quotient unspecified) when the
/// divisor does not divide. Divisor must be nonzero.
bool ip_divide_exact(const IntPoly& num, const IntPoly& den, IntPoly& quot);

/// Primitive gcd with positive leading coefficient, by small-prime modular
/// images + CRT, certified by exact trial division (no luck assumptions).
IntPoly ip_gcd(const IntPoly& f, const IntPoly& g);

/// Splits f into (F, den) with f = F / den, den > 0 the lcm of denominators.
std::pair<IntPoly, Int> to_intpoly(const RatPoly& f);
RatPoly to_ratpoly(const IntPoly& f, const Int& den = Int(1));

// Word-size prime field helpers used by the modular gcd (q < 2^63).
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q);
std::vector<std::uint64_t> ip_mod(const IntPoly& f, std::uint64_t q);
std::vector<std::uint64_t> zp_gcd_monic(std::vector<std::uint64_t> a,
                                        std::vector<std::uint64_t> b,
                                        std::uint64_t q);

/// Deterministic sequence of 62-bit primes used for modular images.
std::uint64_t nth_gcd_prime(std::size_t i);

}  // namespace detail
}  // namespace gcditer
