#pragma once

#include <utility>
#include <vector>

#include "gcditer/numeric.hpp"
#include "gcditer/ratpoly.hpp"

namespace gcditer {

/// Gcd-based factor refinement of a set of polynomials: a pairwise-coprime
/// monic non-constant basis together with, per input, the exponent row and
/// the rational constant such that
///   input = constant * prod basis[i]^exponents[i].
/// No irreducible factorization anywhere; basis elements may be composite.
struct CoprimeBasis {
    std::vector<RatPoly> basis;
    std::vector<std::vector<unsigned long>> exponents;  // one row per input
    std::vector<Rat> constants;                         // one per input
};

/// Inputs must be nonzero and non-constant.
CoprimeBasis coprime_basis(const std::vector<RatPoly>& inputs);

/// Integer twin: pairwise-coprime basis of naturals >= 2 with
///   |input| = prod basis[i]^exponents[i].
struct IntCoprimeBasis {
    std::vector<Int> basis;
    std::vector<std::vector<unsigned long>> exponents;
    std::vector<int> signs;  // sign of each input
};

/// Inputs must be nonzero; inputs of magnitude 1 get an all-zero row.
IntCoprimeBasis int_coprime_basis(const std::vector<Int>& inputs);

/// Outcome of a multiplicative-independence test: when dependent, (r, s) is
/// the minimal positive witness with first^r = second^s.
struct IndependenceResult {
    bool independent = true;
    unsigned long r = 0;
    unsigned long s = 0;
};

/// Solves e_i * r = f_i * s over shared-coprime-basis exponent rows (signed,
/// so rational constants fit), then fixes signs by doubling when needed.
/// Rows must not all be zero (that would mean two units).
IndependenceResult solve_dependence(const std::vector<std::pair<Int, Int>>& rows,
                                    bool first_negative, bool second_negative);

}  // namespace gcditer
