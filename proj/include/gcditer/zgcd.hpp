#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gcditer/coprime_basis.hpp"
#include "gcditer/numeric.hpp"

namespace gcditer {

/// A pair of integer bases; both must lie outside {-1, 0, 1}.
struct IntPair {
    Int a;
    Int b;

    IntPair(Int a_, Int b_);
};

/// gcd(|a^k - 1|, |b^k - 1|) by exact big-integer power and gcd. k >= 1.
Int int_gcd_k(const IntPair& pair, unsigned long k);

/// Multiplicative-independence test: when dependent, witness (r, s) is the
/// minimal pair with a^r = b^s.
IndependenceResult mult_indep_int(const IntPair& pair);

/// Precomputed multiplicative orders mod every prime q <= prime_bound with
/// q coprime to ab, plus the valuation data the lifting-the-exponent lemma
/// needs. Lets surveys query many k without re-sieving.
class OrderTable {
public:
    OrderTable(const IntPair& pair, std::uint64_t prime_bound);
    ~OrderTable();
    OrderTable(OrderTable&&) noexcept;
    OrderTable& operator=(OrderTable&&) noexcept;

    /// The prime_bound-smooth part of gcd(a^k - 1, b^k - 1): the product of
    /// q^min(v_q(a^k-1), v_q(b^k-1)) over table primes. Valuations come from
    /// the stored orders and base valuations, never from the full powers.
    Int smooth_part(unsigned long k) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// One-shot form of the oracle; builds the table internally.
Int order_oracle(const IntPair& pair, unsigned long k, std::uint64_t prime_bound);

/// Full-survey record for Conjecture 1.1: exact values, the coprime set,
/// its density, and the largest observed log gcd(a^k-1, b^k-1) / k.
struct GcdSurvey {
    IntPair pair;
    unsigned long k_max = 0;
    std::vector<std::pair<unsigned long, Int>> values;  // (k, G(k)), ascending k
    std::vector<unsigned long> coprime_ks;
    Rat density;                                        // |coprime_ks| / k_max
    std::pair<unsigned long, double> max_log_ratio;     // (k, log G(k) / k)
    std::vector<std::string> warnings;                  // advisory only
};

/// k_max >= 1. Warns (never fails) when the pair is multiplicatively
/// dependent or gcd(a-1, b-1) != 1. Distinct k evaluated in parallel;
/// output is ordered by k and independent of the worker count.
GcdSurvey coprime_survey(const IntPair& pair, unsigned long k_max, int workers = 1);

}  // namespace gcditer
