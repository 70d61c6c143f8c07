#include "gcditer/zgcd.hpp"

#include <algorithm>
#include <numeric>

#include "gcditer/errors.hpp"
#include "gcditer/intpoly.hpp"
#include "gcditer/parallel.hpp"

namespace gcditer {

using detail::mulmod;
using detail::powmod;

IntPair::IntPair(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {
    if (abs(a) <= 1 || abs(b) <= 1)
        throw PreconditionError("bases must be nonzero integers other than +-1");
}

Int int_gcd_k(const IntPair& pair, unsigned long k) {
    if (k == 0) throw PreconditionError("k must be >= 1 (both a^0-1 and b^0-1 vanish)");
    Int x = int_pow(pair.a, k) - 1;
    Int y = int_pow(pair.b, k) - 1;
    Int g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return g;
}

IndependenceResult mult_indep_int(const IntPair& pair) {
    IntCoprimeBasis cb = int_coprime_basis({pair.a, pair.b});
    std::vector<std::pair<Int, Int>> rows;
    rows.reserve(cb.basis.size());
    for (std::size_t i = 0; i < cb.basis.size(); ++i)
        rows.emplace_back(Int(cb.exponents[0][i]), Int(cb.exponents[1][i]));
    IndependenceResult res = solve_dependence(rows, cb.signs[0] < 0, cb.signs[1] < 0);
    if (!res.independent) {
        // the witness must hold exactly, signs included
        if (int_pow(pair.a, res.r) != int_pow(pair.b, res.s))
            throw StructuralFailure("dependence witness failed exact check",
                                    static_cast<long>(res.r));
    }
    return res;
}

// ---------------------------------------------------------------------------
// Order oracle

struct OrderTable::Impl {
    struct Entry {
        std::uint64_t q;
        std::uint64_t order_lcm;   // lcm(ord_q(a), ord_q(b))
        std::uint64_t ord_a, ord_b;
        unsigned base_val_a;       // v_q(a^{ord_a} - 1)
        unsigned base_val_b;
        bool is_two;               // q = 2 uses the even/odd split below
        unsigned v2_a_minus, v2_a_plus;  // v_2(a-1), v_2(a+1)
        unsigned v2_b_minus, v2_b_plus;
    };
    std::vector<Entry> entries;
};

namespace {

// smallest-prime-factor sieve; index i holds spf(i)
std::vector<std::uint32_t> spf_sieve(std::uint64_t bound) {
    std::vector<std::uint32_t> spf(bound + 1, 0);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (spf[i] == 0) {
            for (std::uint64_t j = i; j <= bound; j += i)
                if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
        }
    }
    return spf;
}

std::uint64_t order_mod(std::uint64_t a, std::uint64_t q,
                        const std::vector<std::uint32_t>& spf) {
    // factor q-1 through the sieve, then peel prime factors off the exponent
    std::uint64_t e = q - 1;
    std::uint64_t n = e;
    std::uint64_t order = e;
    while (n > 1) {
        std::uint64_t p = spf[n];
        while (n % p == 0) n /= p;
        while (order % p == 0 && powmod(a, order / p, q) == 1) order /= p;
    }
    return order;
}

// v_q(x^e - 1) given q^1 | x^e - 1, via modular exponentiation at growing
// prime-power moduli; never forms x^e itself.
unsigned valuation_at_order(const Int& x, std::uint64_t e, std::uint64_t q) {
    unsigned v = 1;
    Int modulus(static_cast<unsigned long>(q));
    while (true) {
        modulus *= static_cast<unsigned long>(q);
        Int r;
        mpz_powm_ui(r.get_mpz_t(), x.get_mpz_t(), e, modulus.get_mpz_t());
        if (r != 1) return v;
        ++v;
    }
}

unsigned v2(const Int& x) {
    return static_cast<unsigned>(mpz_scan1(x.get_mpz_t(), 0));
}

}  // namespace

OrderTable::OrderTable(const IntPair& pair, std::uint64_t prime_bound)
    : impl_(std::make_unique<Impl>()) {
    if (prime_bound < 2) throw PreconditionError("prime_bound must be >= 2");
    auto spf = spf_sieve(prime_bound);
    Int ab = pair.a * pair.b;
    for (std::uint64_t q = 2; q <= prime_bound; ++q) {
        if (spf[q] != q) continue;  // composite
        if (mpz_divisible_ui_p(ab.get_mpz_t(), static_cast<unsigned long>(q))) continue;
        Impl::Entry e{};
        e.q = q;
        if (q == 2) {
            e.is_two = true;
            e.v2_a_minus = v2(pair.a - 1);
            e.v2_a_plus = v2(pair.a + 1);
            e.v2_b_minus = v2(pair.b - 1);
            e.v2_b_plus = v2(pair.b + 1);
            e.order_lcm = 1;  // odd base: 2 | a^k - 1 for every k
        } else {
            std::uint64_t ra = mpz_fdiv_ui(pair.a.get_mpz_t(), static_cast<unsigned long>(q));
            std::uint64_t rb = mpz_fdiv_ui(pair.b.get_mpz_t(), static_cast<unsigned long>(q));
            e.ord_a = order_mod(ra, q, spf);
            e.ord_b = order_mod(rb, q, spf);
            std::uint64_t g = std::__gcd(e.ord_a, e.ord_b);
            e.order_lcm = e.ord_a / g * e.ord_b;
            e.base_val_a = valuation_at_order(pair.a, e.ord_a, q);
            e.base_val_b = valuation_at_order(pair.b, e.ord_b, q);
        }
        impl_->entries.push_back(e);
    }
}

OrderTable::~OrderTable() = default;
OrderTable::OrderTable(OrderTable&&) noexcept = default;
OrderTable& OrderTable::operator=(OrderTable&&) noexcept = default;

Int OrderTable::smooth_part(unsigned long k) const {
    if (k == 0) throw PreconditionError("k must be >= 1");
    Int result(1);
    for (const auto& e : impl_->entries) {
        unsigned va, vb;
        if (e.is_two) {
            // odd x: v_2(x^k-1) = v_2(x-1) for odd k,
            //        v_2(x-1) + v_2(x+1) + v_2(k) - 1 for even k
            if (k % 2 == 1) {
                va = e.v2_a_minus;
                vb = e.v2_b_minus;
            } else {
                unsigned vk = static_cast<unsigned>(__builtin_ctzl(k));
                va = e.v2_a_minus + e.v2_a_plus + vk - 1;
                vb = e.v2_b_minus + e.v2_b_plus + vk - 1;
            }
        } else {
            if (k % e.order_lcm != 0) continue;  // q misses one of the powers
            // odd q with ord | k: v_q(x^k-1) = v_q(x^ord - 1) + v_q(k)
            unsigned vk = 0;
            for (unsigned long kk = k; kk % e.q == 0; kk /= e.q) ++vk;
            va = e.base_val_a + vk;
            vb = e.base_val_b + vk;
        }
        Int qpow;
        mpz_ui_pow_ui(qpow.get_mpz_t(), static_cast<unsigned long>(e.q), std::min(va, vb));
        result *= qpow;
    }
    return result;
}

Int order_oracle(const IntPair& pair, unsigned long k, std::uint64_t prime_bound) {
    if (k == 0) throw PreconditionError("k must be >= 1");
    return OrderTable(pair, prime_bound).smooth_part(k);
}

// ---------------------------------------------------------------------------
// Survey

GcdSurvey coprime_survey(const IntPair& pair, unsigned long k_max, int workers) {
    if (k_max == 0) throw PreconditionError("k_max must be >= 1");
    GcdSurvey survey{pair};
    survey.k_max = k_max;

    IndependenceResult indep = mult_indep_int(pair);
    if (!indep.independent)
        survey.warnings.push_back("bases are multiplicatively dependent: a^" +
                                  std::to_string(indep.r) + " = b^" + std::to_string(indep.s));
    Int g1;
    {
        Int am1 = pair.a - 1, bm1 = pair.b - 1;
        mpz_gcd(g1.get_mpz_t(), am1.get_mpz_t(), bm1.get_mpz_t());
    }
    if (g1 != 1)
        survey.warnings.push_back("gcd(a-1, b-1) = " + g1.get_str() +
                                  " divides every gcd(a^k-1, b^k-1)");

    std::vector<Int> values(k_max);
    parallel_for_k(1, static_cast<long>(k_max), workers, [&](long k) {
        values[static_cast<std::size_t>(k - 1)] = int_gcd_k(pair, static_cast<unsigned long>(k));
    });

    survey.values.reserve(k_max);
    double best = -1.0;
    for (unsigned long k = 1; k <= k_max; ++k) {
        const Int& g = values[k - 1];
        if (g == 1) survey.coprime_ks.push_back(k);
        double ratio = g == 1 ? 0.0 : log_int(g) / static_cast<double>(k);
        if (ratio > best) {
            best = ratio;
            survey.max_log_ratio = {k, ratio};
        }
        survey.values.emplace_back(k, g);
    }
    survey.density = make_rat(Int(survey.coprime_ks.size()), Int(k_max));
    return survey;
}

}  // namespace gcditer
