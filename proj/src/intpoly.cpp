#include "gcditer/intpoly.hpp"

#include <mutex>
#include <stdexcept>

#include "gcditer/errors.hpp"

namespace gcditer {
namespace detail {

int ip_deg(const IntPoly& f) { return static_cast<int>(f.size()) - 1; }

void ip_trim(IntPoly& f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) == 0) continue;
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    ip_trim(r);
    return r;
}

IntPoly ip_pow(const IntPoly& f, unsigned long k) {
    IntPoly result{Int(1)};
    if (k == 0) return result;
    IntPoly base = f;
    while (true) {
        if (k & 1UL) result = ip_mul(result, base);
        k >>= 1;
        if (k == 0) break;
        base = ip_mul(base, base);
    }
    return result;
}

void ip_sub_const(IntPoly& f, const Int& c) {
    if (sgn(c) == 0) return;
    if (f.empty()) f.push_back(Int(0));
    f[0] -= c;
    ip_trim(f);
}

Int ip_content(const IntPoly& f) {
    Int c(0);
    for (const Int& x : f) {
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
        if (c == 1) break;
    }
    return c;
}

IntPoly ip_primitive(const IntPoly& f) {
    if (f.empty()) return {};
    Int c = ip_content(f);
    if (sgn(f.back()) < 0) c = -c;
    IntPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        mpz_divexact(r[i].get_mpz_t(), f[i].get_mpz_t(), c.get_mpz_t());
    return r;
}

bool ip_divide_exact(const IntPoly& num, const IntPoly& den, IntPoly& quot) {
    if (den.empty()) throw PreconditionError("division by the zero polynomial");
    if (num.empty()) {
        quot.clear();
        return true;
    }
    if (num.size() < den.size()) return false;
    IntPoly rem = num;
    quot.assign(num.size() - den.size() + 1, Int(0));
    const Int& lead = den.back();
    for (std::size_t step = quot.size(); step-- > 0;) {
        const Int& top = rem[step + den.size() - 1];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
        Int q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t j = 0; j < den.size(); ++j)
            mpz_submul(rem[step + j].get_mpz_t(), q.get_mpz_t(), den[j].get_mpz_t());
        quot[step] = std::move(q);
    }
    for (const Int& x : rem)
        if (sgn(x) != 0) return false;
    ip_trim(quot);
    return true;
}

std::pair<IntPoly, Int> to_intpoly(const RatPoly& f) {
    Int den(1);
    for (const Rat& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    IntPoly r(f.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Rat& c = f.coeffs()[i];
        Int scale;
        mpz_divexact(scale.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        r[i] = c.get_num() * scale;
    }
    return {std::move(r), std::move(den)};
}

RatPoly to_ratpoly(const IntPoly& f, const Int& den) {
    std::vector<Rat> coeffs(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) coeffs[i] = make_rat(f[i], den);
    return RatPoly::from_coeffs(std::move(coeffs));
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
    std::uint64_t r = 1 % q;
    a %= q;
    while (e) {
        if (e & 1) r = mulmod(r, a, q);
        a = mulmod(a, a, q);
        e >>= 1;
    }
    return r;
}

static std::uint64_t invmod(std::uint64_t a, std::uint64_t q) {
    return powmod(a, q - 2, q);  // q prime
}

std::vector<std::uint64_t> ip_mod(const IntPoly& f, std::uint64_t q) {
    std::vector<std::uint64_t> r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), static_cast<unsigned long>(q));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

static void zp_make_monic(std::vector<std::uint64_t>& f, std::uint64_t q) {
    if (f.empty() || f.back() == 1) return;
    std::uint64_t inv = invmod(f.back(), q);
    for (auto& c : f) c = mulmod(c, inv, q);
}

std::vector<std::uint64_t> zp_gcd_monic(std::vector<std::uint64_t> a,
                                        std::vector<std::uint64_t> b,
                                        std::uint64_t q) {
    while (!b.empty()) {
        zp_make_monic(b, q);
        // a mod b, b monic
        while (a.size() >= b.size()) {
            std::uint64_t top = a.back();
            std::size_t shift = a.size() - b.size();
            if (top != 0) {
                for (std::size_t j = 0; j + 1 < b.size(); ++j) {
                    std::uint64_t t = mulmod(top, b[j], q);
                    std::uint64_t& dst = a[shift + j];
                    dst = (dst >= t) ? dst - t : dst + q - t;
                }
            }
            a.pop_back();
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        std::swap(a, b);
    }
    zp_make_monic(a, q);
    return a;
}

std::uint64_t nth_gcd_prime(std::size_t i) {
    static std::vector<std::uint64_t> primes;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (primes.empty()) primes.push_back(4611686018427387907ULL);  // first prime above 2^62
    while (primes.size() <= i) {
        Int next(primes.back());
        mpz_nextprime(next.get_mpz_t(), next.get_mpz_t());
        primes.push_back(next.get_ui());
    }
    return primes[i];
}

/// CRT state: coefficients in the symmetric range modulo the product of the
/// primes seen so far.
namespace {
struct CrtPoly {
    std::vector<Int> coeffs;
    Int modulus{1};

    void reset(const std::vector<std::uint64_t>& image, std::uint64_t q, const Int& scale) {
        modulus = Int(static_cast<unsigned long>(q));
        coeffs.assign(image.size(), Int(0));
        unsigned long s = mpz_fdiv_ui(scale.get_mpz_t(), static_cast<unsigned long>(q));
        for (std::size_t i = 0; i < image.size(); ++i) {
            Int v(static_cast<unsigned long>(mulmod(image[i], s, q)));
            if (v * 2 > modulus) v -= modulus;
            coeffs[i] = v;
        }
    }

    void combine(const std::vector<std::uint64_t>& image, std::uint64_t q, const Int& scale) {
        unsigned long s = mpz_fdiv_ui(scale.get_mpz_t(), static_cast<unsigned long>(q));
        std::uint64_t minv =
            invmod(mpz_fdiv_ui(modulus.get_mpz_t(), static_cast<unsigned long>(q)), q);
        Int next_mod = modulus * Int(static_cast<unsigned long>(q));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            std::uint64_t want = i < image.size() ? mulmod(image[i], s, q) : 0;
            std::uint64_t have = mpz_fdiv_ui(coeffs[i].get_mpz_t(), static_cast<unsigned long>(q));
            std::uint64_t delta = mulmod(want >= have ? want - have : want + q - have, minv, q);
            coeffs[i] += modulus * Int(static_cast<unsigned long>(delta));
            if (coeffs[i] * 2 > next_mod) coeffs[i] -= next_mod;
        }
        modulus = next_mod;
    }

    IntPoly lifted() const {
        IntPoly r = coeffs;
        ip_trim(r);
        return r;
    }
};
}  // namespace

IntPoly ip_gcd(const IntPoly& f_in, const IntPoly& g_in) {
    if (f_in.empty() && g_in.empty())
        throw PreconditionError("gcd of two zero polynomials is undefined");
    if (f_in.empty()) return ip_primitive(g_in);
    if (g_in.empty()) return ip_primitive(f_in);

    IntPoly f = ip_primitive(f_in);
    IntPoly g = ip_primitive(g_in);
    if (ip_deg(f) == 0 || ip_deg(g) == 0) return {Int(1)};

    Int lead_gcd;
    mpz_gcd(lead_gcd.get_mpz_t(), f.back().get_mpz_t(), g.back().get_mpz_t());

    CrtPoly crt;
    int image_deg = -1;
    IntPoly last_candidate;
    bool have_last = false;

    constexpr std::size_t kMaxPrimes = 100000;
    for (std::size_t i = 0; i < kMaxPrimes; ++i) {
        std::uint64_t q = nth_gcd_prime(i);
        if (mpz_fdiv_ui(f.back().get_mpz_t(), q) == 0 ||
            mpz_fdiv_ui(g.back().get_mpz_t(), q) == 0)
            continue;
        auto hq = zp_gcd_monic(ip_mod(f, q), ip_mod(g, q), q);
        int dq = static_cast<int>(hq.size()) - 1;
        if (dq == 0) return {Int(1)};  // certificate: gcd degree is 0
        if (image_deg < 0 || dq < image_deg) {
            image_deg = dq;
            crt.reset(hq, q, lead_gcd);
            have_last = false;
        } else if (dq == image_deg) {
            crt.combine(hq, q, lead_gcd);
        } else {
            continue;  // unlucky prime, image too large
        }
        IntPoly candidate = ip_primitive(crt.lifted());
        if (have_last && candidate != last_candidate) {
            last_candidate = std::move(candidate);
            continue;  // still converging
        }
        IntPoly quot;
        if (ip_divide_exact(f, candidate, quot) && ip_divide_exact(g, candidate, quot))
            return candidate;
        last_candidate = std::move(candidate);
        have_last = true;
    }
    throw StructuralFailure("modular polynomial gcd failed to converge", -1);
}

}  // namespace detail
}  // namespace gcditer
