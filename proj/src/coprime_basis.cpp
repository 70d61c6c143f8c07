#include "gcditer/coprime_basis.hpp"

#include <algorithm>

#include "gcditer/errors.hpp"

namespace gcditer {

namespace {

// One refinement pass: split any pair sharing a nontrivial common divisor.
// Each split strictly lowers the total degree, so the loop terminates.
void refine_polys(std::vector<RatPoly>& work) {
    auto push_unique = [&work](RatPoly p) {
        if (p.is_constant()) return;
        p = p.monic();
        if (std::find(work.begin(), work.end(), p) == work.end()) work.push_back(std::move(p));
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < work.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
                RatPoly g = poly_gcd(work[i], work[j]);
                if (g.is_constant()) continue;
                RatPoly a = work[i], b = work[j];
                work.erase(work.begin() + j);
                work.erase(work.begin() + i);
                RatPoly q;
                a.divide_exact(g, q);
                push_unique(q);
                b.divide_exact(g, q);
                push_unique(q);
                push_unique(std::move(g));
                changed = true;
            }
        }
    }
}

void refine_ints(std::vector<Int>& work) {
    auto push_unique = [&work](const Int& n) {
        if (n <= 1) return;
        if (std::find(work.begin(), work.end(), n) == work.end()) work.push_back(n);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < work.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
                Int g;
                mpz_gcd(g.get_mpz_t(), work[i].get_mpz_t(), work[j].get_mpz_t());
                if (g == 1) continue;
                Int a = work[i], b = work[j];
                work.erase(work.begin() + j);
                work.erase(work.begin() + i);
                push_unique(a / g);
                push_unique(b / g);
                push_unique(g);
                changed = true;
            }
        }
    }
}

}  // namespace

CoprimeBasis coprime_basis(const std::vector<RatPoly>& inputs) {
    for (const RatPoly& f : inputs) {
        if (f.is_zero()) throw PreconditionError("coprime basis of a zero polynomial");
        if (f.is_constant()) throw PreconditionError("coprime basis of a constant polynomial");
    }
    std::vector<RatPoly> work;
    for (const RatPoly& f : inputs) {
        RatPoly m = f.monic();
        if (std::find(work.begin(), work.end(), m) == work.end()) work.push_back(std::move(m));
    }
    refine_polys(work);
    std::sort(work.begin(), work.end(), [](const RatPoly& a, const RatPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i)
            if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)])
                return a[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(i)];
        return false;
    });

    CoprimeBasis out;
    out.basis = std::move(work);
    for (const RatPoly& f : inputs) {
        std::vector<unsigned long> row(out.basis.size(), 0);
        RatPoly rest = f;
        for (std::size_t i = 0; i < out.basis.size(); ++i) {
            RatPoly q;
            while (rest.divide_exact(out.basis[i], q)) {
                rest = q;
                ++row[i];
            }
        }
        if (!rest.is_constant())
            throw StructuralFailure("factor refinement left a non-constant residue", -1);
        out.exponents.push_back(std::move(row));
        out.constants.push_back(rest.is_zero() ? Rat(0) : rest[0]);
    }
    return out;
}

IntCoprimeBasis int_coprime_basis(const std::vector<Int>& inputs) {
    for (const Int& n : inputs)
        if (sgn(n) == 0) throw PreconditionError("coprime basis of zero");
    std::vector<Int> work;
    for (const Int& n : inputs) {
        Int m = abs(n);
        if (m > 1 && std::find(work.begin(), work.end(), m) == work.end())
            work.push_back(std::move(m));
    }
    refine_ints(work);
    std::sort(work.begin(), work.end());

    IntCoprimeBasis out;
    out.basis = std::move(work);
    for (const Int& n : inputs) {
        std::vector<unsigned long> row(out.basis.size(), 0);
        Int rest = abs(n);
        for (std::size_t i = 0; i < out.basis.size(); ++i) {
            while (mpz_divisible_p(rest.get_mpz_t(), out.basis[i].get_mpz_t())) {
                mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), out.basis[i].get_mpz_t());
                ++row[i];
            }
        }
        if (rest != 1)
            throw StructuralFailure("integer factor refinement left a residue", -1);
        out.exponents.push_back(std::move(row));
        out.signs.push_back(sgn(n));
    }
    return out;
}

IndependenceResult solve_dependence(const std::vector<std::pair<Int, Int>>& rows,
                                    bool first_negative, bool second_negative) {
    // e * r = f * s for every row forces r : s = f_i : e_i, one common ratio.
    Int p(0), q(0);  // candidate r = p, s = q
    bool any = false;
    for (const auto& [e, f] : rows) {
        if (sgn(e) == 0 && sgn(f) == 0) continue;
        if (sgn(e) == 0 || sgn(f) == 0) return {};   // ratio would be 0 or infinite
        if (sgn(e) != sgn(f)) return {};             // ratio would be negative
        if (!any) {
            Int g;
            mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), f.get_mpz_t());
            p = abs(f) / g;
            q = abs(e) / g;
            any = true;
        } else if (e * p != f * q) {
            return {};
        }
    }
    if (!any) throw PreconditionError("independence test on two units");

    unsigned long r = p.get_ui(), s = q.get_ui();
    // magnitudes now agree at (r, s); signs may force the even multiple
    int sign_first = first_negative && (r % 2 == 1) ? -1 : 1;
    int sign_second = second_negative && (s % 2 == 1) ? -1 : 1;
    if (sign_first != sign_second) {
        r *= 2;
        s *= 2;
    }
    return {false, r, s};
}

}  // namespace gcditer
