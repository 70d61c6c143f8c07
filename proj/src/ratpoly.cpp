#include "gcditer/ratpoly.hpp"

#include "gcditer/errors.hpp"
#include "gcditer/intpoly.hpp"

namespace gcditer {

void RatPoly::trim() {
    while (!coeffs_.empty() && gcditer::is_zero(coeffs_.back())) coeffs_.pop_back();
}

RatPoly RatPoly::from_coeffs(std::vector<Rat> ascending) {
    RatPoly p;
    p.coeffs_ = std::move(ascending);
    p.trim();
    return p;
}

RatPoly RatPoly::variable() { return monomial(Rat(1), 1); }

RatPoly RatPoly::monomial(Rat c, std::size_t e) {
    RatPoly p;
    if (!gcditer::is_zero(c)) {
        p.coeffs_.assign(e + 1, Rat(0));
        p.coeffs_[e] = std::move(c);
    }
    return p;
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (Rat& c : r.coeffs_) c = -c;
    return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (gcditer::is_zero(a.coeffs_[i])) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RatPoly::from_coeffs(std::move(r));
}

RatPoly& RatPoly::operator*=(const RatPoly& o) { return *this = *this * o; }

RatPoly& RatPoly::operator*=(const Rat& s) {
    if (gcditer::is_zero(s)) {
        coeffs_.clear();
        return *this;
    }
    for (Rat& c : coeffs_) c *= s;
    return *this;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
    if (divisor.is_zero()) throw PreconditionError("division by the zero polynomial");
    if (coeffs_.size() < divisor.coeffs_.size()) return {RatPoly(), *this};
    std::vector<Rat> rem = coeffs_;
    std::vector<Rat> quot(coeffs_.size() - divisor.coeffs_.size() + 1, Rat(0));
    const Rat& lead = divisor.leading();
    for (std::size_t step = quot.size(); step-- > 0;) {
        Rat q = rem[step + divisor.coeffs_.size() - 1] / lead;
        if (gcditer::is_zero(q)) continue;
        for (std::size_t j = 0; j + 1 < divisor.coeffs_.size(); ++j)
            rem[step + j] -= q * divisor.coeffs_[j];
        rem[step + divisor.coeffs_.size() - 1] = 0;
        quot[step] = std::move(q);
    }
    return {from_coeffs(std::move(quot)), from_coeffs(std::move(rem))};
}

bool RatPoly::divide_exact(const RatPoly& divisor, RatPoly& quotient) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) return false;
    quotient = std::move(q);
    return true;
}

bool RatPoly::divisible_by(const RatPoly& divisor) const {
    RatPoly q;
    return divide_exact(divisor, q);
}

RatPoly RatPoly::monic() const {
    if (is_zero()) throw PreconditionError("monic normalization of the zero polynomial");
    RatPoly r = *this;
    const Rat lead = r.leading();
    if (!gcditer::is_one(lead))
        for (Rat& c : r.coeffs_) c /= lead;
    return r;
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) return RatPoly();
    std::vector<Rat> r(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return from_coeffs(std::move(r));
}

RatPoly poly_gcd(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() && g.is_zero())
        throw PreconditionError("gcd(0, 0) is undefined");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant()) return RatPoly(1);
    auto [fi, fd] = detail::to_intpoly(f);
    auto [gi, gd] = detail::to_intpoly(g);
    return detail::to_ratpoly(detail::ip_gcd(fi, gi)).monic();
}

RatPoly poly_pow(const RatPoly& f, unsigned long k) {
    if (k == 0) return RatPoly(1);
    if (f.is_zero()) return RatPoly();
    // power over Z, divide the scale back out at the end
    auto [fi, den] = detail::to_intpoly(f);
    return detail::to_ratpoly(detail::ip_pow(fi, k), int_pow(den, k));
}

Rat poly_eval(const RatPoly& f, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * x + f.coeffs()[i];
    return acc;
}

RatPoly squarefree_part(const RatPoly& f) {
    if (f.is_zero()) throw PreconditionError("squarefree part of the zero polynomial");
    if (f.is_constant()) return RatPoly(1);
    RatPoly g = poly_gcd(f, f.derivative());
    RatPoly q;
    if (!f.divide_exact(g, q))
        throw StructuralFailure("gcd(f, f') does not divide f", -1);
    return q.monic();
}

RatPoly poly_lcm(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) return RatPoly();
    RatPoly q;
    RatPoly prod = f * g;
    if (!prod.divide_exact(poly_gcd(f, g), q))
        throw StructuralFailure("gcd does not divide the product in lcm", -1);
    return q.monic();
}

}  // namespace gcditer
