#include "avcert/number_field.hpp"

namespace avcert {

NumberField::NumberField(UniPoly minpoly, std::string symbol)
    : minpoly_(std::move(minpoly)), symbol_(std::move(symbol))
{
    if (minpoly_.degree() < 1) throw Error("NumberField: minimal polynomial must be nonconstant");
    if (!minpoly_.is_monic()) throw Error("NumberField: minimal polynomial must be monic");
    degree_ = static_cast<std::size_t>(minpoly_.degree());
}

RatVec NumberField::one() const
{
    RatVec v = zero();
    v[0] = 1;
    return v;
}

RatVec NumberField::generator() const { return from_poly(UniPoly::x()); }

RatVec NumberField::from_poly(const UniPoly& p) const
{
    UniPoly r = p.mod(minpoly_);
    RatVec v = zero();
    for (std::size_t k = 0; k < degree_; ++k) v[k] = r.coeff(k);
    return v;
}

UniPoly NumberField::to_poly(const RatVec& a) const
{
    if (a.size() != degree_) throw Error("NumberField: coordinate size mismatch");
    return UniPoly(a);
}

RatVec NumberField::add(const RatVec& a, const RatVec& b) const
{
    if (a.size() != degree_ || b.size() != degree_) throw Error("NumberField::add: size");
    RatVec v(degree_);
    for (std::size_t i = 0; i < degree_; ++i) v[i] = a[i] + b[i];
    return v;
}

RatVec NumberField::mul(const RatVec& a, const RatVec& b) const
{
    return from_poly(to_poly(a) * to_poly(b));
}

RatVec NumberField::scale(const RatVec& a, const Rat& c) const
{
    RatVec v(a);
    for (auto& x : v) x *= c;
    return v;
}

std::optional<RatVec> NumberField::inverse(const RatVec& a) const
{
    if (is_zero(a)) return std::nullopt;
    RatMat m = mult_matrix(a);
    auto x = m.solve_left(one());
    if (!x) throw Error("NumberField::inverse: zero divisor (minpoly not irreducible?)");
    return x;
}

RatMat NumberField::mult_matrix(const RatVec& a) const
{
    if (a.size() != degree_) throw Error("NumberField::mult_matrix: size");
    RatMat m(degree_, degree_);
    RatVec cur(a);
    for (std::size_t j = 0;; ++j) {
        m.set_row(j, cur);
        if (j + 1 == degree_) break;
        // cur <- cur * x mod minpoly
        cur = from_poly(to_poly(cur) * UniPoly::x());
    }
    return m;
}

Rat NumberField::norm(const RatVec& a) const { return mult_matrix(a).det(); }

std::string NumberField::render(const RatVec& a) const { return to_poly(a).to_string(symbol_); }

}  // namespace avcert
