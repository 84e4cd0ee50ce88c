#ifndef AVCERT_NUMBER_FIELD_HPP
#define AVCERT_NUMBER_FIELD_HPP

#include <memory>
#include <optional>
#include <string>

#include "avcert/matrix.hpp"
#include "avcert/unipoly.hpp"

namespace avcert {

// Q[x]/(minpoly), elements as coordinate rows in the power basis
// 1, x, ..., x^{d-1}. Irreducibility of the fixed minimal polynomials is a
// caller-asserted fact; arithmetic only needs monicity.
class NumberField {
  public:
    NumberField(UniPoly minpoly, std::string symbol);

    std::size_t degree() const { return degree_; }
    const UniPoly& minpoly() const { return minpoly_; }
    const std::string& symbol() const { return symbol_; }

    RatVec zero() const { return RatVec(degree_, Rat(0)); }
    RatVec one() const;
    RatVec generator() const;  // the class of x (= degree-1 error if d == 1? no: reduces)
    RatVec from_poly(const UniPoly& p) const;
    UniPoly to_poly(const RatVec& a) const;

    RatVec add(const RatVec& a, const RatVec& b) const;
    RatVec mul(const RatVec& a, const RatVec& b) const;
    RatVec scale(const RatVec& a, const Rat& c) const;
    std::optional<RatVec> inverse(const RatVec& a) const;  // empty for 0

    // Row j = coordinates of a * x^j: y * mult_matrix(a) = coords(a * y).
    RatMat mult_matrix(const RatVec& a) const;
    Rat norm(const RatVec& a) const;  // det of mult_matrix

    std::string render(const RatVec& a) const;

    friend bool operator==(const NumberField& a, const NumberField& b)
    {
        return a.minpoly_ == b.minpoly_;
    }

  private:
    UniPoly minpoly_;
    std::string symbol_;
    std::size_t degree_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

}  // namespace avcert

#endif
