#ifndef AVCERT_UNIPOLY_HPP
#define AVCERT_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "avcert/matrix.hpp"

namespace avcert {

// Univariate polynomial over Q, coefficients ascending by degree, no trailing
// zeros.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(RatVec coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rat& c) { return UniPoly(RatVec{c}); }
    static UniPoly x();
    // coeffs listed ascending: from_ints({-1, -2, 1, 1}) = x^3 + x^2 - 2x - 1
    static UniPoly from_ints(const std::vector<long>& coeffs);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    Rat leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly scaled(const Rat& c) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    // Euclidean division: *this = q * divisor + r, deg r < deg divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    UniPoly mod(const UniPoly& divisor) const { return divmod(divisor).second; }
    bool divides(const UniPoly& other) const;

    Rat eval(const Rat& x) const;
    // Horner evaluation at a square rational matrix.
    RatMat eval(const RatMat& m) const;
    UniPoly pow(unsigned long e) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    RatVec c_;
};

// Characteristic polynomial (monic) of a square integer matrix, computed by
// the Faddeev-LeVerrier recurrence over Q.
UniPoly charpoly(const IntMat& m);

// Minimal polynomial: first monic dependence among I, m, m^2, ...
UniPoly minpoly(const IntMat& m);

}  // namespace avcert

#endif
