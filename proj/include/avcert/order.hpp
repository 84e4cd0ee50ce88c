#ifndef AVCERT_ORDER_HPP
#define AVCERT_ORDER_HPP

#include <memory>
#include <string>
#include <vector>

#include "avcert/lattice.hpp"
#include "avcert/number_field.hpp"

namespace avcert {

class OrderElement;

// An order in a number field: a full-rank subring presented by a canonical
// HNF Z-basis (b_0 = 1 first) together with integer structure constants
// b_i * b_j = sum_k c_ijk b_k. Commutativity and associativity of the
// structure constants are checked on all basis triples at construction.
// Cheap to copy; the payload is shared and immutable.
class OrderRing {
  public:
    OrderRing() = default;

    // rows: any rational generating rows in power-basis coordinates; they must
    // span a full-rank multiplicatively closed lattice containing 1.
    static OrderRing from_field_basis(NumberFieldPtr field, const RatMat& rows);

    bool valid() const { return p_ != nullptr; }
    std::size_t rank() const;
    const NumberField& field() const;
    NumberFieldPtr field_ptr() const;

    // n x n rational matrix, row i = basis element b_i in power-basis coords.
    const RatMat& basis_in_field() const;
    Lattice lattice_in_field() const;
    const std::vector<std::string>& basis_labels() const;

    // Structure constant c_ijk and the multiplication matrix of b_i
    // (row j = coordinates of b_i * b_j).
    const Int& structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
    const IntMat& basis_mult_matrix(std::size_t i) const;

    // Multiplication matrix of an arbitrary element of the fraction field in
    // order coordinates: coords(a * y) = y * mult_matrix(a).
    RatMat mult_matrix(const RatVec& a) const;
    RatVec mul(const RatVec& a, const RatVec& b) const;

    RatVec to_field(const RatVec& order_coords) const;
    RatVec from_field(const RatVec& field_coords) const;

    OrderElement element(RatVec coords) const;
    OrderElement element_from_field(const RatVec& field_coords) const;
    OrderElement one() const;
    OrderElement zero() const;

    std::string render(const RatVec& coords) const;

    friend bool operator==(const OrderRing& a, const OrderRing& b);

  private:
    struct Impl;
    std::shared_ptr<const Impl> p_;
};

// An element of an order's fraction field, held in order-basis coordinates.
// Integral (a member of the order) iff every coordinate is an integer.
class OrderElement {
  public:
    OrderElement() = default;
    OrderElement(OrderRing owner, RatVec coords);

    const OrderRing& owner() const { return owner_; }
    const RatVec& coords() const { return coords_; }
    bool is_integral() const;
    bool is_zero() const { return avcert::is_zero(coords_); }

    OrderElement operator+(const OrderElement& o) const;
    OrderElement operator-(const OrderElement& o) const;
    OrderElement operator*(const OrderElement& o) const;
    OrderElement scaled(const Rat& c) const;
    friend bool operator==(const OrderElement& a, const OrderElement& b);

    std::string to_string() const { return owner_.render(coords_); }

  private:
    OrderRing owner_;
    RatVec coords_;
};

// The ring generated over Z by 1 and the given integral generators
// (polynomials in the field generator); errors if the generated lattice does
// not stabilize at full rank in the field.
OrderRing order_from_minpoly(const UniPoly& minpoly, const std::vector<UniPoly>& generators,
                             const std::string& symbol);

}  // namespace avcert

#endif
