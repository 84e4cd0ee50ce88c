#include "avcert/order.hpp"

namespace avcert {

struct OrderRing::Impl {
    NumberFieldPtr field;
    RatMat basis;      // n x n, rows = basis in power-basis coordinates
    RatMat basis_inv;  // inverse of basis
    std::vector<IntMat> mult;
    std::vector<std::string> labels;
};

namespace {

void check_structure_constants(const std::vector<IntMat>& mult, std::size_t n)
{
    // b_0 acts as the identity.
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (mult[0].at(j, k) != Int(j == k ? 1 : 0))
                throw Error("order: b_0 is not a multiplicative identity");
    // Commutativity: c_ijk == c_jik.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (mult[i].at(j, k) != mult[j].at(i, k))
                    throw Error("order: structure constants are not commutative");
    // Associativity on all basis triples: (b_i b_j) b_k == b_i (b_j b_k).
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntVec bij = mult[i].row(j);
            for (std::size_t k = 0; k < n; ++k) {
                IntVec lhs = row_times_mat(bij, mult[k]);
                IntVec bjk = mult[j].row(k);
                IntVec rhs = row_times_mat(bjk, mult[i]);
                if (lhs != rhs) throw Error("order: structure constants are not associative");
            }
        }
}

}  // namespace

OrderRing OrderRing::from_field_basis(NumberFieldPtr field, const RatMat& rows)
{
    if (!field) throw Error("OrderRing: null field");
    const std::size_t n = field->degree();
    if (rows.cols() != n) throw Error("OrderRing: basis width does not match field degree");
    Lattice lat = Lattice::from_rows(rows);
    if (lat.rank() != n) throw Error("OrderRing: basis does not have full rank in the field");
    RatMat basis = lat.basis_rows();

    // An order contains 1; in canonical HNF the first basis row must be it.
    if (basis.row(0) != field->one())
        throw Error("OrderRing: lattice does not contain 1 as its first HNF basis vector");

    auto inv = basis.inverse();
    if (!inv) throw Error("OrderRing: basis not invertible");

    auto impl = std::make_shared<Impl>();
    impl->field = std::move(field);
    impl->basis = basis;
    impl->basis_inv = *inv;

    // Structure constants: products of basis elements expressed in the basis
    // must be integral, otherwise the lattice is not multiplicatively closed.
    impl->mult.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        IntMat mi(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            RatVec prod = impl->field->mul(basis.row(i), basis.row(j));
            RatVec coords = row_times_mat(prod, impl->basis_inv);
            for (std::size_t k = 0; k < n; ++k) {
                if (!is_integer(coords[k]))
                    throw Error("OrderRing: lattice is not closed under multiplication");
                mi.at(j, k) = coords[k].get_num();
            }
        }
        impl->mult[i] = std::move(mi);
    }
    check_structure_constants(impl->mult, n);

    impl->labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) impl->labels.push_back(impl->field->render(basis.row(i)));

    OrderRing r;
    r.p_ = std::move(impl);
    return r;
}

std::size_t OrderRing::rank() const { return p_->basis.rows(); }
const NumberField& OrderRing::field() const { return *p_->field; }
NumberFieldPtr OrderRing::field_ptr() const { return p_->field; }
const RatMat& OrderRing::basis_in_field() const { return p_->basis; }
const std::vector<std::string>& OrderRing::basis_labels() const { return p_->labels; }

Lattice OrderRing::lattice_in_field() const { return Lattice::from_rows(p_->basis); }

const Int& OrderRing::structure_constant(std::size_t i, std::size_t j, std::size_t k) const
{
    return p_->mult[i].at(j, k);
}

const IntMat& OrderRing::basis_mult_matrix(std::size_t i) const { return p_->mult[i]; }

RatMat OrderRing::mult_matrix(const RatVec& a) const
{
    const std::size_t n = rank();
    if (a.size() != n) throw Error("OrderRing::mult_matrix: size mismatch");
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m.at(j, k) += a[i] * Rat(p_->mult[i].at(j, k));
    }
    return m;
}

RatVec OrderRing::mul(const RatVec& a, const RatVec& b) const
{
    return row_times_mat(b, mult_matrix(a));
}

RatVec OrderRing::to_field(const RatVec& order_coords) const
{
    return row_times_mat(order_coords, p_->basis);
}

RatVec OrderRing::from_field(const RatVec& field_coords) const
{
    return row_times_mat(field_coords, p_->basis_inv);
}

OrderElement OrderRing::element(RatVec coords) const
{
    return OrderElement(*this, std::move(coords));
}

OrderElement OrderRing::element_from_field(const RatVec& field_coords) const
{
    return OrderElement(*this, from_field(field_coords));
}

OrderElement OrderRing::one() const
{
    RatVec v(rank(), Rat(0));
    v[0] = 1;
    return element(std::move(v));
}

OrderElement OrderRing::zero() const { return element(RatVec(rank(), Rat(0))); }

std::string OrderRing::render(const RatVec& coords) const
{
    return p_->field->render(to_field(coords));
}

bool operator==(const OrderRing& a, const OrderRing& b)
{
    if (a.p_ == b.p_) return true;
    if (!a.p_ || !b.p_) return false;
    return *a.p_->field == *b.p_->field && a.p_->basis == b.p_->basis;
}

OrderElement::OrderElement(OrderRing owner, RatVec coords)
    : owner_(std::move(owner)), coords_(std::move(coords))
{
    if (coords_.size() != owner_.rank()) throw Error("OrderElement: coordinate size mismatch");
}

bool OrderElement::is_integral() const
{
    for (const auto& c : coords_)
        if (!is_integer(c)) return false;
    return true;
}

OrderElement OrderElement::operator+(const OrderElement& o) const
{
    if (!(owner_ == o.owner_)) throw Error("OrderElement: owner mismatch");
    RatVec v(coords_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.coords_[i];
    return OrderElement(owner_, std::move(v));
}

OrderElement OrderElement::operator-(const OrderElement& o) const
{
    if (!(owner_ == o.owner_)) throw Error("OrderElement: owner mismatch");
    RatVec v(coords_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.coords_[i];
    return OrderElement(owner_, std::move(v));
}

OrderElement OrderElement::operator*(const OrderElement& o) const
{
    if (!(owner_ == o.owner_)) throw Error("OrderElement: owner mismatch");
    return OrderElement(owner_, owner_.mul(coords_, o.coords_));
}

OrderElement OrderElement::scaled(const Rat& c) const
{
    RatVec v(coords_);
    for (auto& x : v) x *= c;
    return OrderElement(owner_, std::move(v));
}

bool operator==(const OrderElement& a, const OrderElement& b)
{
    return a.owner_ == b.owner_ && a.coords_ == b.coords_;
}

OrderRing order_from_minpoly(const UniPoly& minpoly, const std::vector<UniPoly>& generators,
                             const std::string& symbol)
{
    auto field = std::make_shared<const NumberField>(minpoly, symbol);
    const std::size_t d = field->degree();

    std::vector<RatVec> gen_coords;
    gen_coords.reserve(generators.size());
    for (const auto& g : generators) gen_coords.push_back(field->from_poly(g));

    std::vector<RatVec> rows;
    rows.push_back(field->one());
    for (const auto& g : gen_coords) rows.push_back(g);
    Lattice lat = Lattice::from_rows(RatMat::from_rows(rows, d));

    // Close under multiplication by the generators. Integral generators
    // stabilize quickly; a cap catches non-integral input.
    const int kMaxRounds = 64;
    for (int round = 0;; ++round) {
        if (round == kMaxRounds)
            throw Error("order_from_minpoly: generators do not generate a finite-rank ring");
        std::vector<RatVec> next;
        for (std::size_t i = 0; i < lat.rank(); ++i) {
            RatVec b = lat.basis_row(i);
            next.push_back(b);
            for (const auto& g : gen_coords) next.push_back(field->mul(b, g));
        }
        Lattice closed = Lattice::from_rows(RatMat::from_rows(next, d));
        if (closed == lat) break;
        lat = std::move(closed);
    }
    if (lat.rank() != d)
        throw Error("order_from_minpoly: generated ring has rank " + std::to_string(lat.rank()) +
                    ", expected " + std::to_string(d));
    return OrderRing::from_field_basis(field, lat.basis_rows());
}

}  // namespace avcert
