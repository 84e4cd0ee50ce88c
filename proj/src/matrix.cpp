#include "avcert/matrix.hpp"

#include <sstream>

namespace avcert {

IntMat IntMat::identity(std::size_t n)
{
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows, std::size_t cols)
{
    IntMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error("from_rows: ragged row");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntVec IntMat::row(std::size_t i) const
{
    IntVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void IntMat::set_row(std::size_t i, const IntVec& v)
{
    if (v.size() != cols_) throw Error("set_row: size mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

bool IntMat::is_zero() const
{
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

IntMat IntMat::transpose() const
{
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat IntMat::operator*(const IntMat& other) const
{
    if (cols_ != other.rows_) throw Error("IntMat::operator*: shape mismatch");
    IntMat p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) p.at(i, j) += a * other.at(k, j);
        }
    return p;
}

IntMat IntMat::operator+(const IntMat& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("IntMat::operator+: shape");
    IntMat s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + other.e_[i];
    return s;
}

IntMat IntMat::operator-(const IntMat& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("IntMat::operator-: shape");
    IntMat s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] - other.e_[i];
    return s;
}

IntMat IntMat::operator-() const
{
    IntMat s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = -e_[i];
    return s;
}

IntMat IntMat::scaled(const Int& c) const
{
    IntMat s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = c * e_[i];
    return s;
}

Int IntMat::det() const
{
    if (!is_square()) throw Error("det: matrix not square");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMat a(*this);
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    Int d = a.at(n - 1, n - 1);
    return sign == 1 ? d : Int(-d);
}

RatMat IntMat::to_rat() const
{
    RatMat m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = Rat(at(i, j));
    return m;
}

std::string IntMat::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).get_str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[[]]";
    return os.str();
}

void IntMat::swap_rows(std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::negate_row(std::size_t i)
{
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMat::add_multiple_of_row(std::size_t dst, std::size_t src, const Int& c)
{
    if (c == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void IntMat::combine_rows(std::size_t i, std::size_t j, const Int& a, const Int& b, const Int& c,
                          const Int& d)
{
    for (std::size_t col = 0; col < cols_; ++col) {
        Int ri = at(i, col), rj = at(j, col);
        at(i, col) = a * ri + b * rj;
        at(j, col) = c * ri + d * rj;
    }
}

IntMat mat_vec_to_row(const IntVec& v)
{
    IntMat m(1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m.at(0, j) = v[j];
    return m;
}

IntVec row_times_mat(const IntVec& v, const IntMat& m)
{
    if (v.size() != m.rows()) throw Error("row_times_mat: shape mismatch");
    IntVec out(m.cols());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
    }
    return out;
}

RatMat RatMat::identity(std::size_t n)
{
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows, std::size_t cols)
{
    RatMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error("from_rows: ragged row");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatVec RatMat::row(std::size_t i) const
{
    RatVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void RatMat::set_row(std::size_t i, const RatVec& v)
{
    if (v.size() != cols_) throw Error("set_row: size mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

bool RatMat::is_zero() const
{
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

bool RatMat::is_integral() const
{
    for (const auto& x : e_)
        if (!is_integer(x)) return false;
    return true;
}

RatMat RatMat::transpose() const
{
    RatMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMat RatMat::operator*(const RatMat& other) const
{
    if (cols_ != other.rows_) throw Error("RatMat::operator*: shape mismatch");
    RatMat p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) p.at(i, j) += a * other.at(k, j);
        }
    return p;
}

RatMat RatMat::operator+(const RatMat& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("RatMat::operator+: shape");
    RatMat s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + other.e_[i];
    return s;
}

RatMat RatMat::operator-(const RatMat& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("RatMat::operator-: shape");
    RatMat s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] - other.e_[i];
    return s;
}

RatMat RatMat::scaled(const Rat& c) const
{
    RatMat s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = c * e_[i];
    return s;
}

IntMat RatMat::to_int() const
{
    IntMat m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = avcert::to_int(at(i, j));
    return m;
}

std::string RatMat::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).get_str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[[]]";
    return os.str();
}

namespace {

// In-place row echelon; returns pivot columns. Used by rank/det/solve.
std::vector<std::size_t> echelonize(RatMat& a, Rat* det_accum)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
            if (det_accum) *det_accum = -*det_accum;
        }
        Rat inv = 1 / a.at(r, c);
        if (det_accum) *det_accum *= a.at(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rat f = a.at(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t RatMat::rank() const
{
    RatMat a(*this);
    return echelonize(a, nullptr).size();
}

Rat RatMat::det() const
{
    if (rows_ != cols_) throw Error("det: matrix not square");
    if (rows_ == 0) return 1;
    RatMat a(*this);
    Rat d = 1;
    auto pivots = echelonize(a, &d);
    return pivots.size() == rows_ ? d : Rat(0);
}

std::optional<RatMat> RatMat::inverse() const
{
    if (rows_ != cols_) throw Error("inverse: matrix not square");
    RatMat aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    auto pivots = echelonize(aug, nullptr);
    if (pivots.size() != rows_ || (rows_ > 0 && pivots.back() >= cols_)) return std::nullopt;
    RatMat inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

std::optional<RatVec> RatMat::solve_left(const RatVec& b) const
{
    // x * A = b  <=>  A^T x^T = b^T: echelonize [A^T | b^T].
    if (b.size() != cols_) throw Error("solve_left: size mismatch");
    RatMat aug(cols_, rows_ + 1);
    for (std::size_t i = 0; i < cols_; ++i) {
        for (std::size_t j = 0; j < rows_; ++j) aug.at(i, j) = at(j, i);
        aug.at(i, rows_) = b[i];
    }
    auto pivots = echelonize(aug, nullptr);
    if (!pivots.empty() && pivots.back() == rows_) return std::nullopt;  // inconsistent
    RatVec x(rows_, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, rows_);
    return x;
}

RatVec row_times_mat(const RatVec& v, const RatMat& m)
{
    if (v.size() != m.rows()) throw Error("row_times_mat: shape mismatch");
    RatVec out(m.cols(), Rat(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
    }
    return out;
}

Rat dot(const RatVec& a, const RatVec& b)
{
    if (a.size() != b.size()) throw Error("dot: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace avcert
