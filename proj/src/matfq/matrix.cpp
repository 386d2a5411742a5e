#include <algorithm>
#include <sstream>

#include "dcr/error.hpp"
#include "dcr/kernels.hpp"
#include "dcr/matfq.hpp"

namespace dcr::matfq {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  gfq::require_same_field(*a.field(), *b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch(std::string(op) + ": shape mismatch");
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows_ * cols_) throw DimensionMismatch("entry count does not match shape");
  for (Elem e : a_)
    if (e >= field_->q()) throw IndexOutOfRange("matrix entry outside the field");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field,
                         std::initializer_list<std::initializer_list<Elem>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Elem> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(std::move(field), r, c, std::move(entries));
}

Matrix Matrix::column(FieldPtr field, const Vector& v) {
  return Matrix(std::move(field), v.size(), 1, v);
}

Matrix Matrix::parse(FieldPtr field, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t r = 0, c = 0;
  if (!(in >> r >> c)) throw ParseError("matrix dump must start with rows cols");
  std::vector<Elem> entries(r * c);
  for (auto& e : entries)
    if (!(in >> e)) throw ParseError("matrix dump truncated");
  return Matrix(std::move(field), r, c, std::move(entries));
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Elem e) { return e == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix out = *this;
  kernels::scale(*field_, c, out.a_);
  return out;
}

Vector Matrix::vec() const {
  Vector v(rows_ * cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (std::size_t r = 0; r < rows_; ++r) v[c * rows_ + r] = (*this)(r, c);
  return v;
}

Matrix Matrix::unvec(FieldPtr field, std::size_t rows, std::size_t cols, const Vector& v) {
  if (v.size() != rows * cols) throw DimensionMismatch("unvec: length mismatch");
  Matrix m(std::move(field), rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = v[c * rows + r];
  return m;
}

std::string Matrix::dump() const {
  std::ostringstream out;
  out << rows_ << ' ' << cols_ << '\n';
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j);
    out << '\n';
  }
  return out.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  gfq::require_same_field(*a.field_, *b.field_);
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) kernels::axpy(*a.field_, a(i, k), b.row(k), c.row(i));
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "sum");
  Matrix c = a;
  kernels::axpy(*a.field_, 1, b.a_, c.a_);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "difference");
  Matrix c = a;
  kernels::axpy(*a.field_, a.field_->neg(1), b.a_, c.a_);
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_ &&
         a.field_->same_as(*b.field_);
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (v.size() != m.cols()) throw DimensionMismatch("matrix-vector: length mismatch");
  const gfq::Field& f = *m.field();
  Vector out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc = f.add(acc, f.mul(m(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

Echelon rref(const Matrix& m) {
  const gfq::Field& f = *m.field();
  Echelon e{m, 0, {}};
  Matrix& a = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(row).begin());
    kernels::scale(f, f.inv(a(row, col)), a.row(row).subspan(col));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      kernels::axpy(f, f.neg(a(r, col)), a.row(row).subspan(col), a.row(r).subspan(col));
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.rank = row;
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const gfq::Field& f = *m.field();
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.rank; ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const Echelon e = rref(aug);
  if (e.rank < n || e.pivots[n - 1] != n - 1) throw Singular("matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Matrix power(const Matrix& m, std::uint64_t e) {
  if (!m.is_square()) throw DimensionMismatch("power of a non-square matrix");
  Matrix result = Matrix::identity(m.field(), m.rows());
  Matrix base = m;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

bool is_nilpotent(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("nilpotency of a non-square matrix");
  Matrix x = m;
  for (std::size_t exponent = 1; exponent < m.rows(); exponent *= 2) x = x * x;
  return x.is_zero();
}

Elem determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const gfq::Field& f = *m.field();
  Matrix a = m;
  const std::size_t n = a.rows();
  Elem det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(col).begin());
      det = f.neg(det);
    }
    det = f.mul(det, a(col, col));
    const Elem inv = f.inv(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      kernels::axpy(f, f.neg(f.mul(a(r, col), inv)), a.row(col), a.row(r));
    }
  }
  return det;
}

std::vector<Matrix> hom_space(std::span<const Matrix> a_gens, std::span<const Matrix> b_gens) {
  if (a_gens.size() != b_gens.size() || a_gens.empty())
    throw DimensionMismatch("hom_space: generator lists must be nonempty and of equal length");
  const FieldPtr& field = a_gens.front().field();
  const gfq::Field& f = *field;
  const std::size_t n = a_gens.front().rows();
  const std::size_t m = b_gens.front().rows();
  for (std::size_t g = 0; g < a_gens.size(); ++g) {
    const Matrix& a = a_gens[g];
    const Matrix& b = b_gens[g];
    gfq::require_same_field(*field, *a.field());
    gfq::require_same_field(*field, *b.field());
    if (a.rows() != n || a.cols() != n || b.rows() != m || b.cols() != m)
      throw DimensionMismatch("hom_space: inconsistent generator dimensions");
  }

  // Unknown T(r, c) sits at index c * m + r. One equation per generator and
  // entry (r, c) of T A - B T.
  const std::size_t unknowns = m * n;
  Matrix system(field, a_gens.size() * unknowns, unknowns);
  std::size_t eq = 0;
  for (std::size_t g = 0; g < a_gens.size(); ++g) {
    const Matrix& a = a_gens[g];
    const Matrix& b = b_gens[g];
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < m; ++r, ++eq) {
        for (std::size_t l = 0; l < n; ++l)
          system(eq, l * m + r) = f.add(system(eq, l * m + r), a(l, c));
        for (std::size_t l = 0; l < m; ++l)
          system(eq, c * m + l) = f.sub(system(eq, c * m + l), b(r, l));
      }
  }
  std::vector<Matrix> out;
  for (const auto& v : kernel_basis(system)) out.push_back(Matrix::unvec(field, m, n, v));
  return out;
}

Subspace::Subspace(FieldPtr field, std::size_t ambient_dim)
    : field_(std::move(field)), n_(ambient_dim) {}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != n_) throw DimensionMismatch("subspace: vector length mismatch");
  const gfq::Field& f = *field_;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Elem c = v[pivots_[i]];
    if (c != 0) kernels::axpy(f, f.neg(c), basis_[i], v);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const {
  const Vector w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

bool Subspace::insert(const Vector& v) {
  const gfq::Field& f = *field_;
  Vector w = reduce(v);
  const auto it = std::find_if(w.begin(), w.end(), [](Elem e) { return e != 0; });
  if (it == w.end()) return false;
  const std::size_t piv = static_cast<std::size_t>(it - w.begin());
  kernels::scale(f, f.inv(w[piv]), w);
  for (auto& b : basis_)
    if (b[piv] != 0) kernels::axpy(f, f.neg(b[piv]), w, b);
  basis_.push_back(std::move(w));
  pivots_.push_back(piv);
  return true;
}

}  // namespace dcr::matfq
