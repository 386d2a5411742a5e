#pragma once

// Dense exact linear algebra over GF(q).

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dcr/gfq.hpp"

namespace dcr::matfq {

using gfq::Elem;
using gfq::FieldPtr;
using Vector = std::vector<Elem>;

class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);
  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, std::initializer_list<std::initializer_list<Elem>> rows);
  static Matrix column(FieldPtr field, const Vector& v);
  // "rows cols" then one line of encodings per row.
  static Matrix parse(FieldPtr field, std::string_view text);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  std::span<const Elem> entries() const { return a_; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix scaled(Elem c) const;
  // Column-major flattening, the unknown layout of hom_space.
  Vector vec() const;
  static Matrix unvec(FieldPtr field, std::size_t rows, std::size_t cols, const Vector& v);

  std::string dump() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> a_;
};

Vector operator*(const Matrix& m, const Vector& v);

struct Echelon {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form; pivot = first nonzero entry in column order.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of {v : m v = 0}, one vector per free column.
std::vector<Vector> kernel_basis(const Matrix& m);
// Throws Singular (or DimensionMismatch for non-square input).
Matrix inverse(const Matrix& m);
Matrix power(const Matrix& m, std::uint64_t e);
bool is_nilpotent(const Matrix& m);
Elem determinant(const Matrix& m);

// Basis of {T (m x n) : T A_i = B_i T for all i}, with A_i n x n and B_i
// m x m. T is flattened column-major; equations are generator-major.
std::vector<Matrix> hom_space(std::span<const Matrix> a_gens, std::span<const Matrix> b_gens);

// Incrementally maintained subspace of F^n, kept in reduced echelon form.
class Subspace {
 public:
  Subspace(FieldPtr field, std::size_t ambient_dim);

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return n_; }
  // Returns true if v was not already in the span.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  const std::vector<Vector>& basis() const { return basis_; }

 private:
  Vector reduce(Vector v) const;

  FieldPtr field_;
  std::size_t n_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace dcr::matfq
