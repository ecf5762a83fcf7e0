#pragma once

// Dense exact linear algebra over a coefficient field.

#include <cstddef>
#include <vector>

#include "gradix/coeff.hpp"

namespace gradix {

using Vector = std::vector<FieldElem>;

Vector zero_vector(const Field& field, std::size_t n);
bool is_zero_vector(const Vector& v);

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Vector apply(const Vector& v) const;
  Matrix operator*(const Matrix& rhs) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Rows of `a` followed by rows of `b`.
  static Matrix stack(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElem> data_;
};

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of row i
};

/// Reduced row echelon form.
Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {v : m v = 0}, one vector per free column, in reduced form.
std::vector<Vector> kernel(const Matrix& m);

/// Incrementally built subspace of k^n in echelon form.
class Subspace {
 public:
  Subspace(Field field, std::size_t dimension) : field_(field), n_(dimension) {}

  std::size_t ambient_dimension() const { return n_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<Vector>& basis() const { return rows_; }

  /// v minus its projection onto the echelon pivots.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  /// Returns true if v was independent and has been added.
  bool insert(const Vector& v);

 private:
  Field field_;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace gradix
