/*
 *   Copyright 2026 The pgact Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PGACT_LINALG_HPP
#define PGACT_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgact/field.hpp"

namespace pgact {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
// y += c * x
void axpy(Vector& y, const Scalar& c, const Vector& x);
Vector concat(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);

  Vector apply(const Vector& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  bool is_zero() const;
  std::size_t rank() const;
  // Inverse of a square matrix, or nullopt when singular.
  std::optional<Matrix> inverse() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Reduced row echelon form: nonzero rows only, pivots strictly increasing,
// each pivot entry 1 and the only nonzero entry in its column.
struct Echelon {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(const Field& f, std::size_t ncols, std::vector<Vector> rows);

// Submodule of F^n stored by its canonical RREF basis, so equality of
// submodules is equality of bases.
class Submodule {
 public:
  Submodule() = default;
  static Submodule zero(const Field& f, std::size_t n);
  static Submodule full(const Field& f, std::size_t n);
  static Submodule span(const Field& f, std::size_t n, const std::vector<Vector>& vectors);

  const Field& field() const { return field_; }
  std::size_t ambient_rank() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // v minus its projection along the pivot columns; zero iff v is a member.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  // Coordinates of v in basis(), or nullopt when v is not a member.
  std::optional<Vector> coordinates(const Vector& v) const;
  // The member with the given coordinates.
  Vector combine(const Vector& coords) const;
  bool is_subset_of(const Submodule& o) const;

  friend bool operator==(const Submodule& a, const Submodule& b);
  friend bool operator!=(const Submodule& a, const Submodule& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Submodule span(const Field& f, std::size_t n, const std::vector<Vector>& vectors);
Submodule intersect(const Submodule& a, const Submodule& b);
Submodule sum_of(const Submodule& a, const Submodule& b);
// Image of a submodule of F^cols under m.
Submodule image(const Matrix& m, const Submodule& s);
// Null space of m as a submodule of F^cols.
Submodule kernel(const Matrix& m);

// The matrix sending the i-th basis vector of domain to images[i] and a fixed
// complement of domain (standard vectors) to zero.
Matrix extend_from_basis(const Submodule& domain, const std::vector<Vector>& images, std::size_t target_rank);

// A solution of m x = b with free variables set to zero, or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// ambient / relations, with relations contained in ambient.
struct Quotient {
  // Members of ambient whose classes form a basis of the quotient.
  std::vector<Vector> transversal;
  // dim(quotient) x n: coordinates of the class of an ambient member.
  Matrix projection;
  Submodule relations;
  std::size_t dim() const { return transversal.size(); }
};

Quotient quotient_module(const Submodule& ambient, const Submodule& relations);

// Linear map F^domain -> F^codomain together with a domain submodule on which
// it is meaningful.
struct LinearMap {
  Matrix matrix;
  Submodule domain;

  Vector apply(const Vector& v) const { return matrix.apply(v); }
  Submodule image() const { return pgact::image(matrix, domain); }
  // Injective on domain.
  bool is_injective() const;
};

// Sparse row with strictly increasing column indices and nonzero entries.
using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

// Incremental Gaussian elimination for large sparse homogeneous systems.
class SparseReducer {
 public:
  SparseReducer(Field f, std::size_t ncols) : field_(std::move(f)), ncols_(ncols) {}

  // Adds the equation row . x = 0. Returns false when it was redundant.
  bool add(SparseRow row);
  std::size_t rank() const { return pivots_.size(); }
  std::size_t ncols() const { return ncols_; }
  // Basis of the solution space, one dense vector per free column.
  std::vector<Vector> nullspace() const;

 private:
  Field field_;
  std::size_t ncols_;
  // Leading column -> row normalized to leading coefficient 1.
  std::map<std::uint32_t, SparseRow> pivots_;
};

}  // namespace pgact

#endif  // PGACT_LINALG_HPP
