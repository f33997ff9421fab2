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

#include "pgact/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace pgact {

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v(n, f.zero());
  v.at(i) = f.one();
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

static void check_sizes(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
}

Vector add(const Vector& a, const Vector& b) {
  check_sizes(a, b);
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  check_sizes(a, b);
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& c, const Vector& v) {
  Vector r = v;
  for (auto& s : r) s *= c;
  return r;
}

void axpy(Vector& y, const Scalar& c, const Vector& x) {
  check_sizes(y, x);
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].is_zero()) y[i] += c * x[i];
  }
}

Vector concat(const Vector& a, const Vector& b) {
  Vector r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = f.coerce(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = field_.coerce(v[i]);
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) {
    throw std::invalid_argument("matrix with " + std::to_string(cols_) +
                                " columns applied to vector of length " + std::to_string(v.size()));
  }
  Vector r(rows_, field_.zero());
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = at(i, j);
      if (!a.is_zero()) r[i] += a * v[j];
    }
  }
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(field_.from(-1)); }

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& s : r.data_) s *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  }
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::size_t Matrix::rank() const {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < rows_; ++i) rows.push_back(row(i));
  return row_reduce(field_, cols_, std::move(rows)).rows.size();
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  std::size_t n = rows_;
  if (n == 0) return Matrix(field_, 0, 0);
  std::vector<Vector> aug;
  for (std::size_t i = 0; i < n; ++i) aug.push_back(concat(row(i), unit_vector(field_, n, i)));
  Echelon e = row_reduce(field_, 2 * n, std::move(aug));
  if (e.rows.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix r(field_, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r.at(i, j) = e.rows[i][n + j];
  }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
  }
  os << "]";
  return os.str();
}

Echelon row_reduce(const Field& f, std::size_t ncols, std::vector<Vector> rows) {
  for (auto& r : rows) {
    if (r.size() != ncols) throw std::invalid_argument("row length mismatch in row reduction");
    for (auto& s : r) s = f.coerce(s);
  }
  Echelon e;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Scalar inv = rows[rank][c].inverse();
    if (!inv.is_one()) {
      for (std::size_t j = c; j < ncols; ++j) rows[rank][j] *= inv;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c].is_zero()) continue;
      Scalar factor = -rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) {
        if (!rows[rank][j].is_zero()) rows[i][j] += factor * rows[rank][j];
      }
    }
    e.pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  e.rows = std::move(rows);
  return e;
}

Submodule Submodule::zero(const Field& f, std::size_t n) {
  Submodule s;
  s.field_ = f;
  s.ambient_ = n;
  return s;
}

Submodule Submodule::full(const Field& f, std::size_t n) {
  std::vector<Vector> units;
  for (std::size_t i = 0; i < n; ++i) units.push_back(unit_vector(f, n, i));
  return span(f, n, units);
}

Submodule Submodule::span(const Field& f, std::size_t n, const std::vector<Vector>& vectors) {
  Submodule s = zero(f, n);
  Echelon e = row_reduce(f, n, vectors);
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Vector Submodule::reduce(Vector v) const {
  if (v.size() != ambient_) {
    throw std::invalid_argument("vector of length " + std::to_string(v.size()) +
                                " tested against submodule of F^" + std::to_string(ambient_));
  }
  for (auto& s : v) s = field_.coerce(s);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar c = v[pivots_[k]];
    if (!c.is_zero()) axpy(v, -c, basis_[k]);
  }
  return v;
}

bool Submodule::contains(const Vector& v) const { return pgact::is_zero(reduce(v)); }

std::optional<Vector> Submodule::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c;
  c.reserve(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) c.push_back(field_.coerce(v[pivots_[k]]));
  return c;
}

Vector Submodule::combine(const Vector& coords) const {
  if (coords.size() != basis_.size()) throw std::invalid_argument("coordinate length mismatch");
  Vector v = zero_vector(field_, ambient_);
  for (std::size_t k = 0; k < basis_.size(); ++k) axpy(v, coords[k], basis_[k]);
  return v;
}

bool Submodule::is_subset_of(const Submodule& o) const {
  if (ambient_ != o.ambient_) return false;
  return std::all_of(basis_.begin(), basis_.end(), [&](const Vector& b) { return o.contains(b); });
}

bool operator==(const Submodule& a, const Submodule& b) {
  return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

std::string Submodule::to_string() const {
  std::string s = "span{";
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (k) s += ", ";
    s += pgact::to_string(basis_[k]);
  }
  return s + "} <= F^" + std::to_string(ambient_);
}

Submodule span(const Field& f, std::size_t n, const std::vector<Vector>& vectors) {
  return Submodule::span(f, n, vectors);
}

static void check_compatible(const Submodule& a, const Submodule& b) {
  if (a.ambient_rank() != b.ambient_rank() || a.field() != b.field()) {
    throw std::invalid_argument("submodules live in different ambient modules");
  }
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  check_compatible(a, b);
  const std::size_t n = a.ambient_rank();
  const Field& f = a.field();
  if (a.is_zero() || b.is_zero()) return Submodule::zero(f, n);
  // Zassenhaus: rows (u | u) for u in a and (w | 0) for w in b; the rows with
  // vanishing left half carry a basis of the intersection on the right.
  std::vector<Vector> rows;
  for (const auto& u : a.basis()) rows.push_back(concat(u, u));
  for (const auto& w : b.basis()) rows.push_back(concat(w, zero_vector(f, n)));
  Echelon e = row_reduce(f, 2 * n, std::move(rows));
  std::vector<Vector> meet;
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    if (e.pivots[k] >= n) meet.emplace_back(e.rows[k].begin() + static_cast<std::ptrdiff_t>(n), e.rows[k].end());
  }
  return Submodule::span(f, n, meet);
}

Submodule sum_of(const Submodule& a, const Submodule& b) {
  check_compatible(a, b);
  std::vector<Vector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Submodule::span(a.field(), a.ambient_rank(), all);
}

Submodule image(const Matrix& m, const Submodule& s) {
  if (m.cols() != s.ambient_rank()) throw std::invalid_argument("image: shape mismatch");
  std::vector<Vector> imgs;
  for (const auto& b : s.basis()) imgs.push_back(m.apply(b));
  return Submodule::span(m.field(), m.rows(), imgs);
}

Submodule kernel(const Matrix& m) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  const Field& f = m.field();
  Echelon e = row_reduce(f, m.cols(), std::move(rows));
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vector x = unit_vector(f, m.cols(), j);
    for (std::size_t k = 0; k < e.rows.size(); ++k) x[e.pivots[k]] = -e.rows[k][j];
    basis.push_back(std::move(x));
  }
  return Submodule::span(f, m.cols(), basis);
}

Matrix extend_from_basis(const Submodule& domain, const std::vector<Vector>& images, std::size_t target_rank) {
  const Field& f = domain.field();
  const std::size_t k = domain.ambient_rank();
  if (images.size() != domain.dim()) throw std::invalid_argument("extend_from_basis: one image per basis vector");
  std::vector<Vector> cols = domain.basis();
  std::vector<Vector> targets = images;
  Submodule covered = domain;
  for (std::size_t i = 0; i < k && cols.size() < k; ++i) {
    Vector e = unit_vector(f, k, i);
    if (covered.contains(e)) continue;
    cols.push_back(e);
    targets.push_back(zero_vector(f, target_rank));
    covered = sum_of(covered, Submodule::span(f, k, {e}));
  }
  Matrix basis = Matrix::from_columns(f, k, cols);
  return Matrix::from_columns(f, target_rank, targets) * *basis.inverse();
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  const Field& f = m.field();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vector r = m.row(i);
    r.push_back(f.coerce(b[i]));
    rows.push_back(std::move(r));
  }
  Echelon e = row_reduce(f, m.cols() + 1, std::move(rows));
  Vector x = zero_vector(f, m.cols());
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    if (e.pivots[k] == m.cols()) return std::nullopt;
    x[e.pivots[k]] = e.rows[k][m.cols()];
  }
  return x;
}

Quotient quotient_module(const Submodule& ambient, const Submodule& relations) {
  check_compatible(ambient, relations);
  if (!relations.is_subset_of(ambient)) {
    throw std::invalid_argument("quotient: relations are not contained in the ambient module");
  }
  const Field& f = ambient.field();
  const std::size_t n = ambient.ambient_rank();
  Quotient q;
  q.relations = relations;
  Submodule covered = relations;
  for (const auto& b : ambient.basis()) {
    if (covered.contains(b)) continue;
    q.transversal.push_back(b);
    covered = sum_of(covered, Submodule::span(f, n, {b}));
  }
  // Complete relations + transversal to a basis of F^n; the projection reads
  // off the transversal coordinates.
  std::vector<Vector> basis = relations.basis();
  basis.insert(basis.end(), q.transversal.begin(), q.transversal.end());
  for (std::size_t i = 0; i < n && basis.size() < n; ++i) {
    Vector e = unit_vector(f, n, i);
    if (covered.contains(e)) continue;
    basis.push_back(e);
    covered = sum_of(covered, Submodule::span(f, n, {e}));
  }
  Matrix inv = *Matrix::from_columns(f, n, basis).inverse();
  q.projection = Matrix(f, q.transversal.size(), n);
  for (std::size_t t = 0; t < q.transversal.size(); ++t) {
    for (std::size_t j = 0; j < n; ++j) q.projection.at(t, j) = inv.at(relations.dim() + t, j);
  }
  return q;
}

bool LinearMap::is_injective() const { return image().dim() == domain.dim(); }

static SparseRow merge_subtract(const SparseRow& a, const Scalar& c, const SparseRow& b) {
  // a - c * b
  SparseRow r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.emplace_back(b[j].first, -(c * b[j].second));
      ++j;
    } else {
      Scalar v = a[i].second - c * b[j].second;
      if (!v.is_zero()) r.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

bool SparseReducer::add(SparseRow row) {
  SparseRow clean;
  for (auto& [c, v] : row) {
    if (c >= ncols_) throw std::invalid_argument("sparse row column out of range");
    Scalar s = field_.coerce(v);
    if (!s.is_zero()) clean.emplace_back(c, std::move(s));
  }
  std::sort(clean.begin(), clean.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t k = 1; k < clean.size(); ++k) {
    if (clean[k].first == clean[k - 1].first) throw std::invalid_argument("duplicate column in sparse row");
  }
  while (!clean.empty()) {
    auto it = pivots_.find(clean.front().first);
    if (it == pivots_.end()) {
      Scalar inv = clean.front().second.inverse();
      for (auto& e : clean) e.second *= inv;
      pivots_.emplace(clean.front().first, std::move(clean));
      return true;
    }
    Scalar lead = clean.front().second;
    clean = merge_subtract(clean, lead, it->second);
  }
  return false;
}

std::vector<Vector> SparseReducer::nullspace() const {
  // Back substitution, highest pivot first: each reduced row keeps only free
  // columns, since every later pivot column it meets is already reduced.
  std::map<std::uint32_t, std::map<std::uint32_t, Scalar>> reduced;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    std::map<std::uint32_t, Scalar> acc;
    for (const auto& [c, v] : it->second) {
      if (c == it->first) continue;
      auto p = reduced.find(c);
      if (p == reduced.end()) {
        acc[c] += v;
        continue;
      }
      for (const auto& [f, w] : p->second) acc[f] -= v * w;
    }
    for (auto a = acc.begin(); a != acc.end();) {
      a = a->second.is_zero() ? acc.erase(a) : std::next(a);
    }
    reduced.emplace(it->first, std::move(acc));
  }
  std::vector<Vector> basis;
  for (std::uint32_t j = 0; j < ncols_; ++j) {
    if (pivots_.count(j)) continue;
    Vector x = unit_vector(field_, ncols_, j);
    for (const auto& [lead, row] : reduced) {
      auto e = row.find(j);
      if (e != row.end()) x[lead] = -e->second;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace pgact
