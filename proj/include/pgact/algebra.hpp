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

#ifndef PGACT_ALGEBRA_HPP
#define PGACT_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgact/groupoid.hpp"
#include "pgact/linalg.hpp"
#include "pgact/report.hpp"
#include "pgact/semicategory.hpp"

namespace pgact {

// Finite-dimensional algebra over a field, presented by structure constants
// product(i, j) = b_i b_j. Associativity is not assumed.
class Algebra {
 public:
  Algebra() = default;
  // All products start at zero.
  Algebra(Field f, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rank() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  const Vector& product(std::size_t i, std::size_t j) const { return products_.at(i * n_ + j); }
  void set_product(std::size_t i, std::size_t j, Vector v);
  Vector multiply(const Vector& a, const Vector& b) const;
  // Matrices of x -> x a and x -> a x.
  Matrix right_multiplication(const Vector& a) const;
  Matrix left_multiplication(const Vector& a) const;

  Report check_associative() const;
  // Two-sided identity, or nullopt.
  std::optional<Vector> find_unit() const;
  // e with e b = b for every b, or nullopt.
  std::optional<Vector> find_left_unit() const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.products_ == b.products_;
  }

 private:
  Field field_;
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Vector> products_;
};

// a(C): the direct sum of all homs of C with the matrix product. Block (y, x)
// starts at offsets[y * n + x].
struct BlockAlgebra {
  Algebra algebra;
  std::vector<std::size_t> offsets;
  std::size_t offset(std::size_t slot) const { return offsets.at(slot); }
};
BlockAlgebra algebra_of(const Semicategory& c);

// a(I) for an ideal family I of C, in the coordinates of the canonical bases
// of its components. Throws if I is not closed under composition.
Algebra ideal_algebra(const Semicategory& c, const HomFamily& ideal);

// Multipliers (R, L) of A, as matrices acting on coordinate columns:
// a R is R * a and L a is L * a. They satisfy (x a) R = x (a R),
// L (a x) = (L a) x and (a R) b = a (L b).
struct MultiplierSpace {
  std::vector<std::pair<Matrix, Matrix>> basis;
  std::size_t dim() const { return basis.size(); }
  // Whether (R, L) satisfies the defining identities.
  bool contains(const Algebra& a, const Matrix& r, const Matrix& l) const;
};
MultiplierSpace compute_multipliers(const Algebra& a);

// Which identity the (L, R) test uses for multipliers (R, L) and (R', L').
// commuting: R' L = L R' (right multipliers commute with left ones).
// as_printed: R' L = L' R, composed as maps.
enum class LRConvention { commuting, as_printed };

struct LRCheck {
  bool associative = false;
  Report report;
};
LRCheck check_lr_associative(const Algebra& a, LRConvention convention = LRConvention::commuting);

struct SUnitalCheck {
  bool s_unital = false;
  // A left identity when one exists.
  std::optional<Vector> left_unit;
  Report report;
};
// Left s-unital: x in A x for all x, equivalently a left identity exists in
// finite dimension. Each basis vector is also tested on its own.
SUnitalCheck check_s_unital(const Algebra& a);

// The hypothesis of the s-unitality criterion for a(C): every object u has
// e in _uC_u with e f = f for all f in _uC_y.
Report check_left_local_units(const Semicategory& c);

// Partial action of a groupoid on an algebra: ideals D_g and isomorphisms
// alpha_g : D_{g^-1} -> D_g, stored as ambient matrices.
struct RingPartialAction {
  FiniteGroupoid groupoid;
  Algebra algebra;
  std::vector<Submodule> domains;
  std::vector<Matrix> maps;
};

Report validate_ring_action(const RingPartialAction& a);
// alpha_g alpha_h = alpha_gh and D_g = D_r(g).
bool is_global_ring_action(const RingPartialAction& a);

// A * G = sum of D_g delta_g with (a delta_g)(b delta_h) =
// alpha_g(alpha_{g^-1}(a) b) delta_gh when d(g) = r(h). Basis vector k of the
// result is basis vector tags[k].second of D_{tags[k].first}.
struct SkewRing {
  Algebra algebra;
  std::vector<std::pair<Mor, std::size_t>> tags;
  std::vector<std::size_t> offsets;
  Report report;
};
SkewRing build_skew_ring(const RingPartialAction& a);

// Globalization of a ring partial action alpha by a global beta with
// monomorphisms psi_e : A_e -> B_e (matrices rank B x rank A, per identity).
Report check_ring_globalization(const RingPartialAction& alpha, const RingPartialAction& beta,
                                const std::vector<std::optional<Matrix>>& psi);

}  // namespace pgact

#endif  // PGACT_ALGEBRA_HPP
