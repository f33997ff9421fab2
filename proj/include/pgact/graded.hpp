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

#ifndef PGACT_GRADED_HPP
#define PGACT_GRADED_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pgact/cat_action.hpp"
#include "pgact/groupoid.hpp"
#include "pgact/quotient.hpp"
#include "pgact/report.hpp"
#include "pgact/semicategory.hpp"

namespace pgact {

// A semicategory whose hom bases are homogeneous: basis vector i of _yB_x has
// degree degree(y, x, i), a morphism of the groupoid, or kNoMor while unset.
class GradedSemicategory {
 public:
  GradedSemicategory() = default;
  GradedSemicategory(Semicategory base, FiniteGroupoid groupoid);

  const Semicategory& base() const { return base_; }
  const FiniteGroupoid& groupoid() const { return groupoid_; }
  Mor degree(Obj y, Obj x, std::size_t i) const { return degrees_.at(y * base_.num_objects() + x).at(i); }
  void set_degree(Obj y, Obj x, std::size_t i, Mor g) { degrees_.at(y * base_.num_objects() + x).at(i) = g; }
  // Basis indices of _yB_x of degree g, ascending.
  std::vector<std::size_t> component(Obj y, Obj x, Mor g) const;

  friend bool operator==(const GradedSemicategory& a, const GradedSemicategory& b) {
    return a.base_ == b.base_ && a.groupoid_ == b.groupoid_ && a.degrees_ == b.degrees_;
  }
  friend bool operator!=(const GradedSemicategory& a, const GradedSemicategory& b) { return !(a == b); }

 private:
  Semicategory base_;
  FiniteGroupoid groupoid_;
  std::vector<std::vector<Mor>> degrees_;
};

// Every basis vector has a degree; products of degrees t, s land in degree ts
// when d(t) = r(s) and vanish otherwise.
Report validate_grading(const GradedSemicategory& b);

// A semicategory built from graded components. Object k stands for the pair
// objects[k]; hom basis vector i at (y, x) is basis vector sources[y*n+x][i]
// of the underlying hom of B.
struct GradedConstruction {
  Semicategory cat;
  std::vector<std::pair<Obj, Mor>> objects;
  std::vector<std::vector<std::size_t>> sources;
  // Products leaving the expected component.
  Report report;

  const std::vector<std::size_t>& source(Obj y, Obj x) const { return sources.at(y * objects.size() + x); }
  std::optional<Obj> find(Obj x, Mor g) const;
};

// B tensor G: objects (x, e) for e in G_0, hom ((y, f), (x, e)) the sum of the
// components of degree in G(e, f).
GradedConstruction build_tensor(const GradedSemicategory& b);

// B # G: objects (x, s) for every morphism s, hom ((y, t), (x, s)) the
// component of degree t^-1 s when r(t) = r(s), zero otherwise.
GradedConstruction build_smash(const GradedSemicategory& b);

// Homogeneous components 1^e of the identities of B serve as identities: 1^e
// at (x, e) in B tensor G and 1^{d(s)} at (x, s) in B # G. Refuses when B is
// not a category.
Report check_homogeneous_identities(const GradedSemicategory& b);

// The global action on B # G: D_g = {(x, s) : r(s) = r(g)}, (x, s) -> (x, gs),
// I^g the full homs inside D_g, every alpha^g the identity matrix.
PartialCatAction canonical_smash_action(const GradedSemicategory& b, const GradedConstruction& smash);

// (B # G) / G against B tensor G: the class of (x, s) goes to (x, d(s)) and a
// tensor basis vector of degree l at ((y, b), (x, a)) to the class of the same
// basis vector at ((y, b), (x, l)). Checks freeness, bijectivity on objects,
// invertibility and multiplicativity on homs.
struct CoveringCheck {
  bool covering = false;
  QuotientSemicategory quotient;
  GradedConstruction tensor;
  std::vector<Obj> objects;     // quotient class -> tensor object
  std::vector<Matrix> homs;     // indexed tau * k + rho: tensor coordinates -> quotient coordinates
  Report report;
};
CoveringCheck check_galois_covering(const GradedSemicategory& b);

// The skew product (B # G) * G against B tensor G through F(x, s) = (x, d(s)),
// summand g at ((y, t), (x, s)) mapped onto the degree t^-1 g s component.
struct SkewEquivalenceCheck {
  bool functor = false;
  bool fully_faithful = false;
  bool surjective = false;
  Report report;
  bool equivalence() const { return functor && fully_faithful && surjective; }
};
SkewEquivalenceCheck check_skew_equivalence(const GradedSemicategory& b);

}  // namespace pgact

#endif  // PGACT_GRADED_HPP
