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

#ifndef PGACT_SEMICATEGORY_HPP
#define PGACT_SEMICATEGORY_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pgact/linalg.hpp"
#include "pgact/report.hpp"

namespace pgact {

using Obj = std::size_t;
inline constexpr Obj kNoObj = std::numeric_limits<Obj>::max();

// Finite R-linear semicategory presented by structure constants.
//
// Hom (y, x) is the free module _yC_x of maps x -> y, with coordinates in
// F^rank(y, x). basis_product(z, y, x, i, j) is e_i in _zC_y composed with
// e_j in _yC_x, a vector in F^rank(z, x).
class Semicategory {
 public:
  Semicategory() = default;
  // ranks is indexed y * n + x; every product starts at zero.
  Semicategory(Field f, std::vector<std::string> objects, std::vector<std::size_t> ranks);

  const Field& field() const { return field_; }
  std::size_t num_objects() const { return objects_.size(); }
  const std::string& object_name(Obj x) const { return objects_.at(x); }
  const std::vector<std::string>& object_names() const { return objects_; }
  std::optional<Obj> find_object(const std::string& name) const;

  std::size_t rank(Obj y, Obj x) const { return ranks_.at(y * num_objects() + x); }
  const std::vector<std::string>& labels(Obj y, Obj x) const { return labels_.at(y * num_objects() + x); }
  void set_labels(Obj y, Obj x, std::vector<std::string> labels);

  const Vector& basis_product(Obj z, Obj y, Obj x, std::size_t i, std::size_t j) const;
  void set_basis_product(Obj z, Obj y, Obj x, std::size_t i, std::size_t j, Vector v);

  // f in _zC_y after g in _yC_x.
  Vector compose(Obj z, Obj y, Obj x, const Vector& f, const Vector& g) const;
  Vector zero(Obj y, Obj x) const { return zero_vector(field_, rank(y, x)); }
  Vector unit(Obj y, Obj x, std::size_t i) const { return unit_vector(field_, rank(y, x), i); }

  // Associativity on all basis triples.
  Report validate() const;

  friend bool operator==(const Semicategory& a, const Semicategory& b);
  friend bool operator!=(const Semicategory& a, const Semicategory& b) { return !(a == b); }

 private:
  std::size_t table(Obj z, Obj y, Obj x) const { return (z * num_objects() + y) * num_objects() + x; }

  Field field_;
  std::vector<std::string> objects_;
  std::vector<std::size_t> ranks_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<Vector>> products_;
};

// A submodule of every hom of a semicategory, indexed like the homs.
class HomFamily {
 public:
  HomFamily() = default;
  static HomFamily zero(const Semicategory& c);
  static HomFamily full(const Semicategory& c);

  std::size_t num_objects() const { return n_; }
  const Submodule& at(Obj y, Obj x) const { return parts_.at(y * n_ + x); }
  Submodule& at(Obj y, Obj x) { return parts_.at(y * n_ + x); }
  // Objects x with a nonzero component at some (y, x) or (x, y).
  std::vector<Obj> support() const;
  std::size_t total_dim() const;

  friend bool operator==(const HomFamily& a, const HomFamily& b) { return a.n_ == b.n_ && a.parts_ == b.parts_; }
  friend bool operator!=(const HomFamily& a, const HomFamily& b) { return !(a == b); }

 private:
  std::size_t n_ = 0;
  std::vector<Submodule> parts_;
};

HomFamily intersect(const HomFamily& a, const HomFamily& b);
bool is_subfamily(const HomFamily& a, const HomFamily& b);

using ObjectSet = std::vector<bool>;
ObjectSet all_objects(std::size_t n);

// inner(z,y) outer(y,x) and outer(z,y) inner(y,x) land in inner(z,x) for all
// objects in `within`, and inner is contained in outer there.
void check_absorbs(Check& check, const Semicategory& c, const HomFamily& inner, const HomFamily& outer,
                   const ObjectSet& within);
// Components of `family` vanish unless both objects lie in `within`.
void check_supported_on(Check& check, const Semicategory& c, const HomFamily& family, const ObjectSet& within);

// Two-sided ideal of c, restricted to `within` when given.
Report check_ideal(const Semicategory& c, const HomFamily& family, const ObjectSet* within = nullptr);

struct LocalIdentity {
  bool exists = false;
  // Coordinates in _xC_x of the solution with free parameters set to zero.
  Vector element;
  // Dimension of the affine space of solutions (when exists).
  std::size_t freedom = 0;
  std::string failure;
};

// Element e of _xI_x with e f = f for f in _xI_y and f e = f for f in _yI_x,
// over all objects y (only the left condition when two_sided is false).
LocalIdentity find_local_identity(const Semicategory& c, const HomFamily& ideal, Obj x, bool two_sided = true);

// Identities of c, one per object, or the failing objects.
struct CategoryCheck {
  bool is_category = false;
  std::vector<std::optional<Vector>> identities;
  Report report;
};
CategoryCheck check_category(const Semicategory& c);

// Checks that candidate in _xC_x is a two-sided identity at x.
bool is_identity_at(const Semicategory& c, Obj x, const Vector& candidate, std::string* witness = nullptr);

// Object map and hom matrices rank(F y, F x) x rank(y, x), indexed y * n + x.
struct Semifunctor {
  std::vector<Obj> objects;
  std::vector<Matrix> homs;
  const Matrix& at(Obj y, Obj x) const { return homs.at(y * objects.size() + x); }
};

// F(f g) = F(f) F(g) on basis elements of `domain` (all homs when null),
// over objects in `within` (all when null).
void check_semifunctor(Check& check, const Semicategory& src, const Semicategory& dst, const Semifunctor& f,
                       const HomFamily* domain = nullptr, const ObjectSet* within = nullptr);

// The semicategory on `objects` (in the given order) whose homs are the
// components of `family`, in the coordinates of their canonical bases.
// Throws if family is not closed under composition there.
Semicategory restrict_to(const Semicategory& c, const HomFamily& family, const std::vector<Obj>& objects);
Semicategory full_subsemicategory(const Semicategory& c, const std::vector<Obj>& objects);

}  // namespace pgact

#endif  // PGACT_SEMICATEGORY_HPP
