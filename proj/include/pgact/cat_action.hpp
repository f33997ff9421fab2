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

#ifndef PGACT_CAT_ACTION_HPP
#define PGACT_CAT_ACTION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "pgact/groupoid.hpp"
#include "pgact/linalg.hpp"
#include "pgact/report.hpp"
#include "pgact/semicategory.hpp"
#include "pgact/set_action.hpp"

namespace pgact {

// Partial action of a groupoid on an R-semicategory C: an object-level
// partial action with domains C_0^g, hom ideals I^g, and linear maps
// alpha^g from _yI^{g^-1}_x to _{gy}I^g_{gx}.
//
// alpha^g at a domain pair (y, x), both in C_0^{g^-1}, is stored as an
// ambient matrix rank(gy, gx) x rank(y, x); only its restriction to the ideal
// is meaningful.
class PartialCatAction {
 public:
  PartialCatAction() = default;
  // Ideals start at zero, maps at zero (identity for identity morphisms).
  // The object action is fixed from here on.
  PartialCatAction(PartialSetAction objects, Semicategory c);

  const FiniteGroupoid& groupoid() const { return objects_.groupoid(); }
  const Semicategory& semicategory() const { return cat_; }
  const PartialSetAction& object_action() const { return objects_; }
  std::size_t num_objects() const { return cat_.num_objects(); }

  const HomFamily& ideal(Mor g) const { return ideals_.at(g); }
  void set_ideal(Mor g, HomFamily family);
  void set_ideal(Mor g, Obj y, Obj x, Submodule s) { ideals_.at(g).at(y, x) = std::move(s); }

  // Matrix of alpha^g at the domain pair (y, x), or nullptr when y or x is
  // outside C_0^{g^-1}.
  const Matrix* map(Mor g, Obj y, Obj x) const;
  void set_map(Mor g, Obj y, Obj x, Matrix m);
  // alpha^g(v) for v in _yC_x; throws when (y, x) is outside the domain.
  Vector apply(Mor g, Obj y, Obj x, const Vector& v) const;
  // image of _yI^{g^-1}_x ∩ s under alpha^g, in _{gy}C_{gx}
  Submodule image(Mor g, Obj y, Obj x, const Submodule& s) const;

  const ObjectSet& domain(Mor g) const { return objects_.domain_mask(g); }
  bool in_domain(Mor g, Obj x) const { return objects_.in_domain(g, x); }
  // alpha_0^g(x) or kNoObj
  Obj move(Mor g, Obj x) const { return objects_.apply(g, x); }

  friend bool operator==(const PartialCatAction& a, const PartialCatAction& b) {
    return a.objects_ == b.objects_ && a.cat_ == b.cat_ && a.ideals_ == b.ideals_ && a.maps_ == b.maps_;
  }
  friend bool operator!=(const PartialCatAction& a, const PartialCatAction& b) { return !(a == b); }

 private:
  std::size_t slot(Obj y, Obj x) const { return y * num_objects() + x; }

  PartialSetAction objects_;
  Semicategory cat_;
  std::vector<HomFamily> ideals_;
  std::vector<std::vector<std::optional<Matrix>>> maps_;
};

struct ActionOptions {
  // Require ideal conditions against every object of the ambient
  // semicategory, not only inside the object domain of the ideal.
  bool strict_ideals = false;
};

Report validate_cat_action(const PartialCatAction& a, const ActionOptions& opts = {});

struct GlobalityCheck {
  // I^g = I^r(g) and C_0^g = C_0^r(g) for every g.
  bool by_domains = false;
  // alpha^g alpha^h = alpha^gh as partial maps for composable pairs.
  bool by_composition = false;
  Report report;
};
GlobalityCheck check_global(const PartialCatAction& a);

// (alpha^g)^-1 = alpha^{g^-1}, and alpha^g(I^{g^-1} cap I^h) = I^g cap I^gh.
Report check_inverse_and_intersection(const PartialCatAction& a);

// The partial action induced by a global action beta on an ideal I with
// object set `objects`: I_0^g = I_0^r(g) cap beta_g(I_0^d(g)) and
// _yI^g_x = (I cap E^g) cap beta^g(I cap E^{g^-1}). The result acts on the full
// subsemicategory on `objects`, in the order given.
PartialCatAction induce_partial_action(const PartialCatAction& beta, const HomFamily& ideal,
                                       const std::vector<Obj>& objects);

// The action of the principal group at e on the full subsemicategory on C_0^e.
PartialCatAction restrict_to_principal_group(const PartialCatAction& a, Mor e);

// Moves the action to new hom coordinates: new = P(y, x) * old, with P
// indexed y * n + x and invertible.
PartialCatAction change_basis(const PartialCatAction& a, const std::vector<Matrix>& p);
Semicategory change_basis(const Semicategory& c, const std::vector<Matrix>& p);

}  // namespace pgact

#endif  // PGACT_CAT_ACTION_HPP
