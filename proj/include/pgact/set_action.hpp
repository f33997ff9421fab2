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

#ifndef PGACT_SET_ACTION_HPP
#define PGACT_SET_ACTION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pgact/groupoid.hpp"
#include "pgact/report.hpp"
#include "pgact/semicategory.hpp"

namespace pgact {

// Partial action of a finite groupoid on a finite set, given by domains D_g
// and partial maps alpha_g: D_{g^-1} -> D_g.
class PartialSetAction {
 public:
  PartialSetAction() = default;
  PartialSetAction(FiniteGroupoid g, std::vector<std::string> points);

  const FiniteGroupoid& groupoid() const { return groupoid_; }
  std::size_t num_points() const { return points_.size(); }
  const std::string& point_name(Obj p) const { return points_.at(p); }
  const std::vector<std::string>& point_names() const { return points_; }
  std::optional<Obj> find_point(const std::string& name) const;

  bool in_domain(Mor g, Obj p) const { return domains_.at(g).at(p); }
  const ObjectSet& domain_mask(Mor g) const { return domains_.at(g); }
  std::vector<Obj> domain(Mor g) const;
  // alpha_g(p), or kNoObj when p is outside D_{g^-1}.
  Obj apply(Mor g, Obj p) const { return maps_.at(g).at(p); }
  bool defined(Mor g, Obj p) const { return apply(g, p) != kNoObj; }

  void set_domain(Mor g, const std::vector<Obj>& points);
  void set_map(Mor g, Obj from, Obj to);
  // Fills alpha_e = id on D_e for identities without an explicit map.
  void default_identity_maps();

  friend bool operator==(const PartialSetAction& a, const PartialSetAction& b) {
    return a.groupoid_ == b.groupoid_ && a.points_ == b.points_ && a.domains_ == b.domains_ && a.maps_ == b.maps_;
  }

 private:
  FiniteGroupoid groupoid_;
  std::vector<std::string> points_;
  std::vector<ObjectSet> domains_;
  std::vector<std::vector<Obj>> maps_;
};

// Domain/map formulation: nesting, bijectivity, identities, intersections,
// composition.
Report validate_set_action(const PartialSetAction& a);
// Pointwise formulation on the partial product g.x, plus consistency of the
// stated domains with the maps.
Report validate_pointwise(const PartialSetAction& a);

// D_g = D_{r(g)} for every g (so alpha_g alpha_h = alpha_gh).
bool is_global(const PartialSetAction& a);

// {g x : x in D_{g^-1}}.
std::vector<Obj> orbit(const PartialSetAction& a, Obj x);

// G acting on mor(G) by left translation, D_g = {h : r(h) = r(g)}.
PartialSetAction translation_action(const FiniteGroupoid& g);

// Partial action induced by a global one on a subset:
// D_g = X cap beta_g(X cap Y_{d(g)}), alpha_g = beta_g restricted.
PartialSetAction restrict_action(const PartialSetAction& global, const std::vector<Obj>& subset);

// Checks that (global, embedding) globalizes a: global, restriction along the
// embedding reproduces a, embedding injective, every point reachable.
Report check_set_globalization(const PartialSetAction& a, const PartialSetAction& global,
                               const std::vector<Obj>& embedding);

struct SetGlobalization {
  PartialSetAction global;
  // Point of `global` for each point of the input.
  std::vector<Obj> embedding;
  Report report;
  bool ok() const { return report.ok(); }
};

// Universal globalization: classes of pairs (g, x) with x in D_{d(g)}, where
// (g, x) ~ (h, y) iff r(g) = r(h) and alpha_{h^-1 g}(x) = y, and (e, x) ~ (f, x)
// for identities sharing x.
SetGlobalization globalize_set_action(const PartialSetAction& a);

}  // namespace pgact

#endif  // PGACT_SET_ACTION_HPP
