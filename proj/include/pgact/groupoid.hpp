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

#ifndef PGACT_GROUPOID_HPP
#define PGACT_GROUPOID_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pgact/report.hpp"

namespace pgact {

using Mor = std::size_t;
inline constexpr Mor kNoMor = std::numeric_limits<Mor>::max();

// Finite groupoid given by its tables. Morphisms are 0..size()-1; identities
// are the morphisms of the form d(g). compose(g, h) is g after h and exists
// exactly when d(g) = r(h).
//
// Construction does not validate; call validate() on untrusted tables.
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;
  // comp is size n*n, row g column h, kNoMor where undefined.
  FiniteGroupoid(std::vector<std::string> names, std::vector<Mor> d, std::vector<Mor> r,
                 std::vector<Mor> inv, std::vector<Mor> comp);

  // Cyclic group Z/n with morphism names prefix0..prefix{n-1}; prefix0 is the identity.
  static FiniteGroupoid cyclic_group(std::size_t n, const std::string& prefix = "z");
  // Connected groupoid with the given object count and cyclic vertex groups of
  // order m; morphism (i, j, k) goes from object j to object i.
  static FiniteGroupoid transitive(std::size_t objects, std::size_t m = 1);
  static FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Mor g) const { return names_.at(g); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Mor> find(const std::string& name) const;

  Mor d(Mor g) const { return d_.at(g); }
  Mor r(Mor g) const { return r_.at(g); }
  Mor inv(Mor g) const { return inv_.at(g); }
  // g after h, or kNoMor when undefined.
  Mor compose(Mor g, Mor h) const { return comp_.at(g * size() + h); }
  bool composable(Mor g, Mor h) const { return compose(g, h) != kNoMor; }
  bool is_identity(Mor g) const { return d_.at(g) == g; }

  const std::vector<Mor>& identities() const { return identities_; }
  // Morphisms g with r(g) = e.
  std::vector<Mor> with_range(Mor e) const;
  // Morphisms g with d(g) = e.
  std::vector<Mor> with_domain(Mor e) const;
  // Morphisms g with d(g) = from and r(g) = to.
  std::vector<Mor> between(Mor to, Mor from) const;
  // Morphisms g with d(g) = r(g) = e.
  std::vector<Mor> principal_group(Mor e) const { return between(e, e); }
  std::vector<std::pair<Mor, Mor>> composable_pairs() const;

  // Group-theoretic axioms of the tables; declared lists the identity names
  // the input claims, compared against the derived ones when nonempty.
  Report validate(const std::vector<std::string>& declared = {}) const;

  // The groupoid restricted to a principal group, renumbered.
  FiniteGroupoid principal_subgroupoid(Mor e, std::vector<Mor>* embedding = nullptr) const;

  friend bool operator==(const FiniteGroupoid& a, const FiniteGroupoid& b) {
    return a.names_ == b.names_ && a.d_ == b.d_ && a.r_ == b.r_ && a.inv_ == b.inv_ && a.comp_ == b.comp_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Mor> d_, r_, inv_, comp_;
  std::vector<Mor> identities_;
  std::unordered_map<std::string, Mor> index_;
};

}  // namespace pgact

#endif  // PGACT_GROUPOID_HPP
