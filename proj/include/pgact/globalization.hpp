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

#ifndef PGACT_GLOBALIZATION_HPP
#define PGACT_GLOBALIZATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pgact/cat_action.hpp"
#include "pgact/report.hpp"

namespace pgact {

// Outcome of the local-identity test: every I^g has a two-sided local
// identity at every object, and I^e has an identity at every x in C_0^e.
struct GlobalizabilityCheck {
  bool globalizable = false;
  // certificate[g][x]: local identity of I^g at x (zero outside C_0^g).
  std::vector<std::vector<std::optional<Vector>>> certificate;
  Report report;
};
GlobalizabilityCheck check_globalizable(const PartialCatAction& a);

// A global action together with embeddings phi_e of the ideals I^e.
struct Globalization {
  PartialCatAction target;
  // Target object of each source object.
  std::vector<Obj> embedding;
  // phi[e][y * n + x] for identities e and y, x in C_0^e: matrix
  // rank_T(iota y, iota x) x rank_C(y, x), meaningful on _yI^e_x.
  std::vector<std::vector<std::optional<Matrix>>> phi;
  Report report;

  bool ok() const { return report.ok(); }
  const Matrix* embed(Mor e, Obj y, Obj x) const;
};

// Builds the globalization from functions on G(-, e) with values in C,
// then verifies it. Refuses (empty target, failing report) when the action is
// invalid or lacks local identities.
Globalization globalize_cat_action(const PartialCatAction& a);

// The five defining conditions of a globalization of a: object-level
// globalization, faithful ideal embeddings, the intersection formula,
// intertwining, and generation of J^g by translates of embedded ideals.
Report check_globalization(const PartialCatAction& a, const Globalization& g);

// Decides whether two globalizations of the same partial action are
// equivalent by identity-on-objects functors psi_e intertwining the actions
// and the embeddings. psi_e is forced on the generators beta_h phi_d(h)(a), so
// the test is linear: psi must be well defined, invertible, multiplicative
// and intertwining.
struct EquivalenceCheck {
  bool equivalent = false;
  // psi[e][q * m + p] on J'^e(q, p), when it exists.
  std::vector<std::vector<std::optional<Matrix>>> psi;
  Report report;
};
EquivalenceCheck check_equivalent(const PartialCatAction& a, const Globalization& first, const Globalization& second);

// Transports a globalization along invertible hom base changes of its target
// (new = P * old, indexed by target object pair).
Globalization change_basis(const Globalization& g, const std::vector<Matrix>& p);

}  // namespace pgact

#endif  // PGACT_GLOBALIZATION_HPP
