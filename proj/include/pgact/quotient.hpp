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

#ifndef PGACT_QUOTIENT_HPP
#define PGACT_QUOTIENT_HPP

#include <cstddef>
#include <vector>

#include "pgact/cat_action.hpp"
#include "pgact/linalg.hpp"
#include "pgact/report.hpp"
#include "pgact/set_action.hpp"

namespace pgact {

struct FreenessCheck {
  bool free = false;
  Report report;
};
// g x = h x implies g = h for every x in D_{g^-1} cap D_{h^-1}.
FreenessCheck check_free(const PartialSetAction& a);
FreenessCheck check_free(const PartialCatAction& a);

// Classes of the transitive closure of x ~ gx.
struct OrbitPartition {
  std::vector<std::vector<Obj>> classes;
  std::vector<std::size_t> class_of;
  // Whether ~ is already transitive (every pair in a class is one step apart).
  bool single_step = true;
};
OrbitPartition object_orbits(const PartialSetAction& a);

// One coordinate block of the ambient module of a quotient hom: the copy of
// _yI^e_x for identity e, in the canonical basis of that component.
struct QuotientBlock {
  Mor e;
  Obj y;
  Obj x;
  std::size_t offset;
  std::size_t dim;
};

// C/G for a free action. The hom from class rho to class tau is the sum over
// identities e of the copies of _yI^e_x (x in rho, y in tau), modulo the span of
// v - alpha_g(v). Representatives compose after translating the first factor
// along the unique g that matches the middle objects.
struct QuotientSemicategory {
  Semicategory cat;
  OrbitPartition orbits;
  std::vector<std::vector<QuotientBlock>> blocks;  // indexed tau * k + rho
  std::vector<std::size_t> ambient_dims;
  std::vector<Quotient> homs;
  Report report;
  bool ok() const { return report.ok(); }
};
QuotientSemicategory build_quotient(const PartialCatAction& a);

}  // namespace pgact

#endif  // PGACT_QUOTIENT_HPP
