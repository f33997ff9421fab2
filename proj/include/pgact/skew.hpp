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

#ifndef PGACT_SKEW_HPP
#define PGACT_SKEW_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "pgact/algebra.hpp"
#include "pgact/cat_action.hpp"
#include "pgact/globalization.hpp"
#include "pgact/report.hpp"

namespace pgact {

// One direct summand _yI^g_{gx} of the skew hom at (y, x).
struct SkewSummand {
  Mor g;
  Obj target;  // gx
  std::size_t offset;
  std::size_t dim;
};

// The skew semicategory C * G: objects of C, hom (y, x) the direct sum over
// g with x in C_0^{g^-1} of _yI^g_{gx}, in the canonical bases of the ideal
// components. f in _zI^t_{ty} times l in _yI^g_{gx} is
// alpha^t(alpha^{t^-1}(f) l) in _zI^{tg}_{(tg)x} when d(t) = r(g) and x lies in
// C_0^{(tg)^-1}, and 0 otherwise.
struct SkewSemicategory {
  Semicategory cat;
  std::vector<std::vector<SkewSummand>> summands;  // indexed y * n + x
  // Problems met while evaluating products (a product leaving its summand).
  Report report;
  const std::vector<SkewSummand>& at(Obj y, Obj x) const { return summands.at(y * cat.num_objects() + x); }
};
SkewSemicategory build_skew(const PartialCatAction& a);

// Brute-force associativity of the skew product.
Report check_skew_associative(const SkewSemicategory& s);

// The sufficient condition for associativity: every a(I^g) is
// (L, R)-associative. Reports both sides and whether the implication holds.
struct AssociativityCriterion {
  bool hypothesis = false;
  bool conclusion = false;
  Report report;
};
AssociativityCriterion check_lr_criterion(const PartialCatAction& a, LRConvention convention = LRConvention::commuting);

// Identity of C * G at x as the sum of local identities of I^e at x over
// identities e with x in C_0^e, checked two-sided and against a direct solve.
struct SkewCategoryCheck {
  bool is_category = false;
  std::vector<std::optional<Vector>> identities;
  Report report;
};
SkewCategoryCheck check_skew_category(const PartialCatAction& a, const SkewSemicategory& s);

// The induced action on a(C): D_g = sum of the I^g components, alpha_g
// blockwise.
RingPartialAction ring_action_of(const PartialCatAction& a);

// a(C * G) against a(C) * G under f_g -> f_g delta_g: both products are
// built and the structure constants compared through the basis bijection.
struct TransportCheck {
  bool transports = false;
  bool ring_action_valid = false;
  Report report;
};
TransportCheck check_skew_ring_transport(const PartialCatAction& a);

// Ring-level globalization data derived from a globalization of a, its
// verification, and s-unitality of both skew algebras.
struct RingGlobalizationCheck {
  bool globalization = false;
  bool partial_skew_s_unital = false;
  bool global_skew_s_unital = false;
  Report report;
};
RingGlobalizationCheck check_ring_level_globalization(const PartialCatAction& a, const Globalization& g);

}  // namespace pgact

#endif  // PGACT_SKEW_HPP
