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
#include <doctest.h>

#include <random>

#include "pgact/algebra.hpp"
#include "pgact/globalization.hpp"
#include "pgact/skew.hpp"
#include "support/generators.hpp"

using namespace pgact;
using pgact::testing::load_fixture;
using pgact::testing::small_algebras;

namespace {

Algebra to_algebra(const Field& f, const pgact::testing::SmallAlgebra& b) {
  Algebra a(f, b.rank);
  for (std::size_t i = 0; i < b.rank; ++i) {
    for (std::size_t j = 0; j < b.rank; ++j) a.set_product(i, j, b.products[i * b.rank + j]);
  }
  return a;
}

// The swap action of Z2 on F x F, a global ring action with unital A.
RingPartialAction swap_action(const Field& f) {
  RingPartialAction r;
  r.groupoid = FiniteGroupoid::cyclic_group(2);
  r.algebra = Algebra(f, 2);
  r.algebra.set_product(0, 0, unit_vector(f, 2, 0));
  r.algebra.set_product(1, 1, unit_vector(f, 2, 1));
  r.domains = {Submodule::full(f, 2), Submodule::full(f, 2)};
  Matrix swap(f, 2, 2);
  swap.at(0, 1) = swap.at(1, 0) = f.one();
  r.maps = {Matrix::identity(f, 2), swap};
  return r;
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("multipliers of unital algebras are the algebra itself") {
    Field q = Field::rationals();
    for (const auto& b : small_algebras(q)) {
      if (!b.unital) continue;
      Algebra a = to_algebra(q, b);
      MultiplierSpace m = compute_multipliers(a);
      CHECK(m.dim() == b.rank);
      for (std::size_t i = 0; i < b.rank; ++i) {
        const Vector e = unit_vector(q, b.rank, i);
        CHECK(m.contains(a, a.right_multiplication(e), a.left_multiplication(e)));
      }
      CHECK(check_lr_associative(a).associative);
      CHECK(check_s_unital(a).s_unital);
      CHECK(a.find_unit().has_value());
    }
  }

  TEST_CASE("inner multipliers lie in the multiplier space for every algebra") {
    Field q = Field::rationals();
    std::mt19937 rng(pgact::testing::kSeed + 50);
    for (const auto& b : small_algebras(q)) {
      Algebra a = to_algebra(q, b);
      MultiplierSpace m = compute_multipliers(a);
      for (int t = 0; t < 5; ++t) {
        const Vector v = pgact::testing::random_vector(rng, q, b.rank);
        CHECK(m.contains(a, a.right_multiplication(v), a.left_multiplication(v)));
      }
    }
  }

  TEST_CASE("rank-one zero-product algebra") {
    Field q = Field::rationals();
    const auto all = small_algebras(q);
    Algebra a = to_algebra(q, all[1]);
    REQUIRE(all[1].name == "zero-product");
    CHECK(compute_multipliers(a).dim() == 2);
    SUnitalCheck s = check_s_unital(a);
    CHECK_FALSE(s.s_unital);
    CHECK_FALSE(s.report.find("s-unital.basis")->passed());
    // Scalar multipliers commute, so only the printed identity fails.
    CHECK(check_lr_associative(a, LRConvention::commuting).associative);
    LRCheck printed = check_lr_associative(a, LRConvention::as_printed);
    CHECK_FALSE(printed.associative);
    CHECK_FALSE(printed.report.checks().front().witnesses.empty());
  }

  TEST_CASE("unital algebras satisfy the commuting identity but not always the printed one") {
    Field q = Field::rationals();
    const auto all = small_algebras(q);
    Algebra tri = to_algebra(q, all[3]);
    REQUIRE(all[3].name == "triangular");
    CHECK(check_lr_associative(tri, LRConvention::commuting).associative);
    CHECK_FALSE(check_lr_associative(tri, LRConvention::as_printed).associative);
  }

  TEST_CASE("ideal algebras of the idempotent example") {
    const Document doc = load_fixture("idempotents_partial.pga");
    const PartialCatAction& a = doc.action("A")->action;
    const Mor g = *a.groupoid().find("g");
    Algebra ig = ideal_algebra(a.semicategory(), a.ideal(g));
    CHECK(ig.rank() == 1);
    CHECK(compute_multipliers(ig).dim() == 1);
    CHECK(check_lr_associative(ig).associative);
    BlockAlgebra ac = algebra_of(a.semicategory());
    CHECK(ac.algebra.rank() == 12);
    CHECK(ac.algebra.check_associative().ok());
    CHECK(check_s_unital(ac.algebra).s_unital);
  }

  TEST_CASE("algebras of categories are unital with unit the sum of identities") {
    Field q = Field::rationals();
    for (const auto& b : small_algebras(q)) {
      if (!b.unital) continue;
      Semicategory c = pgact::testing::complete_semicategory(q, {"a", "b", "c"}, b);
      BlockAlgebra ac = algebra_of(c);
      CHECK(ac.algebra.check_associative().ok());
      auto unit = ac.algebra.find_unit();
      REQUIRE(unit.has_value());
      CategoryCheck cat = check_category(c);
      Vector expected = zero_vector(q, ac.algebra.rank());
      for (Obj x = 0; x < 3; ++x) {
        for (std::size_t i = 0; i < b.rank; ++i) expected[ac.offset(x * 3 + x) + i] = (*cat.identities[x])[i];
      }
      CHECK(*unit == expected);
      CHECK(check_left_local_units(c).ok());
    }
  }

  TEST_CASE("skew group ring of a global group action") {
    Field q = Field::rationals();
    RingPartialAction r = swap_action(q);
    CHECK(validate_ring_action(r).ok());
    CHECK(is_global_ring_action(r));
    SkewRing s = build_skew_ring(r);
    CHECK(s.report.ok());
    REQUIRE(s.algebra.rank() == 4);
    CHECK(s.algebra.check_associative().ok());
    // (a delta_g)(b delta_h) = a alpha_g(b) delta_gh.
    for (std::size_t p = 0; p < 4; ++p) {
      for (std::size_t t = 0; t < 4; ++t) {
        const auto [g, i] = s.tags[p];
        const auto [h, j] = s.tags[t];
        Vector prod = r.algebra.multiply(unit_vector(q, 2, i), r.maps[g].apply(unit_vector(q, 2, j)));
        const Mor gh = r.groupoid.compose(g, h);
        Vector expected = zero_vector(q, 4);
        for (std::size_t k = 0; k < 2; ++k) expected[s.offsets[gh] + k] = prod[k];
        CHECK(s.algebra.product(p, t) == expected);
      }
    }
  }

  TEST_CASE("skew ring with only identity domains is the direct sum") {
    Field q = Field::rationals();
    RingPartialAction r = swap_action(q);
    r.domains[1] = Submodule::zero(q, 2);
    SkewRing s = build_skew_ring(r);
    CHECK(s.algebra.rank() == 2);
    CHECK(s.algebra == r.algebra);
  }

  TEST_CASE("dropping a translate from the global domains breaks generation") {
    const Document doc = load_fixture("idempotents_handwritten_globalization.pga");
    const PartialCatAction& a = doc.action("A")->action;
    const Globalization typed = doc.resolve(*doc.globalization("H"));
    RingGlobalizationCheck ring = check_ring_level_globalization(a, typed);
    CHECK(ring.report.find("ring-globalization.generation")->passed());
    CHECK(ring.partial_skew_s_unital);
    CHECK(ring.global_skew_s_unital);

    RingPartialAction alpha = ring_action_of(a), beta = ring_action_of(typed.target);
    const BlockAlgebra ac = algebra_of(a.semicategory()), at = algebra_of(typed.target.semicategory());
    std::vector<std::optional<Matrix>> psi(a.groupoid().size());
    const std::size_t m = typed.target.semicategory().num_objects();
    for (Mor e : a.groupoid().identities()) {
      Matrix p(Field::rationals(), at.algebra.rank(), ac.algebra.rank());
      for (Obj y = 0; y < 2; ++y) {
        for (Obj x = 0; x < 2; ++x) {
          const Matrix* block = typed.embed(e, y, x);
          if (!block) continue;
          const std::size_t ro = at.offset(typed.embedding[y] * m + typed.embedding[x]), co = ac.offset(y * 2 + x);
          for (std::size_t i = 0; i < block->rows(); ++i) {
            for (std::size_t j = 0; j < block->cols(); ++j) p.at(ro + i, co + j) = block->at(i, j);
          }
        }
      }
      psi[e] = p;
    }
    CHECK(check_ring_globalization(alpha, beta, psi).find("ring-globalization.generation")->passed());
    const Mor g = *a.groupoid().find("g");
    beta.domains[g] = Submodule::zero(Field::rationals(), at.algebra.rank());
    const Check* gen = check_ring_globalization(alpha, beta, psi).find("ring-globalization.generation");
    CHECK_FALSE(gen->passed());
    CHECK_FALSE(gen->witnesses.empty());
  }
}
