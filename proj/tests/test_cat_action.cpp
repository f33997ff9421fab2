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

#include "pgact/cat_action.hpp"
#include "support/generators.hpp"

using namespace pgact;
using pgact::testing::load_fixture;

namespace {

std::vector<Matrix> random_bases(std::mt19937& rng, const Semicategory& c) {
  std::vector<Matrix> p;
  const std::size_t n = c.num_objects();
  for (Obj y = 0; y < n; ++y) {
    for (Obj x = 0; x < n; ++x) {
      const std::size_t k = c.rank(y, x);
      Matrix m;
      do {
        std::vector<Vector> rows;
        for (std::size_t r = 0; r < k; ++r) rows.push_back(pgact::testing::random_vector(rng, c.field(), k));
        m = Matrix::from_rows(c.field(), k, rows);
      } while (m.rank() != k);
      p.push_back(m);
    }
  }
  return p;
}

bool failed(const Report& r, const std::string& tag) {
  const Check* c = r.find(tag);
  return c != nullptr && !c->passed();
}

}  // namespace

TEST_SUITE("cat_action") {
  TEST_CASE("idempotent example validates under restricted ideals only") {
    const Document doc = load_fixture("idempotents_partial.pga");
    const PartialCatAction& a = doc.action("A")->action;
    CHECK(validate_cat_action(a).ok());
    ActionOptions strict;
    strict.strict_ideals = true;
    const Report r = validate_cat_action(a, strict);
    CHECK(failed(r, "action.ideal-nesting"));
    CHECK_FALSE(check_global(a).by_domains);
    CHECK(check_inverse_and_intersection(a).ok());
  }

  TEST_CASE("printed three-morphism data violates domain nesting") {
    const Document doc = load_fixture("three_morphisms.pga");
    const Report r = validate_cat_action(doc.action("A")->action);
    CHECK(failed(r, "objects.set.domain-nesting"));
    CHECK(failed(r, "action.ideal-nesting"));
  }

  TEST_CASE("hand-coded global action is global by both criteria") {
    const Document doc = load_fixture("idempotents_handwritten_globalization.pga");
    const PartialCatAction& b = doc.action("B")->action;
    CHECK(validate_cat_action(b).ok());
    GlobalityCheck g = check_global(b);
    CHECK(g.by_domains);
    CHECK(g.by_composition);
  }

  TEST_CASE("inducing from the hand-coded global action recovers the partial action") {
    const Document doc = load_fixture("idempotents_handwritten_globalization.pga");
    const PartialCatAction& a = doc.action("A")->action;
    const PartialCatAction& b = doc.action("B")->action;
    Field q = Field::rationals();
    HomFamily j = HomFamily::zero(b.semicategory());
    for (Obj y = 0; y < 2; ++y) {
      for (Obj x = 0; x < 2; ++x) j.at(y, x) = Submodule::span(q, 4, {unit_vector(q, 4, 0), unit_vector(q, 4, 1), unit_vector(q, 4, 2)});
    }
    PartialCatAction induced = induce_partial_action(b, j, {0, 1});
    CHECK(validate_cat_action(induced).ok());
    // C sits in D as the first three coordinates.
    Matrix incl(q, 4, 3);
    for (std::size_t i = 0; i < 3; ++i) incl.at(i, i) = q.one();
    const FiniteGroupoid& G = a.groupoid();
    for (Mor g = 0; g < G.size(); ++g) {
      for (Obj y = 0; y < 2; ++y) {
        for (Obj x = 0; x < 2; ++x) {
          if (!a.in_domain(g, y) || !a.in_domain(g, x)) continue;
          CAPTURE(G.name(g));
          CHECK(image(incl, a.ideal(g).at(y, x)) == induced.ideal(g).at(y, x));
        }
      }
    }
  }

  TEST_CASE("generated global actions and their restrictions validate") {
    std::mt19937 rng(pgact::testing::kSeed + 30);
    for (int t = 0; t < 40; ++t) {
      auto fx = pgact::testing::random_action(rng, Field::rationals());
      CAPTURE(fx.description);
      CHECK(validate_cat_action(fx.global).ok());
      GlobalityCheck g = check_global(fx.global);
      CHECK(g.by_domains);
      CHECK(g.by_composition);
      CHECK(validate_cat_action(fx.partial).ok());
      CHECK(check_inverse_and_intersection(fx.partial).ok());
      for (Mor e : fx.partial.groupoid().identities()) {
        PartialCatAction local = restrict_to_principal_group(fx.partial, e);
        CHECK(validate_cat_action(local).ok());
      }
    }
  }

  TEST_CASE("validation is invariant under change of hom bases") {
    std::mt19937 rng(pgact::testing::kSeed + 31);
    ActionOptions strict;
    strict.strict_ideals = true;
    for (int t = 0; t < 25; ++t) {
      auto fx = pgact::testing::random_action(rng, Field::rationals());
      PartialCatAction moved = change_basis(fx.partial, random_bases(rng, fx.partial.semicategory()));
      CAPTURE(fx.description);
      CHECK(validate_cat_action(moved).ok() == validate_cat_action(fx.partial).ok());
      CHECK(validate_cat_action(moved, strict).ok() == validate_cat_action(fx.partial, strict).ok());
    }
  }

  TEST_CASE("corrupted actions are flagged") {
    const Document doc = load_fixture("idempotents_partial.pga");
    PartialCatAction a = doc.action("A")->action;
    const FiniteGroupoid& G = a.groupoid();
    const Mor g = *G.find("g");
    const Obj y = *a.semicategory().find_object("y");
    const Obj x = *a.semicategory().find_object("x");
    Field q = Field::rationals();
    SUBCASE("map is not an isomorphism") {
      a.set_map(g, y, y, Matrix(q, 3, 3));
      CHECK(failed(validate_cat_action(a), "action.isomorphism"));
    }
    SUBCASE("map of the wrong shape") {
      a.set_map(g, y, y, Matrix(q, 2, 3));
      CHECK(failed(validate_cat_action(a), "action.map-shape"));
    }
    SUBCASE("ideal outside its domain") {
      a.set_ideal(g, y, x, Submodule::full(q, 3));
      CHECK(failed(validate_cat_action(a), "action.support"));
    }
  }
}
