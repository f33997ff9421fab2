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
#include "pgact/semicategory.hpp"
#include "support/generators.hpp"

using namespace pgact;
using pgact::testing::complete_semicategory;
using pgact::testing::small_algebras;

namespace {

const pgact::testing::SmallAlgebra& algebra(const std::vector<pgact::testing::SmallAlgebra>& all, const char* name) {
  for (const auto& a : all) {
    if (a.name == name) return a;
  }
  throw std::logic_error("no such algebra");
}

std::vector<std::string> names(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back("o" + std::to_string(i));
  return out;
}

}  // namespace

TEST_SUITE("semicategory") {
  TEST_CASE("complete semicategories are associative and unital exactly when the algebra is") {
    Field q = Field::rationals();
    for (const auto& b : small_algebras(q)) {
      for (std::size_t copies : {1u, 2u}) {
        Semicategory c = complete_semicategory(q, names(3), b, copies);
        CHECK(c.validate().ok());
        CategoryCheck cat = check_category(c);
        CHECK(cat.is_category == b.unital);
        if (!cat.is_category) continue;
        for (Obj x = 0; x < 3; ++x) {
          REQUIRE(cat.identities[x].has_value());
          CHECK(is_identity_at(c, x, *cat.identities[x]));
        }
      }
    }
  }

  TEST_CASE("associativity failures are reported with witnesses") {
    Field q = Field::rationals();
    Semicategory c(q, {"o"}, {2});
    // e1 e1 = e2, everything else zero: (e1 e1) e1 = e2 e1 = 0 while e1 (e1 e1) = e1 e2 = 0, so associative.
    c.set_basis_product(0, 0, 0, 0, 0, unit_vector(q, 2, 1));
    CHECK(c.validate().ok());
    // Adding e2 e1 = e1 breaks it: (e1 e1) e1 = e1 but e1 (e1 e1) = 0.
    c.set_basis_product(0, 0, 0, 1, 0, unit_vector(q, 2, 0));
    const Report r = c.validate();
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.find("semicategory.associativity")->witnesses.empty());
  }

  TEST_CASE("local identities of ideals in the small algebras") {
    Field q = Field::rationals();
    const auto all = small_algebras(q);
    struct Case {
      const char* algebra;
      std::vector<std::size_t> ideal;
      bool has_identity;
    };
    // Dual numbers: (t) has none. Triangular: span{E11, E12} and span{E12, E22}
    // are one-sided unital only, span{E12} is square-zero.
    const std::vector<Case> cases = {
        {"field", {0}, true},          {"zero-product", {0}, false}, {"dual-numbers", {0, 1}, true},
        {"dual-numbers", {1}, false},  {"triangular", {0, 1, 2}, true}, {"triangular", {1}, false},
        {"triangular", {0, 1}, false}, {"triangular", {1, 2}, false},
    };
    for (const auto& cs : cases) {
      const auto& b = algebra(all, cs.algebra);
      Semicategory c = complete_semicategory(q, names(2), b);
      std::vector<Vector> gens;
      for (std::size_t i : cs.ideal) gens.push_back(unit_vector(q, b.rank, i));
      HomFamily fam = HomFamily::zero(c);
      for (Obj y = 0; y < 2; ++y) {
        for (Obj x = 0; x < 2; ++x) fam.at(y, x) = Submodule::span(q, b.rank, gens);
      }
      CHECK(check_ideal(c, fam).ok());
      for (Obj x = 0; x < 2; ++x) {
        LocalIdentity li = find_local_identity(c, fam, x);
        CAPTURE(cs.algebra);
        CHECK(li.exists == cs.has_identity);
        if (li.exists) CHECK(fam.at(x, x).contains(li.element));
      }
    }
  }

  TEST_CASE("left-only local identities are found in one-sided mode") {
    Field q = Field::rationals();
    const auto all = small_algebras(q);
    const auto& b = algebra(all, "triangular");
    Semicategory c = complete_semicategory(q, names(1), b);
    HomFamily fam = HomFamily::zero(c);
    // span{E11, E12}: E11 is a left identity (E11 E11 = E11, E11 E12 = E12).
    fam.at(0, 0) = Submodule::span(q, 3, {unit_vector(q, 3, 0), unit_vector(q, 3, 1)});
    CHECK_FALSE(find_local_identity(c, fam, 0, true).exists);
    LocalIdentity left = find_local_identity(c, fam, 0, false);
    REQUIRE(left.exists);
    CHECK(left.element == unit_vector(q, 3, 0));
  }

  TEST_CASE("non-ideals are rejected") {
    Field q = Field::rationals();
    const auto all = small_algebras(q);
    const auto& b = algebra(all, "triangular");
    Semicategory c = complete_semicategory(q, names(2), b);
    HomFamily fam = HomFamily::zero(c);
    // span{E11} is not closed under multiplication by E12.
    fam.at(0, 0) = Submodule::span(q, 3, {unit_vector(q, 3, 0)});
    CHECK_FALSE(check_ideal(c, fam).ok());
  }

  TEST_CASE("full subsemicategories keep structure constants") {
    std::mt19937 rng(pgact::testing::kSeed + 10);
    Field q = Field::rationals();
    for (const auto& b : small_algebras(q)) {
      Semicategory c = complete_semicategory(q, names(4), b);
      std::vector<Obj> keep = {3, 1};
      Semicategory s = full_subsemicategory(c, keep);
      CHECK(s.num_objects() == 2);
      CHECK(s.object_name(0) == "o3");
      CHECK(s.validate().ok());
      for (Obj z = 0; z < 2; ++z) {
        for (Obj y = 0; y < 2; ++y) {
          for (Obj x = 0; x < 2; ++x) {
            Vector f = pgact::testing::random_vector(rng, q, b.rank), g = pgact::testing::random_vector(rng, q, b.rank);
            CHECK(s.compose(z, y, x, f, g) == c.compose(keep[z], keep[y], keep[x], f, g));
          }
        }
      }
    }
  }

  TEST_CASE("identity and swap functors preserve composition") {
    Field q = Field::rationals();
    const auto all = small_algebras(q);
    const auto& b = algebra(all, "triangular");
    Semicategory c = complete_semicategory(q, names(2), b);
    Semifunctor id{{0, 1}, std::vector<Matrix>(4, Matrix::identity(q, 3))};
    Check ok;
    check_semifunctor(ok, c, c, id);
    CHECK(ok.passed());
    Semifunctor swap{{1, 0}, std::vector<Matrix>(4, Matrix::identity(q, 3))};
    Check ok2;
    check_semifunctor(ok2, c, c, swap);
    CHECK(ok2.passed());
    // Transposing E11 and E22 is an anti-automorphism, not a functor.
    Matrix t(q, 3, 3);
    t.at(0, 2) = t.at(2, 0) = t.at(1, 1) = q.one();
    Semifunctor anti{{0, 1}, std::vector<Matrix>(4, t)};
    Check bad;
    check_semifunctor(bad, c, c, anti);
    CHECK_FALSE(bad.passed());
  }

  TEST_CASE("change of basis preserves validity") {
    std::mt19937 rng(pgact::testing::kSeed + 11);
    Field q = Field::rationals();
    for (const auto& b : small_algebras(q)) {
      Semicategory c = complete_semicategory(q, names(2), b);
      std::vector<Matrix> p;
      for (int i = 0; i < 4; ++i) {
        Matrix m;
        do {
          std::vector<Vector> rows;
          for (std::size_t r = 0; r < b.rank; ++r) rows.push_back(pgact::testing::random_vector(rng, q, b.rank));
          m = Matrix::from_rows(q, b.rank, rows);
        } while (m.rank() != b.rank);
        p.push_back(m);
      }
      Semicategory d = change_basis(c, p);
      CHECK(d.validate().ok());
      CHECK(check_category(d).is_category == b.unital);
    }
  }
}
