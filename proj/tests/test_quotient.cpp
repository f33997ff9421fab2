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

#include <map>
#include <numeric>
#include <random>
#include <tuple>

#include "pgact/quotient.hpp"
#include "support/generators.hpp"

using namespace pgact;
using pgact::testing::load_fixture;

namespace {

// Brute-force freeness: compares g x and h x over all pairs.
bool free_by_pairs(const PartialSetAction& a) {
  const FiniteGroupoid& G = a.groupoid();
  for (Obj x = 0; x < a.num_points(); ++x) {
    for (Mor g = 0; g < G.size(); ++g) {
      for (Mor h = 0; h < G.size(); ++h) {
        if (g != h && a.defined(g, x) && a.defined(h, x) && a.apply(g, x) == a.apply(h, x)) return false;
      }
    }
  }
  return true;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

// Orbits of the triples (e, y, x) with y, x in D_e under
// (d(g), y, x) -> (r(g), g y, g x), counted per pair of object classes.
std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_orbits(const PartialSetAction& a,
                                                                       const OrbitPartition& p) {
  const FiniteGroupoid& G = a.groupoid();
  const std::size_t n = a.num_points();
  auto index = [&](Mor e, Obj y, Obj x) { return (e * n + y) * n + x; };
  std::vector<std::size_t> parent(G.size() * n * n);
  std::iota(parent.begin(), parent.end(), 0);
  for (Mor g = 0; g < G.size(); ++g) {
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        if (!a.in_domain(G.d(g), y) || !a.in_domain(G.d(g), x) || !a.defined(g, y) || !a.defined(g, x)) continue;
        parent[find_root(parent, index(G.d(g), y, x))] = find_root(parent, index(G.r(g), a.apply(g, y), a.apply(g, x)));
      }
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  for (Mor e : G.identities()) {
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        if (a.in_domain(e, y) && a.in_domain(e, x) && find_root(parent, index(e, y, x)) == index(e, y, x)) {
          ++out[{p.class_of[y], p.class_of[x]}];
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("quotient") {
  TEST_CASE("translation actions are free") {
    for (const auto& sg : pgact::testing::small_groupoids()) {
      PartialSetAction t = translation_action(sg.groupoid);
      CHECK(check_free(t).free);
      CHECK(free_by_pairs(t));
    }
  }

  TEST_CASE("shared identity domains make an action non-free") {
    const Document doc = load_fixture("idempotents_partial.pga");
    const PartialCatAction& a = doc.action("A")->action;
    FreenessCheck f = check_free(a);
    CHECK_FALSE(f.free);
    CHECK_FALSE(f.report.find("quotient.free")->witnesses.empty());
    CHECK(free_by_pairs(a.object_action()) == f.free);
    QuotientSemicategory q = build_quotient(a);
    CHECK_FALSE(q.ok());
  }

  TEST_CASE("orbits that need two steps") {
    const Document doc = load_fixture("two_step_orbit.pga");
    const PartialSetAction& x = doc.set_action("X")->action;
    OrbitPartition p = object_orbits(x);
    REQUIRE(p.classes.size() == 1);
    CHECK(p.classes[0] == std::vector<Obj>{0, 1, 2});
    CHECK_FALSE(p.single_step);
    CHECK(check_free(x).free == free_by_pairs(x));
  }

  TEST_CASE("translation orbits are indexed by source objects") {
    const FiniteGroupoid g = FiniteGroupoid::disjoint_union(FiniteGroupoid::cyclic_group(2),
                                                            FiniteGroupoid::transitive(2, 1));
    // g h keeps d(h), so each orbit is the set of morphisms out of one object.
    const PartialSetAction t = translation_action(g);
    OrbitPartition p = object_orbits(t);
    CHECK(p.classes.size() == g.identities().size());
    for (Mor h = 0; h < g.size(); ++h) CHECK(p.class_of[h] == p.class_of[g.d(h)]);
    CHECK(p.single_step);
  }

  TEST_CASE("quotients of global free actions count orbits of hom pairs") {
    std::mt19937 rng(pgact::testing::kSeed + 70);
    for (int t = 0; t < 20; ++t) {
      auto fx = pgact::testing::random_action(rng, Field::rationals());
      CAPTURE(fx.description);
      const PartialCatAction& a = fx.global;
      REQUIRE(check_free(a).free);
      QuotientSemicategory q = build_quotient(a);
      CHECK(q.ok());
      CHECK(q.cat.validate().ok());
      const auto orbits = pair_orbits(a.object_action(), q.orbits);
      const std::size_t k = q.orbits.classes.size();
      const std::size_t rank = a.semicategory().rank(0, 0);
      for (std::size_t tau = 0; tau < k; ++tau) {
        for (std::size_t rho = 0; rho < k; ++rho) {
          auto it = orbits.find({tau, rho});
          CHECK(q.cat.rank(tau, rho) == (it == orbits.end() ? 0 : it->second) * rank);
        }
      }
    }
  }
}
