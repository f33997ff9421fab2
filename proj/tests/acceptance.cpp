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
// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic
// throughout. Exit status is the number of failing criteria.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "pgact/commands.hpp"
#include "pgact/document.hpp"
#include "pgact/globalization.hpp"
#include "pgact/graded.hpp"
#include "pgact/quotient.hpp"
#include "pgact/set_action.hpp"
#include "pgact/skew.hpp"
#include "support/generators.hpp"

using namespace pgact;
using pgact::testing::load_fixture;

namespace {

const char* const kFixtures[] = {
    "graded_groupoid_algebra.pga", "graded_idempotents.pga", "idempotents_handwritten_globalization.pga",
    "idempotents_partial.pga",     "nilpotent_ideal.pga",    "set_action_three_points.pga",
    "three_morphisms.pga",         "three_morphisms_printed.pga", "two_step_orbit.pga"};

// Named sub-checks of one criterion.
class Criterion {
 public:
  void expect(const std::string& part, bool ok) {
    if (!ok) failed_.push_back(part);
  }
  bool passed() const { return failed_.empty(); }
  const std::vector<std::string>& failed() const { return failed_; }

 private:
  std::vector<std::string> failed_;
};

// Strictly valid generated actions shared by the property criteria.
const std::vector<pgact::testing::ActionFixture>& pool() {
  static const std::vector<pgact::testing::ActionFixture> fixtures = [] {
    std::vector<pgact::testing::ActionFixture> out;
    std::mt19937 rng(pgact::testing::kSeed + 100);
    while (out.size() < 100) {
      auto fx = pgact::testing::random_action(rng, Field::rationals());
      if (pgact::testing::strictly_valid(fx.partial)) out.push_back(std::move(fx));
    }
    return out;
  }();
  return fixtures;
}

std::vector<std::string> sorted_names(const PartialSetAction& a, const std::vector<Obj>& pts) {
  std::vector<std::string> out;
  for (Obj p : pts) out.push_back(a.point_name(p));
  std::sort(out.begin(), out.end());
  return out;
}

void set_action_three_points(Criterion& c) {
  const Document doc = load_fixture("set_action_three_points.pga");
  const PartialSetAction& a = doc.set_action("X")->action;
  c.expect("domain/map clauses", validate_set_action(a).ok());
  c.expect("pointwise clauses", validate_pointwise(a).ok());
  c.expect("orbit(e1) = {e1, e3}", sorted_names(a, orbit(a, *a.find_point("e1"))) ==
                                       std::vector<std::string>{"e1", "e3"});
  SetGlobalization g = globalize_set_action(a);
  c.expect("globalization checks", g.ok());
  c.expect("4 points", g.global.num_points() == 4);
  c.expect("restricts back", restrict_action(g.global, g.embedding) == a);
}

void translation_actions(Criterion& c) {
  std::vector<FiniteGroupoid> groupoids;
  for (const char* name : kFixtures) {
    for (const auto& g : load_fixture(name).groupoids) {
      if (g.groupoid.validate(g.declared_identities).ok()) groupoids.push_back(g.groupoid);
    }
  }
  for (const auto& sg : pgact::testing::small_groupoids()) groupoids.push_back(sg.groupoid);
  groupoids.push_back(FiniteGroupoid::transitive(3, 2));
  for (const auto& G : groupoids) {
    PartialSetAction t = translation_action(G);
    c.expect("valid", validate_set_action(t).ok() && validate_pointwise(t).ok());
    c.expect("global", is_global(t));
    for (Mor s = 0; s < G.size(); ++s) {
      std::vector<Obj> o = orbit(t, s);
      std::sort(o.begin(), o.end());
      c.expect("orbit(s) = G(d(s), -)", o == G.with_domain(G.d(s)));
    }
  }
}

void idempotent_globalization(Criterion& c) {
  const Document doc = load_fixture("idempotents_handwritten_globalization.pga");
  const PartialCatAction& a = doc.action("A")->action;
  const FiniteGroupoid& G = a.groupoid();
  const Field q = Field::rationals();
  const Obj x = 0, y = 1;
  const Vector e1 = unit_vector(q, 3, 0), e3 = unit_vector(q, 3, 2), e12 = add(e1, unit_vector(q, 3, 1));
  GlobalizabilityCheck gc = check_globalizable(a);
  c.expect("globalizable", gc.globalizable);
  if (gc.globalizable) {
    c.expect("certificates", gc.certificate[*G.find("g")][x] == e3 && gc.certificate[*G.find("g^-1")][y] == e1 &&
                                 gc.certificate[*G.find("r(g)")][x] == e3 && gc.certificate[*G.find("r(g)")][y] == e3 &&
                                 gc.certificate[*G.find("d(g)")][x] == e12 &&
                                 gc.certificate[*G.find("d(g)")][y] == e12);
  }
  Globalization built = globalize_cat_action(a);
  const PartialCatAction& b = built.target;
  const Semicategory& T = b.semicategory();
  bool ranks = T.num_objects() > 0;
  for (Obj p = 0; p < T.num_objects(); ++p) {
    for (Obj r = 0; r < T.num_objects(); ++r) ranks = ranks && T.rank(p, r) == 4;
  }
  c.expect("rank 4 per object pair", ranks);
  // beta^g(a e1 + b e2) = a e3 + b e4 on every pair it acts on.
  const Mor g = *G.find("g");
  bool beta = false, beta_ok = true;
  for (Obj p = 0; p < T.num_objects(); ++p) {
    for (Obj r = 0; r < T.num_objects(); ++r) {
      const Matrix* m = b.map(g, p, r);
      if (!m) continue;
      beta = true;
      beta_ok = beta_ok && m->rows() == 4 && m->cols() == 4 &&
                m->apply(unit_vector(q, 4, 0)) == unit_vector(q, 4, 2) &&
                m->apply(unit_vector(q, 4, 1)) == unit_vector(q, 4, 3);
    }
  }
  c.expect("beta^g on e1, e2", beta && beta_ok);
  c.expect("globalization clauses", check_globalization(a, built).ok());
  c.expect("equivalent to the hand-coded action",
           check_equivalent(a, built, doc.resolve(*doc.globalization("H"))).equivalent);
}

bool every_component_has_identity(const PartialCatAction& a) {
  for (Mor g = 0; g < a.groupoid().size(); ++g) {
    for (Obj x = 0; x < a.num_objects(); ++x) {
      if (a.in_domain(g, x) && !find_local_identity(a.semicategory(), a.ideal(g), x).exists) return false;
    }
  }
  return true;
}

void globalizability_property(Criterion& c) {
  std::size_t no = 0;
  for (const auto& fx : pool()) {
    const bool identities = every_component_has_identity(fx.partial);
    c.expect("check_globalizable agrees", check_globalizable(fx.partial).globalizable == identities);
    Globalization g = globalize_cat_action(fx.partial);
    c.expect("globalize succeeds iff local identities", g.ok() == identities);
    if (g.ok()) c.expect("output is a globalization", check_globalization(fx.partial, g).ok());
    if (!identities) ++no;
  }
  const Document nil = load_fixture("nilpotent_ideal.pga");
  const PartialCatAction& a = nil.action("A")->action;
  c.expect("nilpotent fixture refused", !every_component_has_identity(a) && !globalize_cat_action(a).ok());
  c.expect("failing direction exhibited", no > 0);
}

void three_morphism_skew(Criterion& c) {
  const Document doc = load_fixture("three_morphisms.pga");
  const PartialCatAction& a = doc.action("A")->action;
  const FiniteGroupoid& G = a.groupoid();
  SkewSemicategory s = build_skew(a);
  struct Summand {
    const char* tag;
    Obj target;
    std::size_t dim;
  };
  const Obj x = 0, y = 1;
  const std::vector<std::vector<Summand>> expected = {
      {{"g1", x, 4}, {"g3", y, 2}}, {{"g2", y, 0}, {"g3", x, 2}}, {{"g1", x, 0}, {"g3", y, 2}}, {{"g2", y, 3}, {"g3", x, 2}}};
  bool decomposition = true;
  for (Obj p = 0; p < 2; ++p) {
    for (Obj r = 0; r < 2; ++r) {
      const auto& got = s.at(p, r);
      const auto& want = expected[p * 2 + r];
      decomposition = decomposition && got.size() == want.size();
      for (std::size_t i = 0; decomposition && i < got.size(); ++i) {
        decomposition = G.name(got[i].g) == want[i].tag && got[i].target == want[i].target && got[i].dim == want[i].dim;
      }
    }
  }
  c.expect("hom decompositions", decomposition);
  c.expect("associativity", check_skew_associative(s).ok());
  const Check* nest = validate_set_action(a.object_action()).find("set.domain-nesting");
  c.expect("domain nesting flagged", nest && !nest->passed());
}

void lr_property(Criterion& c) {
  std::size_t hypothesis = 0;
  for (const auto& fx : pool()) {
    AssociativityCriterion lr = check_lr_criterion(fx.partial);
    if (!lr.hypothesis) continue;
    ++hypothesis;
    c.expect("no counterexample", check_skew_associative(build_skew(fx.partial)).ok());
  }
  c.expect("hypothesis met", hypothesis > 0);
}

void transport(Criterion& c) {
  auto one = [&](const PartialCatAction& a) {
    TransportCheck t = check_skew_ring_transport(a);
    c.expect("bijection of bases", t.report.find("transport.bijection")->passed());
    c.expect("structure constants", t.report.find("transport.products")->passed());
  };
  for (const char* name : {"idempotents_partial.pga", "three_morphisms.pga"}) one(load_fixture(name).action("A")->action);
  for (std::size_t i = 0; i < 12; ++i) one(pool()[i].partial);
}

void s_unital(Criterion& c) {
  std::vector<Semicategory> cats;
  for (const char* name : kFixtures) {
    for (const auto& s : load_fixture(name).semicategories) cats.push_back(s.cat);
  }
  for (std::size_t i = 0; i < 12; ++i) {
    cats.push_back(pool()[i].partial.semicategory());
    cats.push_back(pool()[i].global.semicategory());
  }
  std::size_t met = 0;
  for (const auto& cat : cats) {
    if (!check_left_local_units(cat).ok()) continue;
    ++met;
    c.expect("a(C) s-unital", check_s_unital(algebra_of(cat).algebra).s_unital);
  }
  c.expect("hypothesis met", met > 0);
  const Field q = Field::rationals();
  Algebra zero(q, 1);
  c.expect("zero-product counterexample", !check_s_unital(zero).s_unital);
}

void ring_level(Criterion& c) {
  const Document doc = load_fixture("idempotents_handwritten_globalization.pga");
  RingGlobalizationCheck r =
      check_ring_level_globalization(doc.action("A")->action, doc.resolve(*doc.globalization("H")));
  for (const auto& ch : r.report.checks()) c.expect(ch.tag, ch.passed());
}

void graded_example(Criterion& c) {
  const Document doc = load_fixture("graded_idempotents.pga");
  const GradedSemicategory& b = doc.grading("Bg")->graded;
  const FiniteGroupoid& G = b.groupoid();
  const Mor dg = *G.find("d(g)"), rg = *G.find("r(g)"), g = *G.find("g"), gi = *G.find("g^-1");
  GradedConstruction smash = build_smash(b);
  // Printed table: e3 on (d(g), d(g)) and (g, g), e4 on (r(g), r(g)) and
  // (g^-1, g^-1), zero elsewhere.
  auto printed = [&](Mor t, Mor s) -> std::vector<std::size_t> {
    if (t != s) return {};
    return (t == dg || t == g) ? std::vector<std::size_t>{2} : std::vector<std::size_t>{3};
  };
  bool table = smash.objects.size() == 8;
  for (Obj u = 0; table && u < 2; ++u) {
    for (Mor t = 0; t < G.size(); ++t) {
      for (Obj v = 0; v < 2; ++v) {
        for (Mor s = 0; s < G.size(); ++s) table = table && smash.source(*smash.find(u, t), *smash.find(v, s)) == printed(t, s);
      }
    }
  }
  c.expect("printed hom table", table);
  bool identities = check_homogeneous_identities(b).ok();
  CategoryCheck cat = check_category(smash.cat);
  for (Obj u = 0; identities && u < 2; ++u) {
    for (Mor s : {dg, rg, g, gi}) {
      const Obj o = *smash.find(u, s);
      const std::size_t want = G.d(s) == dg ? 2 : 3;
      Vector expected = zero_vector(smash.cat.field(), smash.cat.rank(o, o));
      const auto& src = smash.source(o, o);
      for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] == want) expected[i] = smash.cat.field().one();
      }
      identities = identities && cat.identities[o] && *cat.identities[o] == expected;
    }
  }
  c.expect("homogeneous identities", identities);
  PartialCatAction canonical = canonical_smash_action(b, smash);
  GlobalityCheck global = check_global(canonical);
  c.expect("canonical action global", global.by_domains && global.by_composition);
  c.expect("canonical action free", check_free(canonical).free);
  c.expect("quotient isomorphic to tensor", check_galois_covering(b).covering);
  SkewEquivalenceCheck eq = check_skew_equivalence(b);
  c.expect("fully faithful", eq.fully_faithful && eq.functor);
  c.expect("essentially surjective", eq.surjective);
}

void linear_algebra(Criterion& c) {
  std::mt19937 rng(pgact::testing::kSeed + 110);
  for (const Field& f : {Field::rationals(), Field::prime(7)}) {
    for (int t = 0; t < 1000; ++t) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
      auto gens = [&] { return std::uniform_int_distribution<std::size_t>(0, n + 1)(rng); };
      const Submodule a = pgact::testing::random_submodule(rng, f, n, gens());
      const Submodule b = pgact::testing::random_submodule(rng, f, n, gens());
      const Submodule meet = intersect(a, b), join = sum_of(a, b);
      c.expect("dimension formula", a.dim() + b.dim() == meet.dim() + join.dim());
      c.expect("dim A/(A cap B)", quotient_module(a, meet).dim() == a.dim() - meet.dim());
      c.expect("dim (A+B)/B", quotient_module(join, b).dim() == a.dim() - meet.dim());
    }
  }
}

int run_status(const std::string& command) {
  const int raw = std::system((command + " >/dev/null 2>&1").c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

void cli(Criterion& c) {
  for (const char* name : kFixtures) {
    const Document d = load_fixture(name);
    const std::string once = emit_document(d);
    const Document back = parse_document(once);
    c.expect(std::string("round trip ") + name, back == d && emit_document(back) == once);
  }
  const std::string cli = PGACT_CLI_PATH;
  const std::string dir = PGACT_FIXTURE_DIR;
  c.expect("exit 0", run_status(cli + " validate " + dir + "/idempotents_partial.pga") == 0);
  c.expect("exit 1", run_status(cli + " validate " + dir + "/three_morphisms.pga") == 1);
  c.expect("exit 2 on missing input", run_status(cli + " validate " + dir + "/missing.pga") == 2);
  c.expect("exit 2 on syntax error", run_status("printf '[groupoid G\\n' | " + cli + " validate") == 2);
  c.expect("driver script", run_status(std::string(PGACT_TOOLS_DIR) + "/run_examples.sh " + cli + " " + dir) == 0);
}

struct Entry {
  int number;
  const char* title;
  std::function<void(Criterion&)> run;
};

}  // namespace

int main() {
  const std::vector<Entry> entries = {
      {1, "set action orbits and four-point globalization", set_action_three_points},
      {2, "translation actions are global with orbits G(d(s), -)", translation_actions},
      {3, "globalization of the idempotent example", idempotent_globalization},
      {4, "globalize succeeds iff local identities exist (100 fixtures)", globalizability_property},
      {5, "three-morphism skew decompositions and associativity", three_morphism_skew},
      {6, "(L,R)-associative ideals give associative skew products (100 fixtures)", lr_property},
      {7, "skew category algebra transports to the skew ring", transport},
      {8, "algebras of locally unital semicategories are s-unital", s_unital},
      {9, "ring-level globalization clauses", ring_level},
      {10, "smash product example, covering and equivalence", graded_example},
      {11, "submodule dimension formula (1000 pairs over Q and GF(7))", linear_algebra},
      {12, "CLI round trip, exit codes and example driver", cli},
  };
  int failures = 0;
  for (const auto& e : entries) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.expect(std::string("exception: ") + ex.what(), false);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string detail;
    std::vector<std::string> seen;
    for (const auto& f : c.failed()) {
      if (std::find(seen.begin(), seen.end(), f) != seen.end()) continue;
      seen.push_back(f);
      detail += (detail.empty() ? "" : "; ") + f;
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (c.passed() ? "PASS" : "FAIL") << " " << e.number << " " << e.title << " [" << timing << "]";
    if (!c.passed()) std::cout << " failed: " << detail;
    std::cout << "\n";
    if (!c.passed()) ++failures;
  }
  std::cout << failures << " of " << entries.size() << " criteria failed\n";
  return failures;
}
