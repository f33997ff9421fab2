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
#include "generators.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "pgact/set_action.hpp"

namespace pgact::testing {

namespace {

SmallAlgebra make_algebra(const Field& f, std::string name, std::size_t n,
                          const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>& nonzero,
                          std::vector<std::vector<std::size_t>> ideals, bool unital) {
  SmallAlgebra a{std::move(name), n, std::vector<Vector>(n * n, zero_vector(f, n)), std::move(ideals), unital};
  for (auto [i, j, k] : nonzero) a.products[i * n + j] = unit_vector(f, n, k);
  return a;
}

template <class T>
const T& pick(std::mt19937& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

// Basis vector (copy, b) of B^m, with the copy index moved by `by`.
std::size_t slot(const SmallAlgebra& b, std::size_t m, std::size_t copy, std::size_t i, std::size_t by) {
  return ((copy + by) % m) * b.rank + i;
}

}  // namespace

std::vector<SmallAlgebra> small_algebras(const Field& f) {
  return {
      make_algebra(f, "field", 1, {{0, 0, 0}}, {{}, {0}}, true),
      make_algebra(f, "zero-product", 1, {}, {{}, {0}}, false),
      make_algebra(f, "dual-numbers", 2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}}, {{1}, {0, 1}}, true),
      // Upper triangular 2x2 with basis E11, E12, E22.
      make_algebra(f, "triangular", 3, {{0, 0, 0}, {0, 1, 1}, {1, 2, 1}, {2, 2, 2}}, {{1}, {0, 1}, {1, 2}, {0, 1, 2}},
                   true),
  };
}

std::vector<ShiftedGroupoid> small_groupoids() {
  std::vector<ShiftedGroupoid> out;
  for (std::size_t n : {1u, 2u, 3u}) {
    ShiftedGroupoid s{FiniteGroupoid::cyclic_group(n), {}, n};
    for (std::size_t a = 0; a < n; ++a) s.shift.push_back(a);
    out.push_back(s);
  }
  {
    ShiftedGroupoid s{FiniteGroupoid::transitive(2, 1), std::vector<std::size_t>(4, 0), 1};
    out.push_back(s);
  }
  {
    FiniteGroupoid a = FiniteGroupoid::cyclic_group(2), b = FiniteGroupoid::transitive(2, 1);
    ShiftedGroupoid s{FiniteGroupoid::disjoint_union(a, b), {0, 1, 0, 0, 0, 0}, 2};
    out.push_back(s);
  }
  return out;
}

Semicategory complete_semicategory(const Field& f, const std::vector<std::string>& objects, const SmallAlgebra& b,
                                   std::size_t copies) {
  const std::size_t k = objects.size(), n = b.rank * copies;
  Semicategory d(f, objects, std::vector<std::size_t>(k * k, n));
  for (Obj z = 0; z < k; ++z) {
    for (Obj y = 0; y < k; ++y) {
      for (Obj x = 0; x < k; ++x) {
        for (std::size_t c = 0; c < copies; ++c) {
          for (std::size_t i = 0; i < b.rank; ++i) {
            for (std::size_t j = 0; j < b.rank; ++j) {
              Vector v = zero_vector(f, n);
              const Vector& p = b.products[i * b.rank + j];
              for (std::size_t l = 0; l < b.rank; ++l) v[slot(b, copies, c, l, 0)] = p[l];
              d.set_basis_product(z, y, x, slot(b, copies, c, i, 0), slot(b, copies, c, j, 0), v);
            }
          }
        }
      }
    }
  }
  return d;
}

ActionFixture random_action(std::mt19937& rng, const Field& f) {
  const ShiftedGroupoid sg = pick(rng, small_groupoids());
  // Hom rank at most 4 keeps the multiplier systems small.
  std::vector<SmallAlgebra> algebras;
  for (auto& a : small_algebras(f)) {
    if (a.rank * sg.order <= 4) algebras.push_back(std::move(a));
  }
  const SmallAlgebra& b = pick(rng, algebras);
  const FiniteGroupoid& G = sg.groupoid;
  const std::size_t m = sg.order, n = b.rank * m;

  PartialSetAction points = translation_action(G);
  const std::size_t k = points.num_points();
  Semicategory d = complete_semicategory(f, points.point_names(), b, m);
  PartialCatAction global(points, d);
  for (Mor g = 0; g < G.size(); ++g) {
    HomFamily fam = HomFamily::zero(d);
    for (Obj y : points.domain(g)) {
      for (Obj x : points.domain(g)) fam.at(y, x) = Submodule::full(f, n);
    }
    global.set_ideal(g, fam);
    Matrix shift(f, n, n);
    for (std::size_t c = 0; c < m; ++c) {
      for (std::size_t i = 0; i < b.rank; ++i) shift.at(slot(b, m, c, i, sg.shift[g]), slot(b, m, c, i, 0)) = f.one();
    }
    for (Obj y : points.domain(G.inv(g))) {
      for (Obj x : points.domain(G.inv(g))) global.set_map(g, y, x, shift);
    }
  }

  std::vector<Obj> subset;
  while (subset.empty()) {
    for (Obj p = 0; p < k; ++p) {
      // At most 16 dimensions per ideal algebra keeps the multiplier checks fast.
      const std::size_t next = subset.size() + 1;
      if (next * next * n <= 16 && next <= 3 && std::bernoulli_distribution(0.6)(rng)) subset.push_back(p);
    }
  }
  std::vector<Vector> gens;
  std::string ideal_text;
  for (std::size_t c = 0; c < m; ++c) {
    const auto& ideal = pick(rng, b.ideals);
    ideal_text += (c ? "," : "") + std::to_string(ideal.size());
    for (std::size_t i : ideal) gens.push_back(unit_vector(f, n, slot(b, m, c, i, 0)));
  }
  HomFamily j = HomFamily::zero(d);
  const Submodule k_ideal = Submodule::span(f, n, gens);
  for (Obj y = 0; y < k; ++y) {
    for (Obj x = 0; x < k; ++x) j.at(y, x) = k_ideal;
  }

  ActionFixture out;
  out.description = b.name + "^" + std::to_string(m) + " over " + std::to_string(G.size()) + " morphisms, " +
                    std::to_string(subset.size()) + "/" + std::to_string(k) + " points, ideal dims " + ideal_text;
  out.partial = induce_partial_action(global, j, subset);
  out.global = std::move(global);
  return out;
}

GradedFixture random_graded(std::mt19937& rng, const Field& f) {
  std::vector<ShiftedGroupoid> groupoids = small_groupoids();
  const ShiftedGroupoid& sg = pick(rng, groupoids);
  const FiniteGroupoid& G = sg.groupoid;
  const auto algebras = small_algebras(f);
  const SmallAlgebra& a = G.size() > 3 ? algebras[std::uniform_int_distribution<int>(0, 1)(rng)] : pick(rng, algebras);
  const std::size_t objects = G.size() > 3 ? 1 : std::uniform_int_distribution<std::size_t>(1, 2)(rng);
  const std::size_t n = G.size() * a.rank;

  std::vector<std::string> names;
  for (std::size_t o = 0; o < objects; ++o) names.push_back("o" + std::to_string(o));
  Semicategory base(f, names, std::vector<std::size_t>(objects * objects, n));
  for (Obj z = 0; z < objects; ++z) {
    for (Obj y = 0; y < objects; ++y) {
      for (Obj x = 0; x < objects; ++x) {
        for (Mor g = 0; g < G.size(); ++g) {
          for (Mor h = 0; h < G.size(); ++h) {
            const Mor gh = G.compose(g, h);
            for (std::size_t i = 0; i < a.rank; ++i) {
              for (std::size_t j = 0; j < a.rank; ++j) {
                Vector v = zero_vector(f, n);
                if (gh != kNoMor) {
                  const Vector& p = a.products[i * a.rank + j];
                  for (std::size_t l = 0; l < a.rank; ++l) v[gh * a.rank + l] = p[l];
                }
                base.set_basis_product(z, y, x, g * a.rank + i, h * a.rank + j, v);
              }
            }
          }
        }
      }
    }
  }
  GradedSemicategory graded(base, G);
  for (Obj y = 0; y < objects; ++y) {
    for (Obj x = 0; x < objects; ++x) {
      for (std::size_t i = 0; i < n; ++i) graded.set_degree(y, x, i, i / a.rank);
    }
  }
  return {"F[G] (x) " + a.name + " over " + std::to_string(G.size()) + " morphisms on " + std::to_string(objects) +
              " object(s)",
          graded};
}

Vector random_vector(std::mt19937& rng, const Field& f, std::size_t n) {
  std::uniform_int_distribution<long> coef(-3, 3);
  Vector v = zero_vector(f, n);
  for (auto& s : v) s = f.from(coef(rng));
  return v;
}

Submodule random_submodule(std::mt19937& rng, const Field& f, std::size_t n, std::size_t generators) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < generators; ++i) gens.push_back(random_vector(rng, f, n));
  return Submodule::span(f, n, gens);
}

std::string fixture_path(const std::string& name) { return std::string(PGACT_FIXTURE_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Document load_fixture(const std::string& name) { return parse_document(read_file(fixture_path(name))); }

bool strictly_valid(const PartialCatAction& a) {
  ActionOptions strict;
  strict.strict_ideals = true;
  return validate_cat_action(a, strict).ok();
}

}  // namespace pgact::testing
