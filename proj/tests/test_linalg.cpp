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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "pgact/linalg.hpp"
#include "support/generators.hpp"

using namespace pgact;
using pgact::testing::random_submodule;
using pgact::testing::random_vector;

namespace {

// Every vector of F_p^n as a tuple of residues.
std::vector<std::vector<long>> all_vectors(long p, std::size_t n) {
  std::vector<std::vector<long>> out(1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<long>> next;
    for (const auto& v : out) {
      for (long c = 0; c < p; ++c) {
        auto w = v;
        w.push_back(c);
        next.push_back(w);
      }
    }
    out = next;
  }
  return out;
}

Vector to_vector(const Field& f, const std::vector<long>& v) {
  Vector out;
  for (long c : v) out.push_back(f.from(c));
  return out;
}

// Brute-force set of members of a submodule of F_p^n; its size is p^dim.
std::set<std::vector<long>> members(const Submodule& s, long p) {
  std::set<std::vector<long>> out;
  for (const auto& v : all_vectors(p, s.ambient_rank())) {
    if (s.contains(to_vector(s.field(), v))) out.insert(v);
  }
  return out;
}

// Span by closure under addition and scaling, independent of row reduction.
std::set<std::vector<long>> closure(const std::vector<std::vector<long>>& gens, long p, std::size_t n) {
  std::set<std::vector<long>> out{std::vector<long>(n, 0)};
  bool grown = true;
  while (grown) {
    grown = false;
    std::vector<std::vector<long>> current(out.begin(), out.end());
    for (const auto& v : current) {
      for (const auto& g : gens) {
        for (long c = 1; c < p; ++c) {
          std::vector<long> w(n);
          for (std::size_t i = 0; i < n; ++i) w[i] = (v[i] + c * g[i]) % p;
          grown |= out.insert(w).second;
        }
      }
    }
  }
  return out;
}

std::size_t log_size(std::size_t size, long p) {
  std::size_t d = 0;
  while (size > 1) {
    size /= static_cast<std::size_t>(p);
    ++d;
  }
  return d;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rational scalars normalize and invert") {
    Field q = Field::rationals();
    Scalar a = q.parse_scalar("6/4");
    CHECK(a == q.parse_scalar("3/2"));
    CHECK(a * a.inverse() == q.one());
    CHECK((a - a).is_zero());
    CHECK(q.parse_scalar("-2/-4") == q.parse_scalar("1/2"));
    CHECK_THROWS_AS(q.parse_scalar("1/0"), FieldError);
    CHECK_THROWS_AS(q.parse_scalar("x"), FieldError);
    CHECK_THROWS_AS(q.zero().inverse(), FieldError);
  }

  TEST_CASE("prime field arithmetic reduces mod p") {
    Field f = Field::prime(7);
    CHECK(f.from(10) == f.from(3));
    CHECK(f.from(3).inverse() == f.from(5));
    CHECK(f.parse_scalar("1/2") == f.from(4));
    CHECK(f.from(-1) == f.from(6));
    CHECK_THROWS_AS(f.parse_scalar("1/7"), FieldError);
    CHECK_THROWS_AS(Field::prime(8), FieldError);
    CHECK(Field::parse("F7") == f);
    CHECK(Field::parse("GF7") == f);
    CHECK(Field::parse("Q").is_rational());
  }

  TEST_CASE("row reduction is canonical under change of generators") {
    std::mt19937 rng(pgact::testing::kSeed);
    for (Field f : {Field::rationals(), Field::prime(7)}) {
      for (int t = 0; t < 50; ++t) {
        Submodule s = random_submodule(rng, f, 5, 3);
        std::vector<Vector> gens;
        for (int i = 0; i < 4; ++i) {
          Vector v = zero_vector(f, 5);
          for (const auto& b : s.basis()) axpy(v, random_vector(rng, f, 1)[0], b);
          gens.push_back(v);
        }
        gens.insert(gens.end(), s.basis().rbegin(), s.basis().rend());
        CHECK(Submodule::span(f, 5, gens) == s);
      }
    }
  }

  TEST_CASE("submodule lattice agrees with brute-force enumeration over F3") {
    const long p = 3;
    const std::size_t n = 4;
    Field f = Field::prime(3);
    std::mt19937 rng(pgact::testing::kSeed + 1);
    std::uniform_int_distribution<long> coef(0, p - 1);
    for (int t = 0; t < 40; ++t) {
      std::vector<std::vector<long>> ga(2, std::vector<long>(n)), gb(2, std::vector<long>(n));
      for (auto* g : {&ga, &gb}) {
        for (auto& v : *g) {
          for (auto& c : v) c = coef(rng);
        }
      }
      std::vector<Vector> va, vb;
      for (const auto& v : ga) va.push_back(to_vector(f, v));
      for (const auto& v : gb) vb.push_back(to_vector(f, v));
      Submodule a = Submodule::span(f, n, va), b = Submodule::span(f, n, vb);

      auto ma = closure(ga, p, n), mb = closure(gb, p, n);
      CHECK(members(a, p) == ma);
      CHECK(a.dim() == log_size(ma.size(), p));
      std::set<std::vector<long>> both;
      std::set_intersection(ma.begin(), ma.end(), mb.begin(), mb.end(), std::inserter(both, both.end()));
      CHECK(members(intersect(a, b), p) == both);
      auto gs = ga;
      gs.insert(gs.end(), gb.begin(), gb.end());
      CHECK(members(sum_of(a, b), p) == closure(gs, p, n));
      CHECK(a.is_subset_of(b) == std::includes(mb.begin(), mb.end(), ma.begin(), ma.end()));
    }
  }

  TEST_CASE("dimension formula holds for random pairs") {
    std::mt19937 rng(pgact::testing::kSeed + 2);
    std::uniform_int_distribution<std::size_t> count(0, 5);
    for (Field f : {Field::rationals(), Field::prime(7)}) {
      for (int t = 0; t < 300; ++t) {
        Submodule a = random_submodule(rng, f, 6, count(rng)), b = random_submodule(rng, f, 6, count(rng));
        CHECK(a.dim() + b.dim() == intersect(a, b).dim() + sum_of(a, b).dim());
      }
    }
  }

  TEST_CASE("quotient modules have the expected dimension and kill relations") {
    std::mt19937 rng(pgact::testing::kSeed + 3);
    for (Field f : {Field::rationals(), Field::prime(7)}) {
      for (int t = 0; t < 100; ++t) {
        Submodule amb = random_submodule(rng, f, 6, 4);
        std::vector<Vector> rel;
        for (int i = 0; i < 2; ++i) {
          Vector v = zero_vector(f, 6);
          for (const auto& b : amb.basis()) axpy(v, random_vector(rng, f, 1)[0], b);
          rel.push_back(v);
        }
        Submodule r = Submodule::span(f, 6, rel);
        Quotient q = quotient_module(amb, r);
        CHECK(q.dim() == amb.dim() - r.dim());
        for (const auto& v : r.basis()) CHECK(is_zero(q.projection.apply(v)));
        for (std::size_t i = 0; i < q.dim(); ++i) CHECK(q.projection.apply(q.transversal[i]) == unit_vector(f, q.dim(), i));
      }
    }
    Field q = Field::rationals();
    CHECK_THROWS(quotient_module(Submodule::zero(q, 2), Submodule::full(q, 2)));
  }

  TEST_CASE("kernel, image, inverse and solve are consistent") {
    std::mt19937 rng(pgact::testing::kSeed + 4);
    Field f = Field::rationals();
    for (int t = 0; t < 60; ++t) {
      std::vector<Vector> rows;
      for (int i = 0; i < 4; ++i) rows.push_back(random_vector(rng, f, 5));
      Matrix m = Matrix::from_rows(f, 5, rows);
      Submodule ker = kernel(m);
      CHECK(ker.dim() + m.rank() == 5);
      for (const auto& v : ker.basis()) CHECK(is_zero(m.apply(v)));
      CHECK(image(m, Submodule::full(f, 5)).dim() == m.rank());
      Vector x = random_vector(rng, f, 5);
      auto sol = solve(m, m.apply(x));
      REQUIRE(sol);
      CHECK(m.apply(*sol) == m.apply(x));
      Matrix sq = Matrix::from_rows(f, 4, {random_vector(rng, f, 4), random_vector(rng, f, 4), random_vector(rng, f, 4),
                                           random_vector(rng, f, 4)});
      auto inv = sq.inverse();
      CHECK(inv.has_value() == (sq.rank() == 4));
      if (inv) CHECK(sq * *inv == Matrix::identity(f, 4));
    }
  }

  TEST_CASE("coordinates round-trip through combine") {
    std::mt19937 rng(pgact::testing::kSeed + 5);
    Field f = Field::prime(7);
    for (int t = 0; t < 50; ++t) {
      Submodule s = random_submodule(rng, f, 5, 3);
      Vector c = random_vector(rng, f, s.dim());
      Vector v = s.combine(c);
      auto back = s.coordinates(v);
      REQUIRE(back);
      CHECK(*back == c);
      CHECK(s.contains(v));
    }
  }

  TEST_CASE("sparse reducer matches dense kernel") {
    std::mt19937 rng(pgact::testing::kSeed + 6);
    Field f = Field::rationals();
    for (int t = 0; t < 30; ++t) {
      std::vector<Vector> rows;
      SparseReducer red(f, 6);
      for (int i = 0; i < 4; ++i) {
        Vector v = random_vector(rng, f, 6);
        rows.push_back(v);
        SparseRow s;
        for (std::uint32_t j = 0; j < 6; ++j) {
          if (!v[j].is_zero()) s.emplace_back(j, v[j]);
        }
        red.add(s);
      }
      Matrix m = Matrix::from_rows(f, 6, rows);
      CHECK(red.rank() == m.rank());
      CHECK(Submodule::span(f, 6, red.nullspace()) == kernel(m));
    }
  }
}

TEST_CASE("empty matrices invert to empty matrices" * doctest::test_suite("linalg")) {
  Field q = Field::rationals();
  auto inv = Matrix(q, 0, 0).inverse();
  REQUIRE(inv.has_value());
  CHECK(inv->rows() == 0);
}
