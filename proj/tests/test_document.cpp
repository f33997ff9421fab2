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

#include <string>

#include "pgact/document.hpp"
#include "support/generators.hpp"

using namespace pgact;

namespace {

const char* const kFixtures[] = {
    "graded_groupoid_algebra.pga", "graded_idempotents.pga", "idempotents_handwritten_globalization.pga",
    "idempotents_partial.pga",     "nilpotent_ideal.pga",    "set_action_three_points.pga",
    "three_morphisms.pga",         "three_morphisms_printed.pga", "two_step_orbit.pga"};

const std::string kSmall =
    "field: Q\n"
    "\n"
    "[groupoid G]\n"
    "mor: e g\n"
    "identities: e\n"
    "d: g->e\n"
    "r: g->e\n"
    "inv: g->g\n"
    "comp: g*g=e\n"
    "\n"
    "[semicat C]\n"
    "objects: x y\n"
    "hom * *: 2 a b\n"
    "sc * * * a a: a\n"
    "sc * * * b b: b\n";

// Line and column of the ParseError raised by text.
std::pair<std::size_t, std::size_t> error_at(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  FAIL("no ParseError");
  return {0, 0};
}

}  // namespace

TEST_SUITE("document") {
  TEST_CASE("emit and parse round trip on every fixture") {
    for (const char* name : kFixtures) {
      CAPTURE(name);
      const Document d = pgact::testing::load_fixture(name);
      CHECK_FALSE(d.empty());
      const std::string once = emit_document(d);
      const Document back = parse_document(once);
      CHECK(back == d);
      CHECK(emit_document(back) == once);
    }
  }

  TEST_CASE("wildcards and label combinations") {
    const Document d = parse_document(kSmall);
    const Semicategory& c = d.semicategory("C")->cat;
    REQUIRE(c.num_objects() == 2);
    for (Obj y = 0; y < 2; ++y) {
      for (Obj x = 0; x < 2; ++x) {
        CHECK(c.rank(y, x) == 2);
        CHECK(c.labels(y, x) == std::vector<std::string>{"a", "b"});
      }
    }
    CHECK(c.basis_product(0, 1, 0, 0, 0) == c.unit(0, 0, 0));
    CHECK(c.basis_product(0, 1, 0, 0, 1) == c.zero(0, 0));
    CHECK(c.validate().ok());

    const Document w = parse_document(kSmall +
                                      "\n[semicat D]\n"
                                      "objects: x\n"
                                      "hom x x: 2 a b\n"
                                      "sc x x x a a: 2*a - b\n"
                                      "sc x x x b a: 0\n"
                                      "sc x x x a b: 1/2 3\n");
    const Semicategory& dd = w.semicategory("D")->cat;
    const Field& f = dd.field();
    CHECK(dd.basis_product(0, 0, 0, 0, 0) == Vector{f.from(2), f.from(-1)});
    CHECK(dd.basis_product(0, 0, 0, 0, 1) == Vector{f.parse_scalar("1/2"), f.from(3)});
    CHECK(dd.basis_product(0, 0, 0, 1, 0) == dd.zero(0, 0));
  }

  TEST_CASE("field override") {
    const Document q = parse_document(kSmall);
    CHECK(q.field == Field::rationals());
    const Document f7 = parse_document(kSmall, "F7");
    CHECK(f7.field == Field::prime(7));
    CHECK(f7.semicategory("C")->cat.field() == Field::prime(7));
    CHECK_THROWS_AS(parse_document(kSmall, "F6"), ParseError);
    CHECK_THROWS_AS(parse_document(kSmall, "R"), ParseError);
  }

  TEST_CASE("parse errors carry line and column") {
    CHECK(error_at("field: Q\n[groupoid G\n") == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(error_at("field: Q\n[monoid M]\nmor: e\n") == std::pair<std::size_t, std::size_t>{2, 2});
    CHECK(error_at("field: Q\nnonsense\n") == std::pair<std::size_t, std::size_t>{2, 1});
    // A second section named G; the error points at its header.
    CHECK(error_at(kSmall + "[groupoid G]\nmor: e\nidentities: e\n").first == 16);
    // Unknown label in a structure constant points at the label.
    const auto bad = error_at(kSmall + "sc * * * a b: c\n");
    CHECK(bad.first == 16);
    CHECK(bad.second == 15);
  }

  TEST_CASE("wrong vector length names the hom and its rank") {
    try {
      parse_document("field: Q\n[semicat C]\nobjects: x\nhom x x: 2 a b\nsc x x x a a: 1 0 0\n");
      FAIL("no ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 5);
      CHECK(e.column() == 15);
      const std::string what = e.what();
      CHECK(what.find("hom x x") != std::string::npos);
      CHECK(what.find("rank 2") != std::string::npos);
    }
  }

  TEST_CASE("lookups by name") {
    const Document d = parse_document(kSmall);
    CHECK(d.groupoid("G") != nullptr);
    CHECK(d.groupoid("H") == nullptr);
    CHECK(d.action("A") == nullptr);
    CHECK(parse_document("field: Q\n").empty());
  }
}
