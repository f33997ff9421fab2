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

#ifndef PGACT_DOCUMENT_HPP
#define PGACT_DOCUMENT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pgact/cat_action.hpp"
#include "pgact/globalization.hpp"
#include "pgact/graded.hpp"
#include "pgact/groupoid.hpp"
#include "pgact/semicategory.hpp"
#include "pgact/set_action.hpp"

namespace pgact {

// Input error with a 1-based source location (line 0 when not tied to text).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct NamedGroupoid {
  std::string name;
  FiniteGroupoid groupoid;
  // Identity names as written in the input, empty when not declared.
  std::vector<std::string> declared_identities;
  friend bool operator==(const NamedGroupoid&, const NamedGroupoid&) = default;
};

struct NamedSemicategory {
  std::string name;
  Semicategory cat;
  friend bool operator==(const NamedSemicategory&, const NamedSemicategory&) = default;
};

struct NamedSetAction {
  std::string name;
  std::string over;
  PartialSetAction action;
  friend bool operator==(const NamedSetAction&, const NamedSetAction&) = default;
};

struct NamedAction {
  std::string name;
  std::string over;
  std::string on;
  PartialCatAction action;
  friend bool operator==(const NamedAction&, const NamedAction&) = default;
};

struct NamedGrading {
  std::string name;
  std::string on;
  std::string over;
  GradedSemicategory graded;
  friend bool operator==(const NamedGrading&, const NamedGrading&) = default;
};

// Globalization data linking a partial action (of) to a global one (target).
struct NamedGlobalization {
  std::string name;
  std::string of;
  std::string target;
  std::vector<Obj> embedding;
  std::vector<std::vector<std::optional<Matrix>>> phi;
  friend bool operator==(const NamedGlobalization&, const NamedGlobalization&) = default;
};

struct Document {
  Field field;
  std::vector<NamedGroupoid> groupoids;
  std::vector<NamedSemicategory> semicategories;
  std::vector<NamedSetAction> set_actions;
  std::vector<NamedAction> actions;
  std::vector<NamedGrading> gradings;
  std::vector<NamedGlobalization> globalizations;

  const NamedGroupoid* groupoid(std::string_view name) const;
  const NamedSemicategory* semicategory(std::string_view name) const;
  const NamedSetAction* set_action(std::string_view name) const;
  const NamedAction* action(std::string_view name) const;
  const NamedGrading* grading(std::string_view name) const;
  const NamedGlobalization* globalization(std::string_view name) const;
  // The globalization record as a Globalization of its target action.
  Globalization resolve(const NamedGlobalization& g) const;

  bool empty() const;
  friend bool operator==(const Document&, const Document&) = default;
};

// Parses the line-oriented text format; throws ParseError at the first
// problem. field_override, when nonempty, replaces the field line.
Document parse_document(std::string_view text, std::string_view field_override = "");

// Canonical text for a document; parse_document(emit_document(d)) == d.
std::string emit_document(const Document& d);

}  // namespace pgact

#endif  // PGACT_DOCUMENT_HPP
