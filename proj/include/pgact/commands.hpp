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

#ifndef PGACT_COMMANDS_HPP
#define PGACT_COMMANDS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgact/algebra.hpp"
#include "pgact/document.hpp"
#include "pgact/report.hpp"

namespace pgact {

// A command cannot run on the document (missing entity, wrong kind).
class CommandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandOptions {
  // Entity names; empty selects the first entity of the needed kind.
  std::string action;
  std::string grading;
  std::string globalization;
  bool strict_ideals = false;
  LRConvention convention = LRConvention::commuting;
};

struct CommandResult {
  Report report;
  // Constructed objects added to the input document, for --emit.
  std::optional<Document> emitted;
  // One line per fact worth printing beside the report.
  std::vector<std::string> summary;
};

const std::vector<std::string>& command_names();

// Throws CommandError for unknown commands or missing entities.
CommandResult run_command(const std::string& command, const Document& doc, const CommandOptions& opts = {});

}  // namespace pgact

#endif  // PGACT_COMMANDS_HPP
