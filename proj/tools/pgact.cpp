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

// Command-line driver: pgact <command> [file] [options].
// Exit status 0 when every reported clause passes, 1 when some clause fails,
// 2 on input errors.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pgact/commands.hpp"
#include "pgact/document.hpp"

namespace {

constexpr int kInputError = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pgact::CommandError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial groupoid actions on finite semicategories"};
  std::string command, input, field, emit, check, convention = "commuting";
  bool json = false;
  pgact::CommandOptions opts;
  app.add_option("command", command, "validate, globalize, skew, multipliers, assoc-check, smash, tensor, galois-check, "
                                     "quotient or equiv-check")
      ->required()
      ->check(CLI::IsMember(pgact::command_names()));
  app.add_option("file", input, "input document; standard input when omitted or '-'");
  app.add_option("--field", field, "coefficient field, Q or F<p>, overriding the document");
  app.add_option("--emit", emit, "write the resulting document to this path ('-' for standard output)");
  app.add_flag("--json", json, "print the report as JSON");
  app.add_option("--check", check, "only clauses whose tag starts with this prefix decide the exit status");
  app.add_flag("--strict-ideals", opts.strict_ideals, "check ideal conditions against every object");
  app.add_option("--action", opts.action, "action section to use");
  app.add_option("--grading", opts.grading, "grading section to use");
  app.add_option("--globalization", opts.globalization, "globalization section to use");
  app.add_option("--lr-convention", convention, "identity used by the (L,R) test")
      ->check(CLI::IsMember({"commuting", "as-printed"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  if (convention == "as-printed") opts.convention = pgact::LRConvention::as_printed;

  pgact::CommandResult result;
  try {
    pgact::Document doc = pgact::parse_document(read_input(input), field);
    result = pgact::run_command(command, doc, opts);
    if (!emit.empty()) {
      std::string text = pgact::emit_document(result.emitted ? *result.emitted : doc);
      if (emit == "-") {
        std::cout << text;
      } else {
        std::ofstream out(emit, std::ios::binary);
        if (!out) throw pgact::CommandError("cannot write '" + emit + "'");
        out << text;
      }
    }
  } catch (const pgact::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const pgact::CommandError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }

  pgact::Report report = check.empty() ? result.report : result.report.filtered(check);
  if (!check.empty() && report.checks().empty()) {
    std::cerr << "input error: no clause tag starts with '" << check << "'\n";
    return kInputError;
  }
  std::ostream& out = emit == "-" ? std::cerr : std::cout;
  if (json) {
    nlohmann::json j;
    j["command"] = command;
    j["summary"] = result.summary;
    j["report"] = nlohmann::json::parse(report.to_json());
    out << j.dump(2) << "\n";
  } else {
    for (const auto& line : result.summary) out << line << "\n";
    out << report.to_text();
  }
  return report.ok() ? 0 : 1;
}
