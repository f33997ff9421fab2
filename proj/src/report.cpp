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

#include "pgact/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace pgact {

Check& Report::clause(std::string tag, std::string description) {
  Check c;
  c.tag = std::move(tag);
  c.description = std::move(description);
  checks_.push_back(std::move(c));
  return checks_.back();
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (Check c : other.checks_) {
    c.tag = prefix + c.tag;
    checks_.push_back(std::move(c));
  }
  for (const auto& n : other.notes_) notes_.push_back(prefix + n);
}

bool Report::ok() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed(); });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed(); }));
}

const Check* Report::find(const std::string& tag) const {
  for (const auto& c : checks_) {
    if (c.tag == tag) return &c;
  }
  return nullptr;
}

Report Report::filtered(const std::string& prefix) const {
  Report r;
  for (const auto& c : checks_) {
    if (c.tag.compare(0, prefix.size(), prefix) == 0) r.checks_.push_back(c);
  }
  r.notes_ = notes_;
  return r;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << (c.passed() ? "PASS " : "FAIL ") << c.tag << ": " << c.description << " ("
       << c.instances - c.failures << "/" << c.instances << ")\n";
    for (const auto& w : c.witnesses) os << "    witness: " << w << "\n";
    if (c.failures > c.witnesses.size()) {
      os << "    ... " << c.failures - c.witnesses.size() << " more\n";
    }
  }
  for (const auto& n : notes_) os << "note: " << n << "\n";
  os << (ok() ? "result: all checks passed" : "result: " + std::to_string(failures()) + " check(s) failed")
     << "\n";
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["ok"] = ok();
  j["failures"] = failures();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks_) {
    j["checks"].push_back({{"tag", c.tag},
                           {"description", c.description},
                           {"passed", c.passed()},
                           {"instances", c.instances},
                           {"failures", c.failures},
                           {"witnesses", c.witnesses}});
  }
  j["notes"] = notes_;
  return j.dump(2);
}

}  // namespace pgact
