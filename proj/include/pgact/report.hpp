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

#ifndef PGACT_REPORT_HPP
#define PGACT_REPORT_HPP

#include <cstddef>
#include <deque>
#include <string>
#include <utility>
#include <vector>

namespace pgact {

// One checked clause: how many instances were examined and which failed.
struct Check {
  std::string tag;
  std::string description;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;

  static constexpr std::size_t kMaxWitnesses = 8;

  bool passed() const { return failures == 0; }

  // Counts one instance; the witness text is built only on failure.
  template <class F>
  bool expect(bool ok, F&& witness) {
    ++instances;
    if (!ok) {
      ++failures;
      if (witnesses.size() < kMaxWitnesses) witnesses.emplace_back(std::forward<F>(witness)());
    }
    return ok;
  }
  bool expect(bool ok, const char* witness) {
    return expect(ok, [&] { return std::string(witness); });
  }
};

// Ordered list of checked clauses plus informational notes.
class Report {
 public:
  // References stay valid while further clauses are appended.
  Check& clause(std::string tag, std::string description);
  void note(std::string text) { notes_.push_back(std::move(text)); }
  void merge(const Report& other, const std::string& prefix = "");

  bool ok() const;
  std::size_t failures() const;
  const std::deque<Check>& checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }
  // The first clause with this tag, or nullptr.
  const Check* find(const std::string& tag) const;
  // Clauses whose tag starts with prefix.
  Report filtered(const std::string& prefix) const;

  std::string to_text() const;
  std::string to_json() const;

 private:
  std::deque<Check> checks_;
  std::vector<std::string> notes_;
};

}  // namespace pgact

#endif  // PGACT_REPORT_HPP
