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

#include "pgact/commands.hpp"

#include <set>

#include "pgact/globalization.hpp"
#include "pgact/graded.hpp"
#include "pgact/quotient.hpp"
#include "pgact/skew.hpp"

namespace pgact {

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"validate", "globalize", "skew",  "multipliers",  "assoc-check",
                                                 "smash",    "tensor",    "galois-check", "quotient", "equiv-check"};
  return names;
}

namespace {

template <class T>
const T& pick(const std::vector<T>& items, const std::string& name, const char* kind) {
  if (name.empty()) {
    if (items.empty()) throw CommandError(std::string("the document has no ") + kind);
    return items.front();
  }
  for (const auto& item : items) {
    if (item.name == name) return item;
  }
  throw CommandError(std::string("no ") + kind + " named '" + name + "'");
}

// A section name not yet used in d.
std::string fresh(const Document& d, const std::string& base) {
  std::set<std::string> used;
  for (const auto& x : d.groupoids) used.insert(x.name);
  for (const auto& x : d.semicategories) used.insert(x.name);
  for (const auto& x : d.set_actions) used.insert(x.name);
  for (const auto& x : d.actions) used.insert(x.name);
  for (const auto& x : d.gradings) used.insert(x.name);
  for (const auto& x : d.globalizations) used.insert(x.name);
  std::string name = base;
  for (int i = 2; used.count(name); ++i) name = base + std::to_string(i);
  return name;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string hom_name(const Semicategory& c, Obj y, Obj x) { return c.object_name(y) + " " + c.object_name(x); }

Document with_semicategory(const Document& doc, const std::string& base, const Semicategory& c) {
  Document out = doc;
  out.semicategories.push_back({fresh(doc, base), c});
  return out;
}

CommandResult validate(const Document& doc, const CommandOptions& opts) {
  CommandResult r;
  for (const auto& g : doc.groupoids) r.report.merge(g.groupoid.validate(g.declared_identities), "groupoid " + g.name + ": ");
  for (const auto& c : doc.semicategories) r.report.merge(c.cat.validate(), "semicat " + c.name + ": ");
  for (const auto& s : doc.set_actions) r.report.merge(validate_set_action(s.action), "setaction " + s.name + ": ");
  for (const auto& a : doc.actions) {
    r.report.merge(validate_cat_action(a.action, {opts.strict_ideals}), "action " + a.name + ": ");
  }
  for (const auto& g : doc.gradings) r.report.merge(validate_grading(g.graded), "grading " + g.name + ": ");
  for (const auto& g : doc.globalizations) {
    const NamedAction* of = doc.action(g.of);
    r.report.merge(check_globalization(of->action, doc.resolve(g)), "globalization " + g.name + ": ");
  }
  r.summary.push_back("checked " + std::to_string(r.report.checks().size()) + " clauses");
  return r;
}

CommandResult globalize(const Document& doc, const CommandOptions& opts) {
  CommandResult r;
  const NamedAction& na = pick(doc.actions, opts.action, "action");
  const PartialCatAction& a = na.action;
  const FiniteGroupoid& G = a.groupoid();
  const Semicategory& C = a.semicategory();
  GlobalizabilityCheck gc = check_globalizable(a);
  r.summary.push_back("globalizable: " + yes_no(gc.globalizable));
  // No certificates when the action is invalid.
  for (Mor g = 0; g < gc.certificate.size(); ++g) {
    for (Obj x = 0; x < C.num_objects(); ++x) {
      const auto& cert = gc.certificate[g][x];
      if (cert && a.in_domain(g, x)) {
        r.summary.push_back("local identity of I^" + G.name(g) + " at " + C.object_name(x) + ": " + to_string(*cert));
      }
    }
  }
  Globalization glob = globalize_cat_action(a);
  r.report.merge(glob.report);
  if (glob.target.num_objects() == 0) return r;
  const Semicategory& T = glob.target.semicategory();
  r.summary.push_back("target objects: " + std::to_string(T.num_objects()));
  Document out = doc;
  NamedSemicategory cat{fresh(out, na.name + "_env_cat"), T};
  out.semicategories.push_back(cat);
  NamedAction target{fresh(out, na.name + "_env"), na.over, cat.name, glob.target};
  out.actions.push_back(target);
  NamedGlobalization record{fresh(out, na.name + "_glob"), na.name, target.name, glob.embedding, glob.phi};
  out.globalizations.push_back(record);
  r.emitted = std::move(out);
  return r;
}

CommandResult skew(const Document& doc, const CommandOptions& opts) {
  CommandResult r;
  const NamedAction& na = pick(doc.actions, opts.action, "action");
  const FiniteGroupoid& G = na.action.groupoid();
  SkewSemicategory s = build_skew(na.action);
  r.report.merge(check_skew_associative(s));
  for (Obj y = 0; y < s.cat.num_objects(); ++y) {
    for (Obj x = 0; x < s.cat.num_objects(); ++x) {
      std::string line = "hom " + hom_name(s.cat, y, x) + ":";
      for (const auto& sm : s.at(y, x)) {
        line += " I^" + G.name(sm.g) + "(" + s.cat.object_name(y) + "," + s.cat.object_name(sm.target) + ")[" +
                std::to_string(sm.dim) + "]";
      }
      r.summary.push_back(line);
    }
  }
  r.emitted = with_semicategory(doc, na.name + "_skew", s.cat);
  return r;
}

CommandResult multipliers(const Document& doc, const CommandOptions& opts) {
  CommandResult r;
  const NamedAction& na = pick(doc.actions, opts.action, "action");
  const FiniteGroupoid& G = na.action.groupoid();
  for (Mor g = 0; g < G.size(); ++g) {
    Algebra alg = ideal_algebra(na.action.semicategory(), na.action.ideal(g));
    MultiplierSpace m = compute_multipliers(alg);
    LRCheck lr = check_lr_associative(alg, opts.convention);
    r.report.merge(lr.report, G.name(g) + ": ");
    r.summary.push_back("a(I^" + G.name(g) + "): rank " + std::to_string(alg.rank()) + ", multipliers " +
                        std::to_string(m.dim()) + ", (L,R)-associative " + yes_no(lr.associative));
  }
  return r;
}

CommandResult assoc_check(const Document& doc, const CommandOptions& opts) {
  CommandResult r;
  const NamedAction& na = pick(doc.actions, opts.action, "action");
  AssociativityCriterion c = check_lr_criterion(na.action, opts.convention);
  r.report.merge(c.report);
  r.summary.push_back("all a(I^g) (L,R)-associative: " + yes_no(c.hypothesis));
  r.summary.push_back("skew product associative: " + yes_no(c.conclusion));
  return r;
}

const NamedGrading& grading(const Document& doc, const CommandOptions& opts) {
  return pick(doc.gradings, opts.grading, "grading");
}

CommandResult construction(const Document& doc, const CommandOptions& opts, bool smash) {
  CommandResult r;
  const NamedGrading& ng = grading(doc, opts);
  GradedConstruction c = smash ? build_smash(ng.graded) : build_tensor(ng.graded);
  r.report.merge(validate_grading(ng.graded));
  r.report.merge(c.report);
  if (smash) {
    Report ids = check_homogeneous_identities(ng.graded);
    r.report.merge(ids);
  }
  for (Obj y = 0; y < c.objects.size(); ++y) {
    for (Obj x = 0; x < c.objects.size(); ++x) {
      if (c.cat.rank(y, x) == 0) continue;
      std::string line = "hom " + hom_name(c.cat, y, x) + ":";
      for (const auto& l : c.cat.labels(y, x)) line += " " + l;
      r.summary.push_back(line);
    }
  }
  r.emitted = with_semicategory(doc, ng.name + (smash ? "_smash" : "_tensor"), c.cat);
  return r;
}

CommandResult galois(const Document& doc, const CommandOptions& opts) {
  CommandResult r;
  CoveringCheck c = check_galois_covering(grading(doc, opts).graded);
  r.report.merge(c.report);
  r.summary.push_back("Galois covering of the tensor construction: " + yes_no(c.covering));
  return r;
}

CommandResult quotient(const Document& doc, const CommandOptions& opts) {
  CommandResult r;
  const NamedAction& na = pick(doc.actions, opts.action, "action");
  QuotientSemicategory q = build_quotient(na.action);
  r.report.merge(q.report);
  if (q.cat.num_objects() == 0 && na.action.num_objects() > 0) return r;
  for (std::size_t c = 0; c < q.orbits.classes.size(); ++c) {
    std::string line = "class " + q.cat.object_name(c) + ":";
    for (Obj x : q.orbits.classes[c]) line += " " + na.action.semicategory().object_name(x);
    r.summary.push_back(line);
  }
  r.emitted = with_semicategory(doc, na.name + "_quotient", q.cat);
  return r;
}

CommandResult equiv_check(const Document& doc, const CommandOptions& opts) {
  CommandResult r;
  if (!doc.globalizations.empty() || !opts.globalization.empty()) {
    const NamedGlobalization& g = pick(doc.globalizations, opts.globalization, "globalization");
    const NamedAction* of = doc.action(g.of);
    Globalization built = globalize_cat_action(of->action);
    r.report.merge(built.report, "constructed: ");
    if (built.target.num_objects() == 0) return r;
    EquivalenceCheck e = check_equivalent(of->action, built, doc.resolve(g));
    r.report.merge(e.report);
    r.summary.push_back("equivalent to the constructed globalization: " + yes_no(e.equivalent));
    return r;
  }
  SkewEquivalenceCheck e = check_skew_equivalence(grading(doc, opts).graded);
  r.report.merge(e.report);
  r.summary.push_back("functor: " + yes_no(e.functor) + ", fully faithful: " + yes_no(e.fully_faithful) +
                      ", surjective on objects: " + yes_no(e.surjective));
  return r;
}

}  // namespace

CommandResult run_command(const std::string& command, const Document& doc, const CommandOptions& opts) {
  if (command == "validate") return validate(doc, opts);
  if (command == "globalize") return globalize(doc, opts);
  if (command == "skew") return skew(doc, opts);
  if (command == "multipliers") return multipliers(doc, opts);
  if (command == "assoc-check") return assoc_check(doc, opts);
  if (command == "smash") return construction(doc, opts, true);
  if (command == "tensor") return construction(doc, opts, false);
  if (command == "galois-check") return galois(doc, opts);
  if (command == "quotient") return quotient(doc, opts);
  if (command == "equiv-check") return equiv_check(doc, opts);
  throw CommandError("unknown command '" + command + "'");
}

}  // namespace pgact
