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

#include "pgact/document.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace pgact {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                         message),
      line_(line),
      column_(column) {}

namespace {

template <class T>
const T* find_named(const std::vector<T>& items, std::string_view name) {
  for (const auto& item : items) {
    if (item.name == name) return &item;
  }
  return nullptr;
}

}  // namespace

const NamedGroupoid* Document::groupoid(std::string_view name) const { return find_named(groupoids, name); }
const NamedSemicategory* Document::semicategory(std::string_view name) const {
  return find_named(semicategories, name);
}
const NamedSetAction* Document::set_action(std::string_view name) const { return find_named(set_actions, name); }
const NamedAction* Document::action(std::string_view name) const { return find_named(actions, name); }
const NamedGrading* Document::grading(std::string_view name) const { return find_named(gradings, name); }
const NamedGlobalization* Document::globalization(std::string_view name) const {
  return find_named(globalizations, name);
}

Globalization Document::resolve(const NamedGlobalization& g) const {
  const NamedAction* target = action(g.target);
  if (!target) throw ParseError(0, 0, "globalization '" + g.name + "' names unknown target '" + g.target + "'");
  Globalization out;
  out.target = target->action;
  out.embedding = g.embedding;
  out.phi = g.phi;
  return out;
}

bool Document::empty() const {
  return groupoids.empty() && semicategories.empty() && set_actions.empty() && actions.empty() && gradings.empty() &&
         globalizations.empty();
}

namespace {

struct Token {
  std::string text;
  std::size_t col = 0;
};

struct Line {
  std::size_t number = 0;
  std::size_t col = 1;
  std::vector<Token> key;
  std::vector<Token> value;
  std::size_t value_col = 0;
};

struct Section {
  std::string kind;
  std::string name;
  std::size_t line = 0;
  std::vector<Line> lines;
};

std::vector<Token> tokenize(std::string_view text, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.push_back({std::string(text.substr(start, i - start)), base + start});
  }
  return out;
}

[[noreturn]] void fail(const Line& l, const Token* t, const std::string& msg) {
  throw ParseError(l.number, t ? t->col : l.col, msg);
}

bool is_scalar_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  bool digits = false, slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = true;
    } else if (s[i] == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      return false;
    }
  }
  return digits;
}

class Parser {
 public:
  explicit Parser(std::string_view override_field) : override_(override_field) {}

  Document run(std::string_view text) {
    std::vector<Section> sections;
    std::size_t number = 0;
    std::size_t pos = 0;
    std::optional<std::pair<std::string, Token>> field_line;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view raw = text.substr(pos, end - pos);
      pos = end + 1;
      ++number;
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      auto first = raw.find_first_not_of(" \t");
      if (first == std::string_view::npos) {
        if (end == text.size()) break;
        continue;
      }
      if (raw[first] == '[') {
        auto close = raw.find(']');
        if (close == std::string_view::npos) throw ParseError(number, first + 1, "section header lacks ']'");
        if (raw.find_first_not_of(" \t", close + 1) != std::string_view::npos) {
          throw ParseError(number, close + 2, "text after section header");
        }
        auto parts = tokenize(raw.substr(first + 1, close - first - 1), first + 2);
        if (parts.size() != 2) throw ParseError(number, first + 1, "section header must be '[kind name]'");
        sections.push_back({parts[0].text, parts[1].text, number, {}});
        continue;
      }
      auto colon = raw.find(':');
      if (colon == std::string_view::npos) throw ParseError(number, first + 1, "expected 'key: value'");
      Line l;
      l.number = number;
      l.col = first + 1;
      l.key = tokenize(raw.substr(0, colon), 1);
      l.value = tokenize(raw.substr(colon + 1), colon + 2);
      l.value_col = colon + 2;
      if (l.key.empty()) throw ParseError(number, first + 1, "empty key");
      if (sections.empty()) {
        if (l.key[0].text != "field" || l.key.size() != 1) fail(l, &l.key[0], "only 'field:' may precede the first section");
        if (l.value.size() != 1) fail(l, nullptr, "'field:' takes one value");
        if (field_line) fail(l, &l.key[0], "field declared twice");
        field_line.emplace(l.value[0].text, l.value[0]);
        field_line->second.col = l.value[0].col;
        field_number_ = number;
        continue;
      }
      sections.back().lines.push_back(std::move(l));
      if (end == text.size()) break;
    }
    try {
      if (!override_.empty()) {
        doc_.field = Field::parse(override_);
      } else if (field_line) {
        doc_.field = Field::parse(field_line->first);
      }
    } catch (const FieldError& e) {
      throw ParseError(override_.empty() ? field_number_ : 0, override_.empty() ? field_line->second.col : 0,
                       e.what());
    }
    for (const auto& s : sections) {
      check_unique(s);
      if (s.kind == "groupoid") {
        groupoid(s);
      } else if (s.kind == "semicat") {
        semicat(s);
      } else if (s.kind == "setaction") {
        set_action(s);
      } else if (s.kind == "action") {
        action(s);
      } else if (s.kind == "grading") {
        grading(s);
      } else if (s.kind == "globalization") {
        globalization(s);
      } else {
        throw ParseError(s.line, 2, "unknown section kind '" + s.kind + "'");
      }
    }
    return std::move(doc_);
  }

 private:
  void check_unique(const Section& s) {
    if (!names_.insert(s.name).second) throw ParseError(s.line, 2, "name '" + s.name + "' used twice");
  }

  static const Line* single(const Section& s, const std::string& key) {
    const Line* found = nullptr;
    for (const auto& l : s.lines) {
      if (l.key[0].text != key) continue;
      if (found) fail(l, &l.key[0], "'" + key + ":' given twice");
      found = &l;
    }
    return found;
  }
  static const Line& required(const Section& s, const std::string& key) {
    const Line* l = single(s, key);
    if (!l) throw ParseError(s.line, 1, "section '" + s.name + "' lacks '" + key + ":'");
    return *l;
  }
  static const Token& one_value(const Line& l) {
    if (l.value.size() != 1) fail(l, nullptr, "expected exactly one value");
    return l.value[0];
  }
  static void arity(const Line& l, std::size_t n) {
    if (l.key.size() != n + 1) {
      fail(l, &l.key[0], "'" + l.key[0].text + "' takes " + std::to_string(n) + " argument(s)");
    }
  }
  static void known_keys(const Section& s, std::initializer_list<const char*> keys) {
    for (const auto& l : s.lines) {
      bool ok = std::any_of(keys.begin(), keys.end(), [&](const char* k) { return l.key[0].text == k; });
      if (!ok) fail(l, &l.key[0], "unknown key '" + l.key[0].text + "' in " + s.kind + " section");
    }
  }

  Scalar scalar(const Line& l, const Token& t) const {
    try {
      return doc_.field.parse_scalar(t.text);
    } catch (const std::exception& e) {
      fail(l, &t, "bad scalar '" + t.text + "': " + e.what());
    }
  }

  static Mor morphism(const FiniteGroupoid& G, const Line& l, const Token& t) {
    auto m = G.find(t.text);
    if (!m) fail(l, &t, "unknown morphism '" + t.text + "'");
    return *m;
  }
  static Obj object(const Semicategory& C, const Line& l, const Token& t) {
    auto o = C.find_object(t.text);
    if (!o) fail(l, &t, "unknown object '" + t.text + "'");
    return *o;
  }
  static std::vector<Obj> objects_or_all(const Semicategory& C, const Line& l, const Token& t) {
    if (t.text == "*") {
      std::vector<Obj> all(C.num_objects());
      for (Obj x = 0; x < all.size(); ++x) all[x] = x;
      return all;
    }
    return {object(C, l, t)};
  }
  static std::pair<std::string, std::string> arrow(const Line& l, const Token& t, const char* sep) {
    auto at = t.text.find(sep);
    if (at == std::string::npos || at == 0 || at + std::string_view(sep).size() >= t.text.size()) {
      fail(l, &t, std::string("expected 'a") + sep + "b'");
    }
    return {t.text.substr(0, at), t.text.substr(at + std::string_view(sep).size())};
  }

  // Coordinates, a label combination such as "2*e1 - e3", or "0".
  Vector vector(const Line& l, const std::vector<Token>& tokens, std::size_t rank,
                const std::vector<std::string>& labels, const std::string& where) const {
    if (tokens.empty()) fail(l, nullptr, "empty vector for " + where);
    bool numeric = std::all_of(tokens.begin(), tokens.end(), [](const Token& t) { return is_scalar_literal(t.text); });
    if (numeric) {
      if (tokens.size() == 1 && doc_.field.parse_scalar(tokens[0].text).is_zero()) return zero_vector(doc_.field, rank);
      if (tokens.size() != rank) {
        fail(l, &tokens[0], "vector for " + where + " has " + std::to_string(tokens.size()) + " entries, expected rank " +
                                std::to_string(rank));
      }
      Vector v(rank);
      for (std::size_t i = 0; i < rank; ++i) v[i] = scalar(l, tokens[i]);
      return v;
    }
    Vector v = zero_vector(doc_.field, rank);
    Scalar sign = doc_.field.one();
    bool expect_term = true;
    for (const auto& t : tokens) {
      if (t.text == "+" || t.text == "-") {
        if (expect_term) fail(l, &t, "operator where a term was expected");
        sign = t.text == "-" ? -doc_.field.one() : doc_.field.one();
        expect_term = true;
        continue;
      }
      if (!expect_term) fail(l, &t, "missing '+' or '-' before term");
      std::string body = t.text;
      Scalar coef = sign;
      if (body[0] == '-' || body[0] == '+') {
        if (body[0] == '-') coef = -coef;
        body = body.substr(1);
      }
      std::string label = body;
      if (auto star = body.find('*'); star != std::string::npos) {
        Token c{body.substr(0, star), t.col};
        if (!is_scalar_literal(c.text)) fail(l, &t, "bad coefficient '" + c.text + "'");
        coef *= scalar(l, c);
        label = body.substr(star + 1);
      }
      auto it = std::find(labels.begin(), labels.end(), label);
      if (it == labels.end()) fail(l, &t, "unknown basis label '" + label + "' for " + where);
      v[it - labels.begin()] += coef;
      expect_term = false;
    }
    if (expect_term) fail(l, &tokens.back(), "dangling operator");
    return v;
  }

  // Rows separated by '|'.
  std::vector<std::vector<Token>> rows(const Line& l) const {
    std::vector<std::vector<Token>> out(1);
    for (const auto& t : l.value) {
      std::size_t start = 0;
      std::size_t col = t.col;
      while (true) {
        auto bar = t.text.find('|', start);
        std::string piece = t.text.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
        if (!piece.empty()) out.back().push_back({piece, col + start});
        if (bar == std::string::npos) break;
        out.emplace_back();
        start = bar + 1;
      }
    }
    if (out.size() == 1 && out[0].empty()) fail(l, nullptr, "no rows given");
    return out;
  }

  void groupoid(const Section& s) {
    known_keys(s, {"mor", "identities", "d", "r", "inv", "comp"});
    const Line& mor = required(s, "mor");
    arity(mor, 0);
    std::vector<std::string> names;
    std::map<std::string, Mor> index;
    for (const auto& t : mor.value) {
      if (!index.emplace(t.text, names.size()).second) fail(mor, &t, "morphism '" + t.text + "' listed twice");
      names.push_back(t.text);
    }
    const std::size_t n = names.size();
    auto find = [&](const Line& l, const std::string& name, const Token& t) {
      auto it = index.find(name);
      if (it == index.end()) fail(l, &t, "unknown morphism '" + name + "'");
      return it->second;
    };
    NamedGroupoid out;
    out.name = s.name;
    std::vector<bool> declared(n, false);
    if (const Line* ids = single(s, "identities")) {
      arity(*ids, 0);
      for (const auto& t : ids->value) {
        out.declared_identities.push_back(t.text);
        if (auto it = index.find(t.text); it != index.end()) declared[it->second] = true;
      }
    }
    auto table = [&](const char* key) {
      std::vector<Mor> m(n, kNoMor);
      for (const auto& l : s.lines) {
        if (l.key[0].text != key) continue;
        arity(l, 0);
        for (const auto& t : l.value) {
          auto [a, b] = arrow(l, t, "->");
          Mor from = find(l, a, t), to = find(l, b, t);
          if (m[from] != kNoMor && m[from] != to) fail(l, &t, std::string(key) + "(" + a + ") given twice");
          m[from] = to;
        }
      }
      return m;
    };
    std::vector<Mor> d = table("d"), r = table("r"), inv = table("inv");
    for (Mor g = 0; g < n; ++g) {
      if (declared[g]) {
        if (d[g] == kNoMor) d[g] = g;
        if (r[g] == kNoMor) r[g] = g;
        if (inv[g] == kNoMor) inv[g] = g;
      }
    }
    for (Mor g = 0; g < n; ++g) {
      if (d[g] == kNoMor || r[g] == kNoMor) {
        throw ParseError(mor.number, mor.col, "morphism '" + names[g] + "' lacks d or r");
      }
    }
    for (Mor g = 0; g < n; ++g) {
      if (inv[g] == kNoMor && d[g] == g && r[g] == g) inv[g] = g;
      if (inv[g] == kNoMor) throw ParseError(mor.number, mor.col, "morphism '" + names[g] + "' lacks an inverse");
    }
    std::vector<Mor> comp(n * n, kNoMor);
    std::vector<bool> explicit_entry(n * n, false);
    for (const auto& l : s.lines) {
      if (l.key[0].text != "comp") continue;
      arity(l, 0);
      for (const auto& t : l.value) {
        auto [lhs, c] = arrow(l, t, "=");
        auto [a, b] = arrow(l, Token{lhs, t.col}, "*");
        Mor ga = find(l, a, t), gb = find(l, b, t), gc = find(l, c, t);
        comp[ga * n + gb] = gc;
        explicit_entry[ga * n + gb] = true;
      }
    }
    // Unit and inverse laws fill entries the input leaves out.
    auto fill = [&](Mor a, Mor b, Mor c) {
      if (!explicit_entry[a * n + b]) comp[a * n + b] = c;
    };
    for (Mor g = 0; g < n; ++g) {
      if (d[g] < n) fill(g, d[g], g);
      if (r[g] < n) fill(r[g], g, g);
      if (inv[g] < n) {
        fill(g, inv[g], r[g]);
        fill(inv[g], g, d[g]);
      }
    }
    out.groupoid = FiniteGroupoid(names, d, r, inv, comp);
    doc_.groupoids.push_back(std::move(out));
  }

  void semicat(const Section& s) {
    known_keys(s, {"objects", "hom", "sc"});
    const Line& objs = required(s, "objects");
    arity(objs, 0);
    std::vector<std::string> names;
    for (const auto& t : objs.value) {
      if (std::find(names.begin(), names.end(), t.text) != names.end()) fail(objs, &t, "object listed twice");
      names.push_back(t.text);
    }
    const std::size_t n = names.size();
    std::vector<std::size_t> ranks(n * n, 0);
    std::vector<std::vector<std::string>> labels(n * n);
    std::vector<bool> seen(n * n, false);
    Semicategory shape(doc_.field, names, ranks);
    for (const auto& l : s.lines) {
      if (l.key[0].text != "hom") continue;
      arity(l, 2);
      if (l.value.empty()) fail(l, nullptr, "hom needs a rank");
      const Token& rt = l.value[0];
      if (!std::all_of(rt.text.begin(), rt.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        fail(l, &rt, "rank must be a nonnegative integer");
      }
      std::size_t rank = std::stoul(rt.text);
      std::vector<std::string> ls;
      for (std::size_t i = 1; i < l.value.size(); ++i) {
        const std::string& lab = l.value[i].text;
        if (is_scalar_literal(lab) || lab == "*" || lab == "+" || lab == "-" || lab[0] == '-' || lab[0] == '+' ||
            lab.find_first_of("*|,") != std::string::npos) {
          fail(l, &l.value[i], "invalid basis label '" + lab + "'");
        }
        if (std::find(ls.begin(), ls.end(), lab) != ls.end()) fail(l, &l.value[i], "label repeated");
        ls.push_back(lab);
      }
      if (!ls.empty() && ls.size() != rank) fail(l, &l.value[0], "label count differs from rank");
      if (ls.empty()) {
        for (std::size_t i = 0; i < rank; ++i) ls.push_back("e" + std::to_string(i + 1));
      }
      for (Obj y : objects_or_all(shape, l, l.key[1])) {
        for (Obj x : objects_or_all(shape, l, l.key[2])) {
          bool wild = l.key[1].text == "*" || l.key[2].text == "*";
          if (seen[y * n + x] && !wild) fail(l, &l.key[1], "hom " + names[y] + " " + names[x] + " given twice");
          seen[y * n + x] = true;
          ranks[y * n + x] = rank;
          labels[y * n + x] = ls;
        }
      }
    }
    Semicategory c(doc_.field, names, ranks);
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) c.set_labels(y, x, labels[y * n + x]);
    }
    for (const auto& l : s.lines) {
      if (l.key[0].text != "sc") continue;
      arity(l, 5);
      bool wild = l.key[1].text == "*" || l.key[2].text == "*" || l.key[3].text == "*";
      for (Obj z : objects_or_all(c, l, l.key[1])) {
        for (Obj y : objects_or_all(c, l, l.key[2])) {
          for (Obj x : objects_or_all(c, l, l.key[3])) {
            auto i = label_index(c.labels(z, y), l.key[4].text);
            auto j = label_index(c.labels(y, x), l.key[5].text);
            if (!i || !j) {
              if (wild) continue;
              fail(l, !i ? &l.key[4] : &l.key[5], "unknown basis label at hom " + names[!i ? z : y] + " " + names[!i ? y : x]);
            }
            std::string where = "hom " + names[z] + " " + names[x];
            c.set_basis_product(z, y, x, *i, *j, vector(l, l.value, c.rank(z, x), c.labels(z, x), where));
          }
        }
      }
    }
    doc_.semicategories.push_back({s.name, std::move(c)});
  }

  static std::optional<std::size_t> label_index(const std::vector<std::string>& labels, const std::string& text) {
    auto it = std::find(labels.begin(), labels.end(), text);
    if (it == labels.end()) return std::nullopt;
    return it - labels.begin();
  }

  const NamedGroupoid& groupoid_ref(const Section& s) {
    const Line& l = required(s, "over");
    const Token& t = one_value(l);
    const NamedGroupoid* g = doc_.groupoid(t.text);
    if (!g) fail(l, &t, "unknown groupoid '" + t.text + "'");
    return *g;
  }
  const NamedSemicategory& semicat_ref(const Section& s, const char* key) {
    const Line& l = required(s, key);
    const Token& t = one_value(l);
    const NamedSemicategory* c = doc_.semicategory(t.text);
    if (!c) fail(l, &t, "unknown semicategory '" + t.text + "'");
    return *c;
  }

  // domain/map lines into a set action on the given points.
  void object_lines(const Section& s, PartialSetAction& a) {
    const FiniteGroupoid& G = a.groupoid();
    auto point = [&](const Line& l, const std::string& name, const Token& t) {
      auto p = a.find_point(name);
      if (!p) fail(l, &t, "unknown point '" + name + "'");
      return *p;
    };
    std::vector<bool> has_domain(G.size(), false);
    for (const auto& l : s.lines) {
      if (l.key[0].text != "domain") continue;
      arity(l, 1);
      Mor g = morphism(G, l, l.key[1]);
      if (has_domain[g]) fail(l, &l.key[1], "domain given twice");
      has_domain[g] = true;
      std::vector<Obj> pts;
      if (!(l.value.size() == 1 && l.value[0].text == "-")) {
        for (const auto& t : l.value) pts.push_back(point(l, t.text, t));
      }
      a.set_domain(g, pts);
    }
    for (const auto& l : s.lines) {
      if (l.key[0].text != "map") continue;
      arity(l, 1);
      Mor g = morphism(G, l, l.key[1]);
      for (const auto& t : l.value) {
        auto [from, to] = arrow(l, t, "->");
        a.set_map(g, point(l, from, t), point(l, to, t));
      }
    }
    a.default_identity_maps();
  }

  void set_action(const Section& s) {
    known_keys(s, {"over", "points", "domain", "map"});
    const NamedGroupoid& g = groupoid_ref(s);
    const Line& pl = required(s, "points");
    std::vector<std::string> points;
    for (const auto& t : pl.value) points.push_back(t.text);
    PartialSetAction a(g.groupoid, points);
    object_lines(s, a);
    doc_.set_actions.push_back({s.name, g.name, std::move(a)});
  }

  void action(const Section& s) {
    known_keys(s, {"over", "on", "domain", "map", "ideal", "alpha"});
    const NamedGroupoid& ng = groupoid_ref(s);
    const NamedSemicategory& nc = semicat_ref(s, "on");
    const FiniteGroupoid& G = ng.groupoid;
    const Semicategory& C = nc.cat;
    PartialSetAction objs(G, C.object_names());
    object_lines(s, objs);
    PartialCatAction a(objs, C);
    const Field& F = doc_.field;
    auto pairs = [&](const Line& l, const ObjectSet& dom) {
      std::vector<std::pair<Obj, Obj>> out;
      bool wild = l.key[2].text == "*" || l.key[3].text == "*";
      for (Obj y : objects_or_all(C, l, l.key[2])) {
        for (Obj x : objects_or_all(C, l, l.key[3])) {
          if (wild && !(dom[y] && dom[x])) continue;
          out.emplace_back(y, x);
        }
      }
      return out;
    };
    for (const auto& l : s.lines) {
      if (l.key[0].text != "ideal") continue;
      arity(l, 3);
      Mor g = morphism(G, l, l.key[1]);
      for (auto [y, x] : pairs(l, a.domain(g))) {
        std::size_t rank = C.rank(y, x);
        std::string where = "ideal at hom " + C.object_name(y) + " " + C.object_name(x);
        if (l.value.size() == 1 && l.value[0].text == "full") {
          a.set_ideal(g, y, x, Submodule::full(F, rank));
          continue;
        }
        std::vector<Vector> gens;
        for (const auto& row : rows(l)) gens.push_back(vector(l, row, rank, C.labels(y, x), where));
        a.set_ideal(g, y, x, Submodule::span(F, rank, gens));
      }
    }
    for (const auto& l : s.lines) {
      if (l.key[0].text != "alpha") continue;
      arity(l, 3);
      Mor g = morphism(G, l, l.key[1]);
      for (auto [y, x] : pairs(l, a.domain(G.inv(g)))) {
        Obj gy = a.move(g, y), gx = a.move(g, x);
        if (gy == kNoObj || gx == kNoObj) {
          fail(l, &l.key[2], "alpha " + G.name(g) + " is undefined at " + C.object_name(y) + " " + C.object_name(x));
        }
        std::size_t cols = C.rank(y, x), nrows = C.rank(gy, gx);
        Matrix m(F, nrows, cols);
        if (l.value.size() == 1 && l.value[0].text == "id") {
          if (nrows != cols) fail(l, &l.value[0], "'id' needs equal ranks");
          m = Matrix::identity(F, cols);
        } else if (!(l.value.size() == 1 && l.value[0].text == "0")) {
          auto rs = rows(l);
          if (rs.size() != nrows) {
            fail(l, &l.value[0], "alpha " + G.name(g) + " at " + C.object_name(y) + " " + C.object_name(x) + " needs " +
                                     std::to_string(nrows) + " rows");
          }
          for (std::size_t i = 0; i < nrows; ++i) {
            if (rs[i].size() != cols) {
              fail(l, rs[i].empty() ? nullptr : &rs[i][0], "row has " + std::to_string(rs[i].size()) +
                                                                  " entries, expected " + std::to_string(cols));
            }
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = scalar(l, rs[i][j]);
          }
        }
        a.set_map(g, y, x, std::move(m));
      }
    }
    doc_.actions.push_back({s.name, ng.name, nc.name, std::move(a)});
  }

  void grading(const Section& s) {
    known_keys(s, {"on", "over", "deg"});
    const NamedGroupoid& ng = groupoid_ref(s);
    const NamedSemicategory& nc = semicat_ref(s, "on");
    GradedSemicategory b(nc.cat, ng.groupoid);
    const Semicategory& C = nc.cat;
    for (const auto& l : s.lines) {
      if (l.key[0].text != "deg") continue;
      arity(l, 3);
      Mor g = morphism(ng.groupoid, l, one_value(l));
      bool wild = l.key[1].text == "*" || l.key[2].text == "*";
      for (Obj y : objects_or_all(C, l, l.key[1])) {
        for (Obj x : objects_or_all(C, l, l.key[2])) {
          auto i = label_index(C.labels(y, x), l.key[3].text);
          if (!i) {
            if (wild) continue;
            fail(l, &l.key[3], "unknown basis label at hom " + C.object_name(y) + " " + C.object_name(x));
          }
          b.set_degree(y, x, *i, g);
        }
      }
    }
    doc_.gradings.push_back({s.name, nc.name, ng.name, std::move(b)});
  }

  void globalization(const Section& s) {
    known_keys(s, {"of", "target", "object", "phi"});
    auto action_ref = [&](const char* key) -> const NamedAction& {
      const Line& l = required(s, key);
      const Token& t = one_value(l);
      const NamedAction* a = doc_.action(t.text);
      if (!a) fail(l, &t, "unknown action '" + t.text + "'");
      return *a;
    };
    const NamedAction& of = action_ref("of");
    const NamedAction& target = action_ref("target");
    const Semicategory& C = of.action.semicategory();
    const Semicategory& T = target.action.semicategory();
    const FiniteGroupoid& G = of.action.groupoid();
    if (!(G == target.action.groupoid())) {
      throw ParseError(s.line, 1, "source and target act by different groupoids");
    }
    NamedGlobalization out;
    out.name = s.name;
    out.of = of.name;
    out.target = target.name;
    const std::size_t n = C.num_objects();
    out.embedding.assign(n, kNoObj);
    for (const auto& l : s.lines) {
      if (l.key[0].text != "object") continue;
      arity(l, 1);
      out.embedding[object(C, l, l.key[1])] = object(T, l, one_value(l));
    }
    for (Obj x = 0; x < n; ++x) {
      if (out.embedding[x] == kNoObj) throw ParseError(s.line, 1, "no target object for '" + C.object_name(x) + "'");
    }
    out.phi.assign(G.size(), std::vector<std::optional<Matrix>>(n * n));
    for (const auto& l : s.lines) {
      if (l.key[0].text != "phi") continue;
      arity(l, 3);
      Mor e = morphism(G, l, l.key[1]);
      if (!G.is_identity(e)) fail(l, &l.key[1], "phi is indexed by identities");
      bool wild = l.key[2].text == "*" || l.key[3].text == "*";
      for (Obj y : objects_or_all(C, l, l.key[2])) {
        for (Obj x : objects_or_all(C, l, l.key[3])) {
          if (wild && !(of.action.in_domain(e, y) && of.action.in_domain(e, x))) continue;
          std::size_t nrows = T.rank(out.embedding[y], out.embedding[x]), cols = C.rank(y, x);
          Matrix m(doc_.field, nrows, cols);
          if (!(l.value.size() == 1 && l.value[0].text == "0")) {
            auto rs = rows(l);
            if (rs.size() != nrows) fail(l, &l.value[0], "phi needs " + std::to_string(nrows) + " rows");
            for (std::size_t i = 0; i < nrows; ++i) {
              if (rs[i].size() != cols) fail(l, rs[i].empty() ? nullptr : &rs[i][0], "row length differs from rank");
              for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = scalar(l, rs[i][j]);
            }
          }
          out.phi[e][y * n + x] = std::move(m);
        }
      }
    }
    doc_.globalizations.push_back(std::move(out));
  }

  std::string_view override_;
  std::size_t field_number_ = 0;
  Document doc_;
  std::set<std::string> names_;
};

std::string coords(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i].to_string();
  return out;
}

std::string matrix_rows(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) out += (i ? " | " : "") + coords(m.row(i));
  return out;
}

std::string joined(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? " " : "") + items[i];
  return out;
}

void emit_objects(std::ostringstream& os, const PartialSetAction& a) {
  const FiniteGroupoid& G = a.groupoid();
  for (Mor g = 0; g < G.size(); ++g) {
    std::vector<std::string> pts;
    for (Obj p : a.domain(g)) pts.push_back(a.point_name(p));
    os << "domain " << G.name(g) << ": " << (pts.empty() ? "-" : joined(pts)) << "\n";
  }
  for (Mor g = 0; g < G.size(); ++g) {
    std::vector<std::string> maps;
    for (Obj p = 0; p < a.num_points(); ++p) {
      if (a.defined(g, p)) maps.push_back(a.point_name(p) + "->" + a.point_name(a.apply(g, p)));
    }
    if (!maps.empty()) os << "map " << G.name(g) << ": " << joined(maps) << "\n";
  }
}

}  // namespace

Document parse_document(std::string_view text, std::string_view field_override) {
  return Parser(field_override).run(text);
}

std::string emit_document(const Document& d) {
  std::ostringstream os;
  os << "field: " << d.field.name() << "\n";
  for (const auto& ng : d.groupoids) {
    const FiniteGroupoid& G = ng.groupoid;
    os << "\n[groupoid " << ng.name << "]\n";
    os << "mor: " << joined(G.names()) << "\n";
    if (!ng.declared_identities.empty()) os << "identities: " << joined(ng.declared_identities) << "\n";
    std::vector<std::string> ds, rs, invs, comps;
    for (Mor g = 0; g < G.size(); ++g) {
      ds.push_back(G.name(g) + "->" + G.name(G.d(g)));
      rs.push_back(G.name(g) + "->" + G.name(G.r(g)));
      invs.push_back(G.name(g) + "->" + G.name(G.inv(g)));
      for (Mor h = 0; h < G.size(); ++h) {
        if (G.composable(g, h)) comps.push_back(G.name(g) + "*" + G.name(h) + "=" + G.name(G.compose(g, h)));
      }
    }
    os << "d: " << joined(ds) << "\nr: " << joined(rs) << "\ninv: " << joined(invs) << "\n";
    if (!comps.empty()) os << "comp: " << joined(comps) << "\n";
  }
  for (const auto& nc : d.semicategories) {
    const Semicategory& C = nc.cat;
    const std::size_t n = C.num_objects();
    os << "\n[semicat " << nc.name << "]\n";
    os << "objects: " << joined(C.object_names()) << "\n";
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        if (C.rank(y, x) == 0) continue;
        os << "hom " << C.object_name(y) << " " << C.object_name(x) << ": " << C.rank(y, x) << " "
           << joined(C.labels(y, x)) << "\n";
      }
    }
    for (Obj z = 0; z < n; ++z) {
      for (Obj y = 0; y < n; ++y) {
        for (Obj x = 0; x < n; ++x) {
          for (std::size_t i = 0; i < C.rank(z, y); ++i) {
            for (std::size_t j = 0; j < C.rank(y, x); ++j) {
              const Vector& v = C.basis_product(z, y, x, i, j);
              if (is_zero(v)) continue;
              os << "sc " << C.object_name(z) << " " << C.object_name(y) << " " << C.object_name(x) << " "
                 << C.labels(z, y)[i] << " " << C.labels(y, x)[j] << ": " << coords(v) << "\n";
            }
          }
        }
      }
    }
  }
  for (const auto& ns : d.set_actions) {
    os << "\n[setaction " << ns.name << "]\nover: " << ns.over << "\n";
    os << "points: " << joined(ns.action.point_names()) << "\n";
    emit_objects(os, ns.action);
  }
  for (const auto& na : d.actions) {
    const PartialCatAction& a = na.action;
    const FiniteGroupoid& G = a.groupoid();
    const Semicategory& C = a.semicategory();
    const std::size_t n = C.num_objects();
    os << "\n[action " << na.name << "]\nover: " << na.over << "\non: " << na.on << "\n";
    emit_objects(os, a.object_action());
    for (Mor g = 0; g < G.size(); ++g) {
      for (Obj y = 0; y < n; ++y) {
        for (Obj x = 0; x < n; ++x) {
          const Submodule& s = a.ideal(g).at(y, x);
          if (s.is_zero()) continue;
          os << "ideal " << G.name(g) << " " << C.object_name(y) << " " << C.object_name(x) << ": ";
          if (s.is_full()) {
            os << "full\n";
            continue;
          }
          std::vector<std::string> rows;
          for (const auto& v : s.basis()) rows.push_back(coords(v));
          for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? " | " : "") << rows[i];
          os << "\n";
        }
      }
    }
    for (Mor g = 0; g < G.size(); ++g) {
      for (Obj y = 0; y < n; ++y) {
        for (Obj x = 0; x < n; ++x) {
          const Matrix* m = a.map(g, y, x);
          if (!m || m->rows() == 0 || m->cols() == 0) continue;
          os << "alpha " << G.name(g) << " " << C.object_name(y) << " " << C.object_name(x) << ": " << matrix_rows(*m)
             << "\n";
        }
      }
    }
  }
  for (const auto& ng : d.gradings) {
    const Semicategory& C = ng.graded.base();
    const FiniteGroupoid& G = ng.graded.groupoid();
    os << "\n[grading " << ng.name << "]\non: " << ng.on << "\nover: " << ng.over << "\n";
    for (Obj y = 0; y < C.num_objects(); ++y) {
      for (Obj x = 0; x < C.num_objects(); ++x) {
        for (std::size_t i = 0; i < C.rank(y, x); ++i) {
          Mor g = ng.graded.degree(y, x, i);
          if (g == kNoMor) continue;
          os << "deg " << C.object_name(y) << " " << C.object_name(x) << " " << C.labels(y, x)[i] << ": " << G.name(g)
             << "\n";
        }
      }
    }
  }
  for (const auto& gl : d.globalizations) {
    const NamedAction* of = d.action(gl.of);
    const NamedAction* target = d.action(gl.target);
    if (!of || !target) throw ParseError(0, 0, "globalization '" + gl.name + "' refers to a missing action");
    const Semicategory& C = of->action.semicategory();
    const Semicategory& T = target->action.semicategory();
    const FiniteGroupoid& G = of->action.groupoid();
    const std::size_t n = C.num_objects();
    os << "\n[globalization " << gl.name << "]\nof: " << gl.of << "\ntarget: " << gl.target << "\n";
    for (Obj x = 0; x < n; ++x) os << "object " << C.object_name(x) << ": " << T.object_name(gl.embedding[x]) << "\n";
    for (Mor e = 0; e < gl.phi.size(); ++e) {
      for (Obj y = 0; y < n; ++y) {
        for (Obj x = 0; x < n; ++x) {
          const auto& m = gl.phi[e][y * n + x];
          if (!m) continue;
          os << "phi " << G.name(e) << " " << C.object_name(y) << " " << C.object_name(x) << ": "
             << (m->rows() == 0 || m->cols() == 0 ? "0" : matrix_rows(*m)) << "\n";
        }
      }
    }
  }
  return os.str();
}

}  // namespace pgact
