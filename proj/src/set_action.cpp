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

#include "pgact/set_action.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pgact {

PartialSetAction::PartialSetAction(FiniteGroupoid g, std::vector<std::string> points)
    : groupoid_(std::move(g)), points_(std::move(points)) {
  domains_.assign(groupoid_.size(), ObjectSet(points_.size(), false));
  maps_.assign(groupoid_.size(), std::vector<Obj>(points_.size(), kNoObj));
}

std::optional<Obj> PartialSetAction::find_point(const std::string& name) const {
  for (Obj p = 0; p < points_.size(); ++p) {
    if (points_[p] == name) return p;
  }
  return std::nullopt;
}

std::vector<Obj> PartialSetAction::domain(Mor g) const {
  std::vector<Obj> out;
  for (Obj p = 0; p < points_.size(); ++p) {
    if (domains_.at(g)[p]) out.push_back(p);
  }
  return out;
}

void PartialSetAction::set_domain(Mor g, const std::vector<Obj>& points) {
  ObjectSet& m = domains_.at(g);
  std::fill(m.begin(), m.end(), false);
  for (Obj p : points) m.at(p) = true;
}

void PartialSetAction::set_map(Mor g, Obj from, Obj to) {
  if (to >= points_.size()) throw std::out_of_range("map target out of range");
  maps_.at(g).at(from) = to;
}

void PartialSetAction::default_identity_maps() {
  for (Mor e : groupoid_.identities()) {
    bool any = std::any_of(maps_[e].begin(), maps_[e].end(), [](Obj o) { return o != kNoObj; });
    if (any) continue;
    for (Obj p = 0; p < points_.size(); ++p) {
      if (domains_[e][p]) maps_[e][p] = p;
    }
  }
}

namespace {

std::string set_name(const PartialSetAction& a, const ObjectSet& s) {
  std::string out = "{";
  bool first = true;
  for (Obj p = 0; p < s.size(); ++p) {
    if (!s[p]) continue;
    out += (first ? "" : ",") + a.point_name(p);
    first = false;
  }
  return out + "}";
}

}  // namespace

Report validate_set_action(const PartialSetAction& a) {
  Report rep;
  const FiniteGroupoid& G = a.groupoid();
  const std::size_t n = a.num_points();
  auto gn = [&](Mor g) { return G.name(g); };
  auto pn = [&](Obj p) { return a.point_name(p); };

  Check& cover = rep.clause("set.cover", "every point lies in the domain of some identity");
  for (Obj p = 0; p < n; ++p) {
    bool in = std::any_of(G.identities().begin(), G.identities().end(), [&](Mor e) { return a.in_domain(e, p); });
    cover.expect(in, [&] { return pn(p) + " lies in no identity domain"; });
  }
  Check& nest = rep.clause("set.domain-nesting", "D_g is contained in D_r(g)");
  for (Mor g = 0; g < G.size(); ++g) {
    for (Obj p = 0; p < n; ++p) {
      if (a.in_domain(g, p)) {
        nest.expect(a.in_domain(G.r(g), p), [&] { return pn(p) + " in D_" + gn(g) + " but not in D_" + gn(G.r(g)); });
      }
    }
  }
  Check& bij = rep.clause("set.bijection", "alpha_g is a bijection from D_{g^-1} onto D_g");
  for (Mor g = 0; g < G.size(); ++g) {
    Mor gi = G.inv(g);
    ObjectSet hit(n, false);
    for (Obj p = 0; p < n; ++p) {
      Obj q = a.apply(g, p);
      bool want = a.in_domain(gi, p);
      bij.expect(want == (q != kNoObj), [&] {
        return "alpha_" + gn(g) + " is " + (want ? "undefined" : "defined") + " at " + pn(p) + " although D_" + gn(gi) +
               (want ? " contains it" : " does not");
      });
      if (q == kNoObj) continue;
      bij.expect(a.in_domain(g, q), [&] { return "alpha_" + gn(g) + "(" + pn(p) + ") = " + pn(q) + " lies outside D_" + gn(g); });
      bij.expect(!hit[q], [&] { return "alpha_" + gn(g) + " is not injective at " + pn(q); });
      hit[q] = true;
    }
    for (Obj q = 0; q < n; ++q) {
      if (a.in_domain(g, q)) bij.expect(hit[q], [&] { return pn(q) + " in D_" + gn(g) + " is not hit by alpha_" + gn(g); });
    }
  }
  Check& idc = rep.clause("set.identity", "alpha_e is the identity of D_e");
  for (Mor e : G.identities()) {
    for (Obj p = 0; p < n; ++p) {
      if (a.in_domain(e, p)) idc.expect(a.apply(e, p) == p, [&] { return "alpha_" + gn(e) + " moves " + pn(p); });
    }
  }
  Check& inter = rep.clause("set.intersection", "alpha_g(D_{g^-1} cap D_h) = D_g cap D_gh");
  Check& comp = rep.clause("set.composition", "alpha_g(alpha_h(x)) = alpha_gh(x) whenever the left side is defined");
  for (auto [g, h] : G.composable_pairs()) {
    Mor gh = G.compose(g, h), gi = G.inv(g);
    ObjectSet lhs(n, false), rhs(n, false);
    for (Obj p = 0; p < n; ++p) {
      if (a.in_domain(gi, p) && a.in_domain(h, p)) {
        Obj q = a.apply(g, p);
        if (q != kNoObj) lhs[q] = true;
      }
      rhs[p] = a.in_domain(g, p) && a.in_domain(gh, p);
    }
    inter.expect(lhs == rhs, [&] {
      return "alpha_" + gn(g) + "(D_" + gn(gi) + " cap D_" + gn(h) + ") = " + set_name(a, lhs) + " but D_" + gn(g) +
             " cap D_" + gn(gh) + " = " + set_name(a, rhs);
    });
    for (Obj p = 0; p < n; ++p) {
      Obj q = a.apply(h, p);
      if (q == kNoObj || a.apply(g, q) == kNoObj) continue;
      Obj lhs_v = a.apply(g, q), rhs_v = a.apply(gh, p);
      comp.expect(lhs_v == rhs_v, [&] {
        return "alpha_" + gn(g) + "(alpha_" + gn(h) + "(" + pn(p) + ")) = " + pn(lhs_v) + " but alpha_" + gn(gh) + "(" +
               pn(p) + ") = " + (rhs_v == kNoObj ? std::string("undefined") : pn(rhs_v));
      });
    }
  }
  return rep;
}

Report validate_pointwise(const PartialSetAction& a) {
  Report rep;
  const FiniteGroupoid& G = a.groupoid();
  const std::size_t n = a.num_points();
  auto gn = [&](Mor g) { return G.name(g); };
  auto pn = [&](Obj p) { return a.point_name(p); };

  Check& dom = rep.clause("set.pointwise.domains", "D_g is the set of points x with g^-1.x defined");
  for (Mor g = 0; g < G.size(); ++g) {
    for (Obj p = 0; p < n; ++p) {
      dom.expect(a.in_domain(g, p) == a.defined(G.inv(g), p), [&] {
        return "D_" + gn(g) + (a.in_domain(g, p) ? " contains " : " omits ") + pn(p) + " while " + gn(G.inv(g)) + "." +
               pn(p) + (a.defined(G.inv(g), p) ? " is defined" : " is undefined");
      });
    }
  }
  Check& pa1 = rep.clause("set.pointwise.inverse", "g.x defined implies g^-1.(g.x) = x");
  for (Mor g = 0; g < G.size(); ++g) {
    for (Obj p = 0; p < n; ++p) {
      Obj q = a.apply(g, p);
      if (q == kNoObj) continue;
      pa1.expect(a.apply(G.inv(g), q) == p, [&] { return gn(G.inv(g)) + ".(" + gn(g) + "." + pn(p) + ") is not " + pn(p); });
    }
  }
  Check& pa2 = rep.clause("set.pointwise.composition", "g.(h.x) defined implies (gh).x defined and equal");
  for (auto [g, h] : G.composable_pairs()) {
    Mor gh = G.compose(g, h);
    for (Obj p = 0; p < n; ++p) {
      Obj q = a.apply(h, p);
      if (q == kNoObj) continue;
      Obj r = a.apply(g, q);
      if (r == kNoObj) continue;
      pa2.expect(a.apply(gh, p) == r, [&] {
        return gn(g) + ".(" + gn(h) + "." + pn(p) + ") = " + pn(r) + " but (" + gn(gh) + ")." + pn(p) + " is " +
               (a.defined(gh, p) ? pn(a.apply(gh, p)) : std::string("undefined"));
      });
    }
  }
  Check& pa3 = rep.clause("set.pointwise.identities", "some identity acts on each x, and identities fix what they act on");
  for (Obj p = 0; p < n; ++p) {
    bool some = false;
    for (Mor e : G.identities()) {
      Obj q = a.apply(e, p);
      if (q == kNoObj) continue;
      some = true;
      pa3.expect(q == p, [&] { return gn(e) + "." + pn(p) + " = " + pn(q); });
    }
    pa3.expect(some, [&] { return "no identity acts on " + pn(p); });
  }
  return rep;
}

bool is_global(const PartialSetAction& a) {
  const FiniteGroupoid& G = a.groupoid();
  for (Mor g = 0; g < G.size(); ++g) {
    if (a.domain_mask(g) != a.domain_mask(G.r(g))) return false;
  }
  return true;
}

std::vector<Obj> orbit(const PartialSetAction& a, Obj x) {
  std::set<Obj> out;
  for (Mor g = 0; g < a.groupoid().size(); ++g) {
    Obj y = a.apply(g, x);
    if (y != kNoObj) out.insert(y);
  }
  return {out.begin(), out.end()};
}

PartialSetAction translation_action(const FiniteGroupoid& G) {
  PartialSetAction a(G, G.names());
  for (Mor g = 0; g < G.size(); ++g) {
    a.set_domain(g, G.with_range(G.r(g)));
    for (Mor h : G.with_range(G.d(g))) a.set_map(g, h, G.compose(g, h));
  }
  return a;
}

PartialSetAction restrict_action(const PartialSetAction& global, const std::vector<Obj>& subset) {
  const FiniteGroupoid& G = global.groupoid();
  std::vector<std::string> names;
  std::vector<Obj> local(global.num_points(), kNoObj);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    names.push_back(global.point_name(subset[i]));
    local[subset[i]] = i;
  }
  PartialSetAction a(G, names);
  for (Mor g = 0; g < G.size(); ++g) {
    std::vector<Obj> dom;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      Obj q = global.apply(g, subset[i]);
      if (q == kNoObj || local[q] == kNoObj) continue;
      a.set_map(g, i, local[q]);
      dom.push_back(local[q]);
    }
    a.set_domain(g, dom);
  }
  return a;
}

Report check_set_globalization(const PartialSetAction& a, const PartialSetAction& global,
                               const std::vector<Obj>& embedding) {
  Report rep;
  rep.merge(validate_set_action(global), "target.");
  const FiniteGroupoid& G = a.groupoid();
  Check& glob = rep.clause("globalization.set.global", "the target action is global");
  glob.expect(is_global(global), "some D_g differs from D_r(g) in the target");
  Check& inj = rep.clause("globalization.set.embedding", "the embedding is injective");
  std::set<Obj> used(embedding.begin(), embedding.end());
  inj.expect(used.size() == embedding.size() && embedding.size() == a.num_points(), "two points share an image");
  Check& res = rep.clause("globalization.set.restriction", "restricting the target along the embedding gives the input");
  if (inj.passed() && glob.passed()) {
    PartialSetAction back = restrict_action(global, embedding);
    for (Mor g = 0; g < G.size(); ++g) {
      for (Obj p = 0; p < a.num_points(); ++p) {
        res.expect(back.in_domain(g, p) == a.in_domain(g, p) && back.apply(g, p) == a.apply(g, p), [&] {
          return "at " + G.name(g) + " and " + a.point_name(p) + " the restriction differs";
        });
      }
    }
  } else {
    res.expect(false, "skipped: target not global or embedding not injective");
  }
  Check& min = rep.clause("globalization.set.minimal", "every target point is beta_g of an embedded point");
  ObjectSet reached(global.num_points(), false);
  for (Obj p : embedding) {
    for (Mor g = 0; g < G.size(); ++g) {
      Obj q = global.apply(g, p);
      if (q != kNoObj) reached[q] = true;
    }
  }
  for (Obj q = 0; q < global.num_points(); ++q) {
    min.expect(reached[q], [&] { return global.point_name(q) + " is not reached"; });
  }
  return rep;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

SetGlobalization globalize_set_action(const PartialSetAction& a) {
  const FiniteGroupoid& G = a.groupoid();
  const std::size_t n = a.num_points();
  SetGlobalization out;
  Report pre = validate_set_action(a);
  if (!pre.ok()) {
    out.report.merge(pre, "input.");
    return out;
  }
  // Pairs (g, x) with x in D_d(g), numbered g * n + x.
  auto pid = [&](Mor g, Obj x) { return g * n + x; };
  std::vector<bool> valid(G.size() * n, false);
  for (Mor g = 0; g < G.size(); ++g) {
    for (Obj x = 0; x < n; ++x) valid[pid(g, x)] = a.in_domain(G.d(g), x);
  }
  UnionFind uf(G.size() * n);
  for (Mor g = 0; g < G.size(); ++g) {
    for (Obj x = 0; x < n; ++x) {
      if (!valid[pid(g, x)]) continue;
      for (Mor h : G.with_range(G.r(g))) {
        Mor k = G.compose(G.inv(h), g);
        Obj y = a.apply(k, x);
        if (y != kNoObj && valid[pid(h, y)]) uf.unite(pid(g, x), pid(h, y));
      }
    }
  }
  for (Obj x = 0; x < n; ++x) {
    Mor first = kNoMor;
    for (Mor e : G.identities()) {
      if (!a.in_domain(e, x)) continue;
      if (first == kNoMor) {
        first = e;
      } else {
        uf.unite(pid(first, x), pid(e, x));
      }
    }
  }
  // Classes, numbered by smallest member.
  std::map<std::size_t, Obj> class_id;
  std::vector<std::size_t> rep_of;
  for (std::size_t p = 0; p < valid.size(); ++p) {
    if (!valid[p]) continue;
    std::size_t root = uf.find(p);
    if (class_id.emplace(root, rep_of.size()).second) rep_of.push_back(p);
  }
  const std::size_t m = rep_of.size();
  std::vector<Obj> embedding(n, kNoObj);
  for (Obj x = 0; x < n; ++x) {
    for (Mor e : G.identities()) {
      if (a.in_domain(e, x)) {
        embedding[x] = class_id.at(uf.find(pid(e, x)));
        break;
      }
    }
  }
  std::vector<std::string> names(m);
  std::vector<bool> named(m, false);
  for (Obj x = 0; x < n; ++x) {
    if (embedding[x] != kNoObj && !named[embedding[x]]) {
      names[embedding[x]] = a.point_name(x);
      named[embedding[x]] = true;
    }
  }
  for (Obj c = 0; c < m; ++c) {
    if (named[c]) continue;
    Mor g = rep_of[c] / n;
    Obj x = rep_of[c] % n;
    names[c] = G.name(g) + "." + a.point_name(x);
  }
  // Disambiguate clashes with existing point names.
  std::set<std::string> seen;
  for (auto& s : names) {
    while (!seen.insert(s).second) s += "'";
  }
  PartialSetAction beta(G, names);
  Check& wd = out.report.clause("globalization.set.well-defined", "beta_l([(g,x)]) = [(lg,x)] does not depend on the representative");
  for (Mor l = 0; l < G.size(); ++l) {
    std::vector<Obj> target(m, kNoObj);
    ObjectSet dom(m, false);
    for (Mor g = 0; g < G.size(); ++g) {
      if (G.r(g) != G.d(l)) continue;
      Mor lg = G.compose(l, g);
      for (Obj x = 0; x < n; ++x) {
        if (!valid[pid(g, x)]) continue;
        Obj src = class_id.at(uf.find(pid(g, x)));
        Obj dst = class_id.at(uf.find(pid(lg, x)));
        if (target[src] == kNoObj) {
          target[src] = dst;
        } else {
          wd.expect(target[src] == dst, [&] { return "beta_" + G.name(l) + " sends " + names[src] + " to two classes"; });
        }
      }
    }
    for (Obj c = 0; c < m; ++c) {
      if (target[c] != kNoObj) {
        beta.set_map(l, c, target[c]);
        dom[target[c]] = true;
      }
    }
    std::vector<Obj> dl;
    for (Obj c = 0; c < m; ++c) {
      if (dom[c]) dl.push_back(c);
    }
    beta.set_domain(l, dl);
  }
  out.report.merge(check_set_globalization(a, beta, embedding));
  out.global = std::move(beta);
  out.embedding = std::move(embedding);
  return out;
}

}  // namespace pgact
