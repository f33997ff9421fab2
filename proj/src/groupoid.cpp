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

#include "pgact/groupoid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pgact {

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> names, std::vector<Mor> d, std::vector<Mor> r,
                               std::vector<Mor> inv, std::vector<Mor> comp)
    : names_(std::move(names)), d_(std::move(d)), r_(std::move(r)), inv_(std::move(inv)), comp_(std::move(comp)) {
  const std::size_t n = names_.size();
  if (d_.size() != n || r_.size() != n || inv_.size() != n || comp_.size() != n * n) {
    throw std::invalid_argument("groupoid tables have inconsistent sizes");
  }
  for (Mor g = 0; g < n; ++g) {
    if (d_[g] >= n || r_[g] >= n || inv_[g] >= n) throw std::invalid_argument("groupoid table entry out of range");
    if (!index_.emplace(names_[g], g).second) throw std::invalid_argument("duplicate morphism name '" + names_[g] + "'");
  }
  for (Mor c : comp_) {
    if (c != kNoMor && c >= n) throw std::invalid_argument("composition table entry out of range");
  }
  std::set<Mor> ids;
  for (Mor g = 0; g < n; ++g) {
    ids.insert(d_[g]);
    ids.insert(r_[g]);
  }
  identities_.assign(ids.begin(), ids.end());
}

FiniteGroupoid FiniteGroupoid::cyclic_group(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  std::vector<Mor> d(n, 0), r(n, 0), inv(n), comp(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(prefix + std::to_string(a));
    inv[a] = (n - a) % n;
    for (std::size_t b = 0; b < n; ++b) comp[a * n + b] = (a + b) % n;
  }
  return FiniteGroupoid(names, d, r, inv, comp);
}

FiniteGroupoid FiniteGroupoid::transitive(std::size_t objects, std::size_t m) {
  auto id = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * objects + j) * m + k; };
  const std::size_t n = objects * objects * m;
  std::vector<std::string> names(n);
  std::vector<Mor> d(n), r(n), inv(n), comp(n * n, kNoMor);
  for (std::size_t i = 0; i < objects; ++i) {
    for (std::size_t j = 0; j < objects; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        Mor g = id(i, j, k);
        names[g] = "t" + std::to_string(i) + std::to_string(j) + (m > 1 ? "_" + std::to_string(k) : "");
        d[g] = id(j, j, 0);
        r[g] = id(i, i, 0);
        inv[g] = id(j, i, (m - k) % m);
        for (std::size_t l = 0; l < objects; ++l) {
          for (std::size_t k2 = 0; k2 < m; ++k2) comp[g * n + id(j, l, k2)] = id(i, l, (k + k2) % m);
        }
      }
    }
  }
  return FiniteGroupoid(names, d, r, inv, comp);
}

FiniteGroupoid FiniteGroupoid::disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const std::size_t na = a.size(), n = a.size() + b.size();
  std::vector<std::string> names;
  std::vector<Mor> d, r, inv, comp(n * n, kNoMor);
  bool clash = std::any_of(b.names_.begin(), b.names_.end(), [&](const std::string& s) { return a.find(s).has_value(); });
  for (Mor g = 0; g < na; ++g) {
    names.push_back(clash ? "a." + a.name(g) : a.name(g));
    d.push_back(a.d(g));
    r.push_back(a.r(g));
    inv.push_back(a.inv(g));
    for (Mor h = 0; h < na; ++h) comp[g * n + h] = a.compose(g, h);
  }
  for (Mor g = 0; g < b.size(); ++g) {
    names.push_back(clash ? "b." + b.name(g) : b.name(g));
    d.push_back(b.d(g) + na);
    r.push_back(b.r(g) + na);
    inv.push_back(b.inv(g) + na);
    for (Mor h = 0; h < b.size(); ++h) {
      Mor c = b.compose(g, h);
      comp[(g + na) * n + h + na] = c == kNoMor ? kNoMor : c + na;
    }
  }
  return FiniteGroupoid(names, d, r, inv, comp);
}

std::optional<Mor> FiniteGroupoid::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Mor> FiniteGroupoid::with_range(Mor e) const {
  std::vector<Mor> out;
  for (Mor g = 0; g < size(); ++g) {
    if (r_[g] == e) out.push_back(g);
  }
  return out;
}

std::vector<Mor> FiniteGroupoid::with_domain(Mor e) const {
  std::vector<Mor> out;
  for (Mor g = 0; g < size(); ++g) {
    if (d_[g] == e) out.push_back(g);
  }
  return out;
}

std::vector<Mor> FiniteGroupoid::between(Mor to, Mor from) const {
  std::vector<Mor> out;
  for (Mor g = 0; g < size(); ++g) {
    if (d_[g] == from && r_[g] == to) out.push_back(g);
  }
  return out;
}

std::vector<std::pair<Mor, Mor>> FiniteGroupoid::composable_pairs() const {
  std::vector<std::pair<Mor, Mor>> out;
  for (Mor g = 0; g < size(); ++g) {
    for (Mor h = 0; h < size(); ++h) {
      if (composable(g, h)) out.emplace_back(g, h);
    }
  }
  return out;
}

Report FiniteGroupoid::validate(const std::vector<std::string>& declared) const {
  Report rep;
  const std::size_t n = size();
  auto nm = [&](Mor g) { return g == kNoMor ? std::string("undefined") : names_[g]; };

  Check& ids = rep.clause("groupoid.identities", "every d(g) and r(g) is an identity: d(e)=r(e)=e=e^-1");
  for (Mor e : identities_) {
    ids.expect(d_[e] == e && r_[e] == e && inv_[e] == e, [&] { return nm(e) + " is used as an identity but is not one"; });
  }
  if (!declared.empty()) {
    Check& decl = rep.clause("groupoid.declared-identities", "declared identities coincide with the derived ones");
    std::set<std::string> want(declared.begin(), declared.end()), have;
    for (Mor e : identities_) have.insert(names_[e]);
    for (const auto& s : want) {
      decl.expect(have.count(s) > 0, [&] {
        return "declared identity '" + s + "' is " + (find(s) ? "not an identity" : "not a morphism");
      });
    }
    for (const auto& s : have) {
      decl.expect(want.count(s) > 0, [&] { return "identity '" + s + "' is missing from the declared list"; });
    }
  }

  Check& dom = rep.clause("groupoid.composability", "g*h is defined exactly when d(g) = r(h)");
  Check& ends = rep.clause("groupoid.endpoints", "d(gh) = d(h) and r(gh) = r(g)");
  for (Mor g = 0; g < n; ++g) {
    for (Mor h = 0; h < n; ++h) {
      Mor c = compose(g, h);
      dom.expect((c != kNoMor) == (d_[g] == r_[h]), [&] { return nm(g) + "*" + nm(h) + " = " + nm(c); });
      if (c != kNoMor) {
        ends.expect(d_[c] == d_[h] && r_[c] == r_[g], [&] { return nm(g) + "*" + nm(h) + " = " + nm(c); });
      }
    }
  }
  Check& assoc = rep.clause("groupoid.associativity", "(gh)k = g(hk) for composable triples");
  for (Mor g = 0; g < n; ++g) {
    for (Mor h = 0; h < n; ++h) {
      Mor gh = compose(g, h);
      if (gh == kNoMor) continue;
      for (Mor k = 0; k < n; ++k) {
        Mor hk = compose(h, k);
        if (hk == kNoMor) continue;
        Mor left = compose(gh, k), right = compose(g, hk);
        assoc.expect(left == right && left != kNoMor,
                     [&] { return "(" + nm(g) + nm(h) + ")" + nm(k) + " = " + nm(left) + " but " + nm(g) + "(" + nm(h) + nm(k) + ") = " + nm(right); });
      }
    }
  }
  Check& units = rep.clause("groupoid.units", "r(g) g = g = g d(g)");
  Check& invs = rep.clause("groupoid.inverses", "g^-1 g = d(g) and g g^-1 = r(g)");
  for (Mor g = 0; g < n; ++g) {
    units.expect(compose(r_[g], g) == g && compose(g, d_[g]) == g, [&] { return "units fail at " + nm(g); });
    Mor gi = inv_[g];
    invs.expect(compose(gi, g) == d_[g] && compose(g, gi) == r_[g], [&] { return "inverse fails at " + nm(g); });
  }
  return rep;
}

FiniteGroupoid FiniteGroupoid::principal_subgroupoid(Mor e, std::vector<Mor>* embedding) const {
  std::vector<Mor> members = principal_group(e);
  std::vector<Mor> local(size(), kNoMor);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = i;
  const std::size_t n = members.size();
  std::vector<std::string> names;
  std::vector<Mor> d(n, local[e]), r(n, local[e]), inv(n), comp(n * n, kNoMor);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(names_[members[i]]);
    inv[i] = local[inv_[members[i]]];
    for (std::size_t j = 0; j < n; ++j) comp[i * n + j] = local[compose(members[i], members[j])];
  }
  if (embedding) *embedding = members;
  return FiniteGroupoid(names, d, r, inv, comp);
}

}  // namespace pgact
