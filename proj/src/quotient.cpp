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

#include "pgact/quotient.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <tuple>

namespace pgact {

FreenessCheck check_free(const PartialSetAction& a) {
  FreenessCheck out;
  const FiniteGroupoid& G = a.groupoid();
  Check& ch = out.report.clause("quotient.free", "g x = h x forces g = h");
  for (Obj x = 0; x < a.num_points(); ++x) {
    for (Mor g = 0; g < G.size(); ++g) {
      if (!a.defined(g, x)) continue;
      for (Mor h = g + 1; h < G.size(); ++h) {
        if (!a.defined(h, x)) continue;
        ch.expect(a.apply(g, x) != a.apply(h, x), [&] {
          return G.name(g) + " and " + G.name(h) + " both send " + a.point_name(x) + " to " + a.point_name(a.apply(g, x));
        });
      }
    }
  }
  out.free = ch.passed();
  return out;
}

FreenessCheck check_free(const PartialCatAction& a) { return check_free(a.object_action()); }

OrbitPartition object_orbits(const PartialSetAction& a) {
  const std::size_t n = a.num_points();
  const FiniteGroupoid& G = a.groupoid();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<bool>> step(n, std::vector<bool>(n, false));
  for (Obj x = 0; x < n; ++x) {
    for (Mor g = 0; g < G.size(); ++g) {
      if (!a.defined(g, x)) continue;
      Obj y = a.apply(g, x);
      step[x][y] = true;
      std::size_t rx = find(x), ry = find(y);
      if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
    }
  }
  OrbitPartition out;
  out.class_of.assign(n, 0);
  std::map<std::size_t, std::size_t> index;
  for (Obj x = 0; x < n; ++x) {
    std::size_t root = find(x);
    auto it = index.find(root);
    if (it == index.end()) {
      it = index.emplace(root, out.classes.size()).first;
      out.classes.emplace_back();
    }
    out.classes[it->second].push_back(x);
    out.class_of[x] = it->second;
  }
  for (const auto& cls : out.classes) {
    for (Obj x : cls) {
      for (Obj y : cls) out.single_step = out.single_step && step[x][y];
    }
  }
  return out;
}

namespace {

using Key = std::tuple<Mor, Obj, Obj>;

struct Ambient {
  std::vector<QuotientBlock> blocks;
  std::map<Key, std::size_t> index;
  std::size_t dim = 0;
};

}  // namespace

QuotientSemicategory build_quotient(const PartialCatAction& a) {
  QuotientSemicategory out;
  const FiniteGroupoid& G = a.groupoid();
  const Semicategory& C = a.semicategory();
  const Field& F = C.field();
  FreenessCheck free = check_free(a);
  out.report.merge(free.report);
  if (!free.free) return out;
  out.orbits = object_orbits(a.object_action());
  const auto& classes = out.orbits.classes;
  const std::size_t k = classes.size();

  std::vector<Ambient> amb(k * k);
  for (std::size_t tau = 0; tau < k; ++tau) {
    for (std::size_t rho = 0; rho < k; ++rho) {
      Ambient& A = amb[tau * k + rho];
      for (Mor e : G.identities()) {
        for (Obj y : classes[tau]) {
          for (Obj x : classes[rho]) {
            std::size_t d = a.ideal(e).at(y, x).dim();
            if (d == 0) continue;
            A.index[{e, y, x}] = A.blocks.size();
            A.blocks.push_back({e, y, x, A.dim, d});
            A.dim += d;
          }
        }
      }
    }
  }
  // Ambient coordinates of v in the copy of _yI^e_x, or nullopt.
  auto embed = [&](const Ambient& A, Mor e, Obj y, Obj x, const Vector& v) -> std::optional<Vector> {
    Vector out_v = zero_vector(F, A.dim);
    if (is_zero(v)) return out_v;
    auto it = A.index.find({e, y, x});
    if (it == A.index.end()) return std::nullopt;
    auto coords = a.ideal(e).at(y, x).coordinates(v);
    if (!coords) return std::nullopt;
    const auto& b = A.blocks[it->second];
    for (std::size_t i = 0; i < coords->size(); ++i) out_v[b.offset + i] = (*coords)[i];
    return out_v;
  };

  Check& closed = out.report.clause("quotient.closed", "translated products stay in the ideal copies");
  std::size_t untranslatable = 0;
  // Product of ambient basis vectors p of hom (kappa, tau) and q of hom (tau, rho).
  auto product = [&](std::size_t kappa, std::size_t tau, std::size_t rho, std::size_t p, std::size_t q) {
    const Ambient& L = amb[kappa * k + tau];
    const Ambient& R = amb[tau * k + rho];
    const Ambient& D = amb[kappa * k + rho];
    auto locate = [](const Ambient& A, std::size_t i) {
      for (const auto& b : A.blocks) {
        if (i >= b.offset && i < b.offset + b.dim) return std::make_pair(b, i - b.offset);
      }
      return std::make_pair(A.blocks.front(), std::size_t{0});
    };
    auto [bk, ik] = locate(L, p);
    auto [bf, jf] = locate(R, q);
    const Vector& kv = a.ideal(bk.e).at(bk.y, bk.x).basis()[ik];
    const Vector& fv = a.ideal(bf.e).at(bf.y, bf.x).basis()[jf];
    Obj z = bk.y, w = bk.x, y = bf.y, x = bf.x;
    Mor g = kNoMor;
    for (Mor h = 0; h < G.size() && g == kNoMor; ++h) {
      if (a.move(h, y) == w) g = h;
    }
    std::optional<Vector> res = zero_vector(F, D.dim);
    const Matrix* fwd = g == kNoMor ? nullptr : a.map(g, y, x);
    const Matrix* back = g == kNoMor ? nullptr : a.map(G.inv(g), z, w);
    if (fwd && a.ideal(G.inv(g)).at(y, x).contains(fv)) {
      Obj gx = a.move(g, x);
      res = embed(D, bk.e, z, gx, C.compose(z, w, gx, kv, fwd->apply(fv)));
    } else if (back && a.ideal(g).at(z, w).contains(kv)) {
      Obj gz = a.move(G.inv(g), z);
      res = embed(D, bf.e, gz, x, C.compose(gz, y, x, back->apply(kv), fv));
    } else {
      ++untranslatable;
    }
    closed.expect(res.has_value(), [&] {
      return "product at " + C.object_name(z) + "<-" + C.object_name(w) + " / " + C.object_name(y) + "<-" +
             C.object_name(x);
    });
    return res ? *res : zero_vector(F, D.dim);
  };

  Check& rel = out.report.clause("quotient.relations", "each v - alpha_g(v) lies in the ambient module");
  out.homs.resize(k * k);
  for (std::size_t tau = 0; tau < k; ++tau) {
    for (std::size_t rho = 0; rho < k; ++rho) {
      const Ambient& A = amb[tau * k + rho];
      std::vector<Vector> gens;
      for (Mor g = 0; g < G.size(); ++g) {
        for (Obj y : classes[tau]) {
          for (Obj x : classes[rho]) {
            const Matrix* m = a.map(g, y, x);
            if (!m) continue;
            for (const auto& v : a.ideal(G.inv(g)).at(y, x).basis()) {
              auto src = embed(A, G.d(g), y, x, v);
              auto dst = embed(A, G.r(g), a.move(g, y), a.move(g, x), m->apply(v));
              if (!rel.expect(src && dst, [&] { return G.name(g) + " at (" + C.object_name(y) + "," + C.object_name(x) + ")"; })) {
                continue;
              }
              gens.push_back(sub(*src, *dst));
            }
          }
        }
      }
      out.homs[tau * k + rho] = quotient_module(Submodule::full(F, A.dim), Submodule::span(F, A.dim, gens));
    }
  }

  std::vector<std::string> names;
  std::vector<std::size_t> ranks;
  for (const auto& cls : classes) names.push_back("[" + C.object_name(cls.front()) + "]");
  for (std::size_t s = 0; s < k * k; ++s) ranks.push_back(out.homs[s].dim());
  out.cat = Semicategory(F, names, ranks);

  Check& cong = out.report.clause("quotient.congruence", "products of related representatives are related");
  for (std::size_t kappa = 0; kappa < k; ++kappa) {
    for (std::size_t tau = 0; tau < k; ++tau) {
      for (std::size_t rho = 0; rho < k; ++rho) {
        const Ambient& L = amb[kappa * k + tau];
        const Ambient& R = amb[tau * k + rho];
        const Quotient& QL = out.homs[kappa * k + tau];
        const Quotient& QR = out.homs[tau * k + rho];
        const Quotient& QD = out.homs[kappa * k + rho];
        std::vector<std::vector<Vector>> table(L.dim, std::vector<Vector>(R.dim));
        for (std::size_t p = 0; p < L.dim; ++p) {
          for (std::size_t q = 0; q < R.dim; ++q) table[p][q] = product(kappa, tau, rho, p, q);
        }
        const std::size_t dd = amb[kappa * k + rho].dim;
        auto bilinear = [&](const Vector& u, const Vector& v) {
          Vector acc = zero_vector(F, dd);
          for (std::size_t p = 0; p < L.dim; ++p) {
            if (u[p].is_zero()) continue;
            for (std::size_t q = 0; q < R.dim; ++q) {
              if (!v[q].is_zero()) axpy(acc, u[p] * v[q], table[p][q]);
            }
          }
          return acc;
        };
        for (const auto& r : QR.relations.basis()) {
          for (std::size_t p = 0; p < L.dim; ++p) {
            cong.expect(QD.relations.contains(bilinear(unit_vector(F, L.dim, p), r)), [&] {
              return "left factor moves a relation out at " + names[kappa] + "<-" + names[tau] + "<-" + names[rho];
            });
          }
        }
        for (const auto& r : QL.relations.basis()) {
          for (std::size_t q = 0; q < R.dim; ++q) {
            cong.expect(QD.relations.contains(bilinear(r, unit_vector(F, R.dim, q))), [&] {
              return "right factor moves a relation out at " + names[kappa] + "<-" + names[tau] + "<-" + names[rho];
            });
          }
        }
        for (std::size_t i = 0; i < QL.dim(); ++i) {
          for (std::size_t j = 0; j < QR.dim(); ++j) {
            out.cat.set_basis_product(kappa, tau, rho, i, j,
                                      QD.projection.apply(bilinear(QL.transversal[i], QR.transversal[j])));
          }
        }
      }
    }
  }
  if (untranslatable > 0) {
    out.report.note(std::to_string(untranslatable) + " representative pairs admit no translate and compose to 0");
  }
  out.report.merge(out.cat.validate(), "quotient.");
  for (std::size_t s = 0; s < k * k; ++s) {
    out.blocks.push_back(amb[s].blocks);
    out.ambient_dims.push_back(amb[s].dim);
  }
  return out;
}

}  // namespace pgact
