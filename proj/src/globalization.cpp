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

#include "pgact/globalization.hpp"

#include <map>
#include <stdexcept>

namespace pgact {

GlobalizabilityCheck check_globalizable(const PartialCatAction& a) {
  GlobalizabilityCheck out;
  const FiniteGroupoid& G = a.groupoid();
  const Semicategory& C = a.semicategory();
  Report valid = validate_cat_action(a);
  if (!valid.ok()) {
    out.report.merge(valid, "input.");
    return out;
  }
  Check& li = out.report.clause("globalizable.local-identity", "each I^g has a two-sided local identity at every object");
  out.certificate.assign(G.size(), std::vector<std::optional<Vector>>(C.num_objects()));
  for (Mor g = 0; g < G.size(); ++g) {
    for (Obj x = 0; x < C.num_objects(); ++x) {
      LocalIdentity id = find_local_identity(C, a.ideal(g), x);
      li.expect(id.exists, [&] { return "I^" + G.name(g) + " at " + C.object_name(x) + ": " + id.failure; });
      if (id.exists) out.certificate[g][x] = id.element;
    }
  }
  out.globalizable = li.passed();
  return out;
}

const Matrix* Globalization::embed(Mor e, Obj y, Obj x) const {
  if (e >= phi.size()) return nullptr;
  const std::size_t n = embedding.size();
  const auto& m = phi[e].at(y * n + x);
  return m ? &*m : nullptr;
}

namespace {

// Coordinate h of a function on G(-, e) at target objects (q, p): its value
// lives in _uC_v with u = beta_{h^-1} q and v = beta_{h^-1} p.
struct Coord {
  Mor h;
  Obj u;
  Obj v;
  std::size_t offset;
};

struct FunctionSpace {
  std::vector<Coord> coords;
  std::size_t dim = 0;
  const Coord* find(Mor h) const {
    for (const auto& c : coords) {
      if (c.h == h) return &c;
    }
    return nullptr;
  }
};

class FunctionModel {
 public:
  FunctionModel(const PartialCatAction& a, const SetGlobalization& sg,
                const std::vector<std::vector<std::optional<Vector>>>& ones)
      : a_(a), G_(a.groupoid()), C_(a.semicategory()), beta0_(sg.global), iota_(sg.embedding), ones_(ones) {
    m_ = beta0_.num_points();
    back_.assign(m_, kNoObj);
    for (Obj x = 0; x < iota_.size(); ++x) back_[iota_[x]] = x;
    for (Mor e : G_.identities()) {
      auto& sp = spaces_[e];
      sp.resize(m_ * m_);
      for (Obj q = 0; q < m_; ++q) {
        if (!beta0_.in_domain(e, q)) continue;
        for (Obj p = 0; p < m_; ++p) {
          if (!beta0_.in_domain(e, p)) continue;
          FunctionSpace fs;
          for (Mor h : G_.with_range(e)) {
            Obj hq = beta0_.apply(G_.inv(h), q), hp = beta0_.apply(G_.inv(h), p);
            if (hq == kNoObj || hp == kNoObj) continue;
            Obj u = back_[hq], v = back_[hp];
            if (u == kNoObj || v == kNoObj) continue;
            fs.coords.push_back({h, u, v, fs.dim});
            fs.dim += C_.rank(u, v);
          }
          sp[q * m_ + p] = std::move(fs);
        }
      }
    }
  }

  std::size_t points() const { return m_; }
  Obj back(Obj q) const { return back_[q]; }
  const FunctionSpace* space(Mor e, Obj q, Obj p) const {
    const auto& sp = spaces_.at(e)[q * m_ + p];
    return sp ? &*sp : nullptr;
  }

  // phi_e(eta) at (iota y, iota x): coordinate h carries alpha^{h^-1}(eta 1^h_x).
  Vector phi(Mor e, Obj y, Obj x, const Vector& eta) const {
    const FunctionSpace* fs = space(e, iota_[y], iota_[x]);
    Vector out = zero_vector(C_.field(), fs->dim);
    for (const auto& c : fs->coords) {
      if (!a_.in_domain(c.h, y) || !a_.in_domain(c.h, x)) continue;
      const Vector& one = *ones_[c.h][x];
      Vector v = a_.apply(G_.inv(c.h), y, x, C_.compose(y, x, x, eta, one));
      for (std::size_t i = 0; i < v.size(); ++i) out[c.offset + i] = v[i];
    }
    return out;
  }

  // (beta_g f)(h) = f(g^-1 h), from F_d(g)(q, p) to F_r(g)(gq, gp).
  Vector translate(Mor g, Obj q, Obj p, const Vector& f) const {
    const FunctionSpace* src = space(G_.d(g), q, p);
    const FunctionSpace* dst = space(G_.r(g), beta0_.apply(g, q), beta0_.apply(g, p));
    Vector out = zero_vector(C_.field(), dst->dim);
    for (const auto& c : dst->coords) {
      const Coord* s = src->find(G_.compose(G_.inv(g), c.h));
      if (!s) continue;
      for (std::size_t i = 0; i < C_.rank(c.u, c.v); ++i) out[c.offset + i] = f[s->offset + i];
    }
    return out;
  }

  // Pointwise composition F_e(r, q) x F_e(q, p) -> F_e(r, p).
  Vector compose(Mor e, Obj r, Obj q, Obj p, const Vector& f, const Vector& k) const {
    const FunctionSpace* rq = space(e, r, q);
    const FunctionSpace* qp = space(e, q, p);
    const FunctionSpace* rp = space(e, r, p);
    Vector out = zero_vector(C_.field(), rp->dim);
    for (const auto& c : rp->coords) {
      const Coord* a = rq->find(c.h);
      const Coord* b = qp->find(c.h);
      if (!a || !b) continue;
      Vector fa(f.begin() + static_cast<std::ptrdiff_t>(a->offset),
                f.begin() + static_cast<std::ptrdiff_t>(a->offset + C_.rank(a->u, a->v)));
      Vector kb(k.begin() + static_cast<std::ptrdiff_t>(b->offset),
                k.begin() + static_cast<std::ptrdiff_t>(b->offset + C_.rank(b->u, b->v)));
      Vector v = C_.compose(c.u, a->v, c.v, fa, kb);
      for (std::size_t i = 0; i < v.size(); ++i) out[c.offset + i] = v[i];
    }
    return out;
  }

  // E^e(q, p): sum over h in G(-, e) of beta_h phi_d(h)(I^d(h)).
  Submodule generated(Mor e, Obj q, Obj p) const {
    const FunctionSpace* fs = space(e, q, p);
    std::vector<Vector> gens;
    for (Mor h : G_.with_range(e)) {
      Obj hq = beta0_.apply(G_.inv(h), q), hp = beta0_.apply(G_.inv(h), p);
      if (hq == kNoObj || hp == kNoObj) continue;
      Obj u = back_[hq], v = back_[hp];
      if (u == kNoObj || v == kNoObj) continue;
      Mor dh = G_.d(h);
      if (!a_.in_domain(dh, u) || !a_.in_domain(dh, v)) continue;
      for (const auto& b : a_.ideal(dh).at(u, v).basis()) gens.push_back(translate(h, hq, hp, phi(dh, u, v, b)));
    }
    return Submodule::span(C_.field(), fs->dim, gens);
  }

 private:
  const PartialCatAction& a_;
  const FiniteGroupoid& G_;
  const Semicategory& C_;
  const PartialSetAction& beta0_;
  const std::vector<Obj>& iota_;
  const std::vector<std::vector<std::optional<Vector>>>& ones_;
  std::size_t m_ = 0;
  std::vector<Obj> back_;
  std::map<Mor, std::vector<std::optional<FunctionSpace>>> spaces_;
};

}  // namespace

Globalization globalize_cat_action(const PartialCatAction& a) {
  Globalization out;
  GlobalizabilityCheck pre = check_globalizable(a);
  if (!pre.globalizable) {
    out.report.merge(pre.report, "precondition.");
    return out;
  }
  SetGlobalization sg = globalize_set_action(a.object_action());
  if (!sg.ok()) {
    out.report.merge(sg.report, "objects.");
    return out;
  }
  const FiniteGroupoid& G = a.groupoid();
  const Semicategory& C = a.semicategory();
  const Field& F = C.field();
  const std::size_t n = C.num_objects();
  FunctionModel model(a, sg, pre.certificate);
  const std::size_t m = model.points();

  // E^e components, as spans inside the function spaces.
  std::map<Mor, std::vector<std::optional<Submodule>>> E;
  for (Mor e : G.identities()) {
    E[e].resize(m * m);
    for (Obj q = 0; q < m; ++q) {
      for (Obj p = 0; p < m; ++p) {
        if (model.space(e, q, p)) E[e][q * m + p] = model.generated(e, q, p);
      }
    }
  }
  // Calls visit(e, r, q, p, product) on every product of basis vectors.
  auto for_products = [&](const auto& visit) {
    for (Mor e : G.identities()) {
      for (Obj r = 0; r < m; ++r) {
        for (Obj q = 0; q < m; ++q) {
          if (!E[e][r * m + q]) continue;
          for (Obj p = 0; p < m; ++p) {
            if (!E[e][q * m + p] || !E[e][r * m + p]) continue;
            const auto left = E[e][r * m + q]->basis();
            const auto right = E[e][q * m + p]->basis();
            for (std::size_t i = 0; i < left.size(); ++i) {
              for (std::size_t j = 0; j < right.size(); ++j) {
                visit(e, r, q, p, i, j, model.compose(e, r, q, p, left[i], right[j]));
              }
            }
          }
        }
      }
    }
  };
  Check& closed = out.report.clause("construction.closed", "E^e is closed under pointwise composition");
  for_products([&](Mor e, Obj r, Obj, Obj p, std::size_t, std::size_t, const Vector& prod) {
    closed.expect(E[e][r * m + p]->contains(prod), [&] {
      return "product leaves E^" + G.name(e) + " at (" + sg.global.point_name(r) + "," + sg.global.point_name(p) + ")";
    });
  });
  if (!closed.passed()) {
    // Continue inside the sub-semicategory the spans generate.
    bool grown = true;
    while (grown) {
      grown = false;
      for_products([&](Mor e, Obj r, Obj, Obj p, std::size_t, std::size_t, const Vector& prod) {
        auto& s = E[e][r * m + p];
        if (s->contains(prod)) return;
        std::vector<Vector> gens = s->basis();
        gens.push_back(prod);
        s = Submodule::span(F, s->ambient_rank(), gens);
        grown = true;
      });
    }
    out.report.note("E^e replaced by the sub-semicategory it generates");
  }

  // Block layout of T(q, p) = direct sum over e of E^e(q, p).
  std::map<Mor, std::vector<std::size_t>> offset;
  std::vector<std::size_t> ranks(m * m, 0);
  for (Mor e : G.identities()) offset[e].assign(m * m, 0);
  for (Obj q = 0; q < m; ++q) {
    for (Obj p = 0; p < m; ++p) {
      for (Mor e : G.identities()) {
        const auto& s = E[e][q * m + p];
        if (!s) continue;
        offset[e][q * m + p] = ranks[q * m + p];
        ranks[q * m + p] += s->dim();
      }
    }
  }
  Semicategory T(F, sg.global.point_names(), ranks);
  for (Obj q = 0; q < m; ++q) {
    for (Obj p = 0; p < m; ++p) {
      std::vector<std::string> labels;
      for (Mor e : G.identities()) {
        const auto& s = E[e][q * m + p];
        if (!s) continue;
        for (std::size_t i = 0; i < s->dim(); ++i) labels.push_back(G.name(e) + "." + std::to_string(i + 1));
      }
      T.set_labels(q, p, labels);
    }
  }
  for_products([&](Mor e, Obj r, Obj q, Obj p, std::size_t i, std::size_t j, const Vector& prod) {
    auto coords = E[e][r * m + p]->coordinates(prod);
    Vector full = zero_vector(F, T.rank(r, p));
    for (std::size_t k = 0; k < coords->size(); ++k) full[offset[e][r * m + p] + k] = (*coords)[k];
    T.set_basis_product(r, q, p, offset[e][r * m + q] + i, offset[e][q * m + p] + j, full);
  });

  PartialCatAction target(sg.global, T);
  Check& trans = out.report.clause("construction.translation", "beta_g maps E^d(g) onto E^r(g)");
  for (Mor g = 0; g < G.size(); ++g) {
    Mor dg = G.d(g), rg = G.r(g);
    HomFamily J = HomFamily::zero(T);
    for (Obj q = 0; q < m; ++q) {
      for (Obj p = 0; p < m; ++p) {
        const auto& s = E[rg][q * m + p];
        if (!s) continue;
        std::vector<Vector> units;
        for (std::size_t i = 0; i < s->dim(); ++i) units.push_back(T.unit(q, p, offset[rg][q * m + p] + i));
        J.at(q, p) = Submodule::span(F, T.rank(q, p), units);
      }
    }
    target.set_ideal(g, J);
    for (Obj q = 0; q < m; ++q) {
      for (Obj p = 0; p < m; ++p) {
        const auto& src = E[dg][q * m + p];
        if (!src) continue;
        Obj gq = sg.global.apply(g, q), gp = sg.global.apply(g, p);
        const auto& dst = E[rg][gq * m + gp];
        Matrix M(F, T.rank(gq, gp), T.rank(q, p));
        for (std::size_t k = 0; k < src->dim(); ++k) {
          Vector img = model.translate(g, q, p, src->basis()[k]);
          auto coords = dst->coordinates(img);
          if (!trans.expect(coords.has_value(), [&] { return "beta_" + G.name(g) + " leaves E^" + G.name(rg); })) continue;
          for (std::size_t i = 0; i < coords->size(); ++i) {
            M.at(offset[rg][gq * m + gp] + i, offset[dg][q * m + p] + k) = (*coords)[i];
          }
        }
        target.set_map(g, q, p, std::move(M));
      }
    }
  }
  if (!trans.passed()) return out;

  out.phi.assign(G.size(), std::vector<std::optional<Matrix>>(n * n));
  Check& emb = out.report.clause("construction.embedding", "phi_e(I^e) lies in E^e");
  for (Mor e : G.identities()) {
    for (Obj y = 0; y < n; ++y) {
      if (!a.in_domain(e, y)) continue;
      for (Obj x = 0; x < n; ++x) {
        if (!a.in_domain(e, x)) continue;
        Obj q = sg.embedding[y], p = sg.embedding[x];
        const Submodule& dom = a.ideal(e).at(y, x);
        std::vector<Vector> images;
        for (const auto& b : dom.basis()) {
          auto coords = E[e][q * m + p]->coordinates(model.phi(e, y, x, b));
          Vector full = zero_vector(F, T.rank(q, p));
          if (emb.expect(coords.has_value(), "phi_e leaves E^e")) {
            for (std::size_t i = 0; i < coords->size(); ++i) full[offset[e][q * m + p] + i] = (*coords)[i];
          }
          images.push_back(std::move(full));
        }
        out.phi[e][y * n + x] = extend_from_basis(dom, images, T.rank(q, p));
      }
    }
  }
  out.target = std::move(target);
  out.embedding = sg.embedding;
  out.report.merge(check_globalization(a, out));
  return out;
}

Report check_globalization(const PartialCatAction& a, const Globalization& g) {
  Report rep;
  const FiniteGroupoid& G = a.groupoid();
  const Semicategory& C = a.semicategory();
  const PartialCatAction& beta = g.target;
  const Semicategory& T = beta.semicategory();
  const std::size_t n = C.num_objects(), m = T.num_objects();
  const auto& iota = g.embedding;

  rep.merge(validate_cat_action(beta), "target.");
  Check& glob = rep.clause("target.global", "the target action is global");
  glob.expect(check_global(beta).by_domains, "some J^g differs from J^r(g)");

  // Object level.
  rep.merge(check_set_globalization(a.object_action(), beta.object_action(), iota));
  if (!rep.ok()) return rep;

  std::vector<Obj> back(m, kNoObj);
  for (Obj x = 0; x < n; ++x) back[iota[x]] = x;
  auto tname = [&](Obj q) { return T.object_name(q); };
  auto embedded = [&](Mor e, Obj y, Obj x, const Submodule& s) {
    const Matrix* M = g.embed(e, y, x);
    if (!M) throw std::invalid_argument("missing embedding phi_" + G.name(e));
    return image(*M, s);
  };

  // Faithful semifunctors with ideal images.
  Check& faithful = rep.clause("globalization.embedding-faithful", "phi_e is injective on each _yI^e_x");
  Check& functor = rep.clause("globalization.embedding-functor", "phi_e preserves composition on I^e");
  Check& ideal = rep.clause("globalization.embedding-ideal", "phi_e(I^e) is an ideal of J^e");
  for (Mor e : G.identities()) {
    Semifunctor F;
    F.objects = iota;
    HomFamily img = HomFamily::zero(T);
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        const Matrix* M = g.embed(e, y, x);
        if (M && a.in_domain(e, y) && a.in_domain(e, x)) {
          F.homs.push_back(*M);
          Submodule s = image(*M, a.ideal(e).at(y, x));
          faithful.expect(s.dim() == a.ideal(e).at(y, x).dim(), [&] {
            return "phi_" + G.name(e) + " at (" + C.object_name(y) + "," + C.object_name(x) + ")";
          });
          img.at(iota[y], iota[x]) = s;
        } else {
          F.homs.emplace_back(T.field(), T.rank(iota[y], iota[x]), C.rank(y, x));
        }
      }
    }
    const ObjectSet& dom = a.domain(e);
    check_semifunctor(functor, C, T, F, &a.ideal(e), &dom);
    ObjectSet within(m, false);
    for (Obj x = 0; x < n; ++x) within[iota[x]] = dom[x];
    check_absorbs(ideal, T, img, beta.ideal(e), within);
  }

  Check& inter = rep.clause("globalization.intersection",
                            "phi_r(g)(I^g) = phi_r(g)(I^r(g)) cap beta_g(phi_d(g)(I^d(g)))");
  Check& intertwine = rep.clause("globalization.intertwining", "beta_g phi_d(g) = phi_r(g) alpha^g on I^{g^-1}");
  for (Mor h = 0; h < G.size(); ++h) {
    Mor rh = G.r(h), dh = G.d(h), hi = G.inv(h);
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        if (a.in_domain(h, y) && a.in_domain(h, x)) {
          Obj y2 = a.move(hi, y), x2 = a.move(hi, x);
          Submodule lhs = embedded(rh, y, x, a.ideal(h).at(y, x));
          Submodule translated = beta.image(h, iota[y2], iota[x2], embedded(dh, y2, x2, a.ideal(dh).at(y2, x2)));
          Submodule rhs = intersect(embedded(rh, y, x, a.ideal(rh).at(y, x)), translated);
          inter.expect(lhs == rhs, [&] {
            return G.name(h) + " at (" + C.object_name(y) + "," + C.object_name(x) + "): " + lhs.to_string() + " vs " +
                   rhs.to_string();
          });
        }
        if (a.in_domain(hi, y) && a.in_domain(hi, x)) {
          Obj hy = a.move(h, y), hx = a.move(h, x);
          for (const auto& f : a.ideal(hi).at(y, x).basis()) {
            Vector lhs = beta.apply(h, iota[y], iota[x], g.embed(dh, y, x)->apply(f));
            Vector rhs = g.embed(rh, hy, hx)->apply(a.apply(h, y, x, f));
            intertwine.expect(lhs == rhs, [&] {
              return G.name(h) + " on " + to_string(f) + " at (" + C.object_name(y) + "," + C.object_name(x) + ")";
            });
          }
        }
      }
    }
  }

  Check& gen = rep.clause("globalization.generation", "J^g = sum over r(h) = r(g) of beta_h(phi_d(h)(I^d(h)))");
  for (Mor e : G.identities()) {
    for (Obj q = 0; q < m; ++q) {
      for (Obj p = 0; p < m; ++p) {
        Submodule sum = Submodule::zero(T.field(), T.rank(q, p));
        for (Mor h : G.with_range(e)) {
          Obj hq = beta.move(G.inv(h), q), hp = beta.move(G.inv(h), p);
          if (hq == kNoObj || hp == kNoObj) continue;
          Obj u = back[hq], v = back[hp];
          if (u == kNoObj || v == kNoObj) continue;
          Mor dh = G.d(h);
          if (!a.in_domain(dh, u) || !a.in_domain(dh, v)) continue;
          sum = sum_of(sum, beta.image(h, hq, hp, embedded(dh, u, v, a.ideal(dh).at(u, v))));
        }
        for (Mor k : G.with_range(e)) {
          gen.expect(sum == beta.ideal(k).at(q, p), [&] {
            return "J^" + G.name(k) + " at (" + tname(q) + "," + tname(p) + "): " + beta.ideal(k).at(q, p).to_string() +
                   " vs generated " + sum.to_string();
          });
        }
      }
    }
  }
  return rep;
}

EquivalenceCheck check_equivalent(const PartialCatAction& a, const Globalization& first, const Globalization& second) {
  EquivalenceCheck out;
  const FiniteGroupoid& G = a.groupoid();
  const Semicategory& C = a.semicategory();
  const PartialCatAction& b1 = first.target;
  const PartialCatAction& b2 = second.target;
  const Semicategory& T1 = b1.semicategory();
  const Semicategory& T2 = b2.semicategory();
  const std::size_t n = C.num_objects();

  Check& objs = out.report.clause("equivalence.objects", "both targets share objects, object actions and embeddings");
  const std::size_t m = T2.num_objects();
  std::vector<Obj> sigma(m, kNoObj);
  bool same = T1.num_objects() == m;
  for (Obj q = 0; q < m && same; ++q) {
    auto o = T1.find_object(T2.object_name(q));
    same = o.has_value();
    if (same) sigma[q] = *o;
  }
  objs.expect(same, [&] {
    return "object sets differ: " + std::to_string(T1.num_objects()) + " vs " + std::to_string(m) + " objects";
  });
  if (!same) return out;
  for (Mor g = 0; g < G.size(); ++g) {
    for (Obj q = 0; q < m; ++q) {
      Obj t2 = b2.move(g, q), t1 = b1.move(g, sigma[q]);
      objs.expect((t2 == kNoObj) == (t1 == kNoObj) && (t2 == kNoObj || sigma[t2] == t1),
                  [&] { return "object actions differ at " + G.name(g) + " and " + T2.object_name(q); });
    }
  }
  for (Obj x = 0; x < n; ++x) {
    objs.expect(sigma[second.embedding[x]] == first.embedding[x],
                [&] { return "embeddings differ at " + C.object_name(x); });
  }
  if (!objs.passed()) return out;

  std::vector<Obj> back(m, kNoObj);
  for (Obj x = 0; x < n; ++x) back[second.embedding[x]] = x;
  Check& gen = out.report.clause("equivalence.generated", "each J^e is spanned by the translated embedded ideals");
  Check& wd = out.report.clause("equivalence.well-defined", "psi_e respects every linear relation among the generators");
  Check& inv = out.report.clause("equivalence.invertible", "psi_e is bijective on each hom of J^e");
  out.psi.assign(G.size(), std::vector<std::optional<Matrix>>(m * m));
  for (Mor e : G.identities()) {
    for (Obj q = 0; q < m; ++q) {
      if (!b2.in_domain(e, q)) continue;
      for (Obj p = 0; p < m; ++p) {
        if (!b2.in_domain(e, p)) continue;
        Obj q1 = sigma[q], p1 = sigma[p];
        std::vector<Vector> s1, s2;
        for (Mor h : G.with_range(e)) {
          Obj hq = b2.move(G.inv(h), q), hp = b2.move(G.inv(h), p);
          if (hq == kNoObj || hp == kNoObj) continue;
          Obj u = back[hq], v = back[hp];
          if (u == kNoObj || v == kNoObj) continue;
          Mor dh = G.d(h);
          if (!a.in_domain(dh, u) || !a.in_domain(dh, v)) continue;
          for (const auto& f : a.ideal(dh).at(u, v).basis()) {
            s2.push_back(b2.apply(h, hq, hp, second.embed(dh, u, v)->apply(f)));
            s1.push_back(b1.apply(h, sigma[hq], sigma[hp], first.embed(dh, u, v)->apply(f)));
          }
        }
        const Submodule& J2 = b2.ideal(e).at(q, p);
        const Submodule& J1 = b1.ideal(e).at(q1, p1);
        gen.expect(Submodule::span(T2.field(), T2.rank(q, p), s2) == J2 &&
                       Submodule::span(T1.field(), T1.rank(q1, p1), s1) == J1,
                   [&] { return "J^" + G.name(e) + " at (" + T2.object_name(q) + "," + T2.object_name(p) + ")"; });
        Matrix S2 = Matrix::from_columns(T2.field(), T2.rank(q, p), s2);
        Matrix S1 = Matrix::from_columns(T1.field(), T1.rank(q1, p1), s1);
        bool ok = kernel(S2).is_subset_of(kernel(S1));
        wd.expect(ok, [&] { return "relation among generators not preserved at (" + T2.object_name(q) + "," + T2.object_name(p) + ")"; });
        if (!ok) continue;
        std::vector<Vector> images;
        for (const auto& b : J2.basis()) {
          auto c = solve(S2, b);
          images.push_back(c ? S1.apply(*c) : zero_vector(T1.field(), T1.rank(q1, p1)));
        }
        Matrix psi = extend_from_basis(J2, images, T1.rank(q1, p1));
        inv.expect(image(psi, J2) == J1 && J1.dim() == J2.dim(),
                   [&] { return "psi_" + G.name(e) + " at (" + T2.object_name(q) + "," + T2.object_name(p) + ")"; });
        out.psi[e][q * m + p] = std::move(psi);
      }
    }
  }
  if (!out.report.ok()) return out;

  auto psi = [&](Mor e, Obj q, Obj p) -> const Matrix& { return *out.psi[e][q * m + p]; };
  Check& inter = out.report.clause("equivalence.intertwining", "beta_g psi_d(g) = psi_r(g) beta'_g");
  for (Mor g = 0; g < G.size(); ++g) {
    Mor dg = G.d(g), rg = G.r(g);
    for (Obj q = 0; q < m; ++q) {
      for (Obj p = 0; p < m; ++p) {
        if (!b2.in_domain(dg, q) || !b2.in_domain(dg, p)) continue;
        Obj gq = b2.move(g, q), gp = b2.move(g, p);
        for (const auto& f : b2.ideal(dg).at(q, p).basis()) {
          Vector lhs = b1.apply(g, sigma[q], sigma[p], psi(dg, q, p).apply(f));
          Vector rhs = psi(rg, gq, gp).apply(b2.apply(g, q, p, f));
          inter.expect(lhs == rhs, [&] { return G.name(g) + " at (" + T2.object_name(q) + "," + T2.object_name(p) + ")"; });
        }
      }
    }
  }
  Check& mult = out.report.clause("equivalence.functor", "psi_e preserves composition on J'^e");
  for (Mor e : G.identities()) {
    for (Obj r = 0; r < m; ++r) {
      for (Obj q = 0; q < m; ++q) {
        for (Obj p = 0; p < m; ++p) {
          if (!b2.in_domain(e, r) || !b2.in_domain(e, q) || !b2.in_domain(e, p)) continue;
          for (const auto& f : b2.ideal(e).at(r, q).basis()) {
            for (const auto& k : b2.ideal(e).at(q, p).basis()) {
              Vector lhs = psi(e, r, p).apply(T2.compose(r, q, p, f, k));
              Vector rhs = T1.compose(sigma[r], sigma[q], sigma[p], psi(e, r, q).apply(f), psi(e, q, p).apply(k));
              mult.expect(lhs == rhs, [&] {
                return "at " + T2.object_name(r) + "<-" + T2.object_name(q) + "<-" + T2.object_name(p);
              });
            }
          }
        }
      }
    }
  }
  out.equivalent = out.report.ok();
  return out;
}

Globalization change_basis(const Globalization& g, const std::vector<Matrix>& p) {
  Globalization out;
  out.target = change_basis(g.target, p);
  out.embedding = g.embedding;
  const std::size_t n = g.embedding.size();
  const std::size_t m = g.target.num_objects();
  out.phi = g.phi;
  for (auto& per : out.phi) {
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        auto& M = per[y * n + x];
        if (M) M = p[g.embedding[y] * m + g.embedding[x]] * *M;
      }
    }
  }
  out.report = g.report;
  return out;
}

}  // namespace pgact
