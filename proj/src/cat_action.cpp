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

#include "pgact/cat_action.hpp"

#include <stdexcept>

namespace pgact {

PartialCatAction::PartialCatAction(PartialSetAction objects, Semicategory c)
    : objects_(std::move(objects)), cat_(std::move(c)) {
  if (objects_.num_points() != cat_.num_objects()) {
    throw std::invalid_argument("object action and semicategory have different object counts");
  }
  for (Obj x = 0; x < cat_.num_objects(); ++x) {
    if (objects_.point_name(x) != cat_.object_name(x)) {
      throw std::invalid_argument("object action point '" + objects_.point_name(x) + "' does not match object '" +
                                  cat_.object_name(x) + "'");
    }
  }
  ideals_.assign(groupoid().size(), HomFamily::zero(cat_));
  maps_.assign(groupoid().size(), std::vector<std::optional<Matrix>>(num_objects() * num_objects()));
  // Unspecified maps are the identity for identities and zero otherwise.
  for (Mor g = 0; g < groupoid().size(); ++g) {
    for (Obj y = 0; y < num_objects(); ++y) {
      for (Obj x = 0; x < num_objects(); ++x) {
        Obj gy = move(g, y), gx = move(g, x);
        if (gy == kNoObj || gx == kNoObj) continue;
        if (groupoid().is_identity(g) && gy == y && gx == x) {
          maps_[g][slot(y, x)] = Matrix::identity(cat_.field(), cat_.rank(y, x));
        } else {
          maps_[g][slot(y, x)] = Matrix(cat_.field(), cat_.rank(gy, gx), cat_.rank(y, x));
        }
      }
    }
  }
}

void PartialCatAction::set_ideal(Mor g, HomFamily family) {
  if (family.num_objects() != num_objects()) throw std::invalid_argument("ideal over the wrong object set");
  ideals_.at(g) = std::move(family);
}

const Matrix* PartialCatAction::map(Mor g, Obj y, Obj x) const {
  const auto& m = maps_.at(g).at(slot(y, x));
  return m ? &*m : nullptr;
}

void PartialCatAction::set_map(Mor g, Obj y, Obj x, Matrix m) {
  if (move(g, y) == kNoObj || move(g, x) == kNoObj) {
    throw std::invalid_argument("alpha^" + groupoid().name(g) + " has no domain pair (" + cat_.object_name(y) + "," +
                                cat_.object_name(x) + ")");
  }
  maps_.at(g).at(slot(y, x)) = std::move(m);
}

Vector PartialCatAction::apply(Mor g, Obj y, Obj x, const Vector& v) const {
  const Matrix* m = map(g, y, x);
  if (!m) {
    throw std::invalid_argument("alpha^" + groupoid().name(g) + " is not defined at (" + cat_.object_name(y) + "," +
                                cat_.object_name(x) + ")");
  }
  return m->apply(v);
}

Submodule PartialCatAction::image(Mor g, Obj y, Obj x, const Submodule& s) const {
  const Matrix* m = map(g, y, x);
  if (!m) throw std::invalid_argument("image outside the domain of alpha^" + groupoid().name(g));
  return pgact::image(*m, intersect(ideal(groupoid().inv(g)).at(y, x), s));
}

namespace {

std::string pair_name(const Semicategory& c, Obj y, Obj x) {
  return "(" + c.object_name(y) + "," + c.object_name(x) + ")";
}

}  // namespace

Report validate_cat_action(const PartialCatAction& a, const ActionOptions& opts) {
  Report rep;
  rep.merge(validate_set_action(a.object_action()), "objects.");
  const FiniteGroupoid& G = a.groupoid();
  const Semicategory& C = a.semicategory();
  const std::size_t n = C.num_objects();
  const ObjectSet all = all_objects(n);
  auto gn = [&](Mor g) { return G.name(g); };

  Check& shape = rep.clause("action.map-shape", "alpha^g has a matrix of the right shape on every domain pair");
  for (Mor g = 0; g < G.size(); ++g) {
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        const Matrix* m = a.map(g, y, x);
        if (!m) continue;
        Obj gy = a.move(g, y), gx = a.move(g, x);
        shape.expect(m->rows() == C.rank(gy, gx) && m->cols() == C.rank(y, x), [&] {
          return "alpha^" + gn(g) + " at " + pair_name(C, y, x) + " is " + std::to_string(m->rows()) + "x" +
                 std::to_string(m->cols());
        });
      }
    }
  }
  if (!shape.passed()) return rep;

  Check& support = rep.clause("action.support", "I^g vanishes outside C_0^g x C_0^g");
  for (Mor g = 0; g < G.size(); ++g) check_supported_on(support, C, a.ideal(g), a.domain(g));

  Check& ideal_c = rep.clause("action.ideal-of-category", "I^e is an ideal of C for identities e");
  for (Mor e : G.identities()) check_absorbs(ideal_c, C, a.ideal(e), HomFamily::full(C), opts.strict_ideals ? all : a.domain(e));

  Check& nest = rep.clause("action.ideal-nesting", "I^g is an ideal of I^r(g)");
  for (Mor g = 0; g < G.size(); ++g) {
    check_absorbs(nest, C, a.ideal(g), a.ideal(G.r(g)), opts.strict_ideals ? all : a.domain(g));
  }

  Check& iso = rep.clause("action.isomorphism", "alpha^g maps _yI^{g^-1}_x bijectively onto _{gy}I^g_{gx}");
  Check& func = rep.clause("action.functorial", "alpha^g preserves composition on I^{g^-1}");
  for (Mor g = 0; g < G.size(); ++g) {
    Mor gi = G.inv(g);
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        const Matrix* m = a.map(g, y, x);
        if (!m) continue;
        const Submodule& src = a.ideal(gi).at(y, x);
        Submodule img = image(*m, src);
        Obj gy = a.move(g, y), gx = a.move(g, x);
        iso.expect(img.dim() == src.dim() && img == a.ideal(g).at(gy, gx), [&] {
          return "alpha^" + gn(g) + " at " + pair_name(C, y, x) + ": image " + img.to_string() + " of dim " +
                 std::to_string(img.dim()) + " vs source dim " + std::to_string(src.dim()) + " and target " +
                 a.ideal(g).at(gy, gx).to_string();
        });
      }
    }
    for (Obj z = 0; z < n; ++z) {
      for (Obj y = 0; y < n; ++y) {
        const Matrix* mzy = a.map(g, z, y);
        if (!mzy) continue;
        for (Obj x = 0; x < n; ++x) {
          const Matrix* myx = a.map(g, y, x);
          const Matrix* mzx = a.map(g, z, x);
          if (!myx || !mzx) continue;
          Obj gz = a.move(g, z), gy = a.move(g, y), gx = a.move(g, x);
          for (const auto& f : a.ideal(gi).at(z, y).basis()) {
            for (const auto& k : a.ideal(gi).at(y, x).basis()) {
              Vector lhs = mzx->apply(C.compose(z, y, x, f, k));
              Vector rhs = C.compose(gz, gy, gx, mzy->apply(f), myx->apply(k));
              func.expect(lhs == rhs, [&] {
                return "alpha^" + gn(g) + " on " + C.object_name(z) + "<-" + C.object_name(y) + "<-" +
                       C.object_name(x) + ": " + to_string(lhs) + " vs " + to_string(rhs);
              });
            }
          }
        }
      }
    }
  }

  Check& ident = rep.clause("action.identity", "alpha^e is the identity on I^e");
  for (Mor e : G.identities()) {
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        const Matrix* m = a.map(e, y, x);
        if (!m) continue;
        for (const auto& f : a.ideal(e).at(y, x).basis()) {
          ident.expect(a.move(e, y) == y && a.move(e, x) == x && m->apply(f) == f,
                       [&] { return "alpha^" + gn(e) + " moves " + to_string(f) + " at " + pair_name(C, y, x); });
        }
      }
    }
  }

  Check& inter = rep.clause("action.intersection", "alpha^{h^-1}(I^h cap I^{g^-1}) lies in I^{(gh)^-1}");
  Check& comp = rep.clause("action.composition", "alpha^g alpha^h = alpha^gh on alpha^{h^-1}(I^h cap I^{g^-1})");
  for (auto [g, h] : G.composable_pairs()) {
    Mor gh = G.compose(g, h), hi = G.inv(h), gi = G.inv(g), ghi = G.inv(gh);
    for (Obj y = 0; y < n; ++y) {
      if (!a.in_domain(h, y) || !a.in_domain(gi, y)) continue;
      for (Obj x = 0; x < n; ++x) {
        if (!a.in_domain(h, x) || !a.in_domain(gi, x)) continue;
        Obj hy = a.move(hi, y), hx = a.move(hi, x);
        const Matrix* back = a.map(hi, y, x);
        if (!back) continue;
        Submodule meet = intersect(a.ideal(h).at(y, x), a.ideal(gi).at(y, x));
        Submodule img = image(*back, meet);
        inter.expect(img.is_subset_of(a.ideal(ghi).at(hy, hx)), [&] {
          return "g=" + gn(g) + ", h=" + gn(h) + " at " + pair_name(C, y, x) + ": " + img.to_string() +
                 " not inside I^" + gn(ghi);
        });
        const Matrix* mh = a.map(h, hy, hx);
        const Matrix* mgh = a.map(gh, hy, hx);
        const Matrix* mg = a.map(g, y, x);
        for (const auto& f : img.basis()) {
          bool ok = mh && mg && mgh && mg->apply(mh->apply(f)) == mgh->apply(f) && a.move(gh, hy) == a.move(g, y) &&
                    a.move(gh, hx) == a.move(g, x);
          comp.expect(ok, [&] {
            return "g=" + gn(g) + ", h=" + gn(h) + " on " + to_string(f) + " at " + pair_name(C, hy, hx);
          });
        }
      }
    }
  }
  return rep;
}

GlobalityCheck check_global(const PartialCatAction& a) {
  GlobalityCheck out;
  const FiniteGroupoid& G = a.groupoid();
  const Semicategory& C = a.semicategory();
  const std::size_t n = C.num_objects();
  Check& dom = out.report.clause("global.domains", "C_0^g = C_0^r(g) and I^g = I^r(g)");
  for (Mor g = 0; g < G.size(); ++g) {
    Mor r = G.r(g);
    dom.expect(a.domain(g) == a.domain(r) && a.ideal(g) == a.ideal(r),
               [&] { return G.name(g) + " has smaller domain than " + G.name(r); });
  }
  Check& comp = out.report.clause("global.composition", "alpha^g alpha^h = alpha^gh as partial maps");
  for (auto [g, h] : G.composable_pairs()) {
    Mor gh = G.compose(g, h), gi = G.inv(g), hi = G.inv(h), ghi = G.inv(gh);
    for (Obj x = 0; x < n; ++x) {
      bool via = a.in_domain(hi, x) && a.in_domain(gi, a.move(h, x));
      bool direct = a.in_domain(ghi, x);
      comp.expect(via == direct && (!via || a.move(g, a.move(h, x)) == a.move(gh, x)), [&] {
        return "objects: g=" + G.name(g) + ", h=" + G.name(h) + " at " + C.object_name(x);
      });
    }
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        if (!a.in_domain(ghi, y) || !a.in_domain(ghi, x)) continue;
        if (!a.in_domain(hi, y) || !a.in_domain(hi, x)) continue;
        Obj hy = a.move(h, y), hx = a.move(h, x);
        const Matrix* back = a.map(hi, hy, hx);
        if (!back) continue;
        Submodule dom_comp = image(*back, intersect(a.ideal(h).at(hy, hx), a.ideal(gi).at(hy, hx)));
        bool ok = dom_comp == a.ideal(ghi).at(y, x);
        const Matrix* mh = a.map(h, y, x);
        const Matrix* mg = a.map(g, hy, hx);
        const Matrix* mgh = a.map(gh, y, x);
        for (const auto& f : dom_comp.basis()) {
          ok = ok && mh && mg && mgh && mg->apply(mh->apply(f)) == mgh->apply(f);
        }
        comp.expect(ok, [&] {
          return "homs: g=" + G.name(g) + ", h=" + G.name(h) + " at " + pair_name(C, y, x);
        });
      }
    }
  }
  out.by_domains = dom.passed();
  out.by_composition = comp.passed();
  return out;
}

Report check_inverse_and_intersection(const PartialCatAction& a) {
  Report rep;
  const FiniteGroupoid& G = a.groupoid();
  const Semicategory& C = a.semicategory();
  const std::size_t n = C.num_objects();
  Check& inv = rep.clause("action.inverse", "alpha^{g^-1} is the inverse of alpha^g");
  for (Mor g = 0; g < G.size(); ++g) {
    Mor gi = G.inv(g);
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        const Matrix* there = a.map(gi, y, x);
        if (!there) continue;
        Obj y2 = a.move(gi, y), x2 = a.move(gi, x);
        const Matrix* back = a.map(g, y2, x2);
        for (const auto& f : a.ideal(g).at(y, x).basis()) {
          inv.expect(back && a.move(g, y2) == y && a.move(g, x2) == x && back->apply(there->apply(f)) == f, [&] {
            return "alpha^" + G.name(g) + " alpha^" + G.name(gi) + " moves " + to_string(f) + " at " + pair_name(C, y, x);
          });
        }
      }
    }
  }
  Check& inter = rep.clause("action.image-of-intersection", "alpha^g(I^{g^-1} cap I^h) = I^g cap I^gh");
  for (auto [g, h] : G.composable_pairs()) {
    Mor gi = G.inv(g), gh = G.compose(g, h);
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        const Matrix* m = a.map(g, y, x);
        if (!m) continue;
        Submodule lhs = image(*m, intersect(a.ideal(gi).at(y, x), a.ideal(h).at(y, x)));
        Obj gy = a.move(g, y), gx = a.move(g, x);
        Submodule rhs = intersect(a.ideal(g).at(gy, gx), a.ideal(gh).at(gy, gx));
        inter.expect(lhs == rhs, [&] {
          return "g=" + G.name(g) + ", h=" + G.name(h) + " at " + pair_name(C, y, x) + ": " + lhs.to_string() + " vs " +
                 rhs.to_string();
        });
      }
    }
  }
  return rep;
}

PartialCatAction induce_partial_action(const PartialCatAction& beta, const HomFamily& ideal,
                                       const std::vector<Obj>& objects) {
  const FiniteGroupoid& G = beta.groupoid();
  PartialSetAction obj = restrict_action(beta.object_action(), objects);
  PartialCatAction out(obj, full_subsemicategory(beta.semicategory(), objects));
  const std::size_t m = objects.size();
  for (Mor g = 0; g < G.size(); ++g) {
    Mor gi = G.inv(g);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (obj.in_domain(g, a) && obj.in_domain(g, b)) {
          Obj y = objects[a], x = objects[b];
          Submodule here = intersect(ideal.at(y, x), beta.ideal(g).at(y, x));
          Obj y2 = beta.move(gi, y), x2 = beta.move(gi, x);
          Submodule there = intersect(ideal.at(y2, x2), beta.ideal(gi).at(y2, x2));
          out.set_ideal(g, a, b, intersect(here, beta.image(g, y2, x2, there)));
        }
        if (obj.in_domain(gi, a) && obj.in_domain(gi, b)) {
          const Matrix* mm = beta.map(g, objects[a], objects[b]);
          if (mm) out.set_map(g, a, b, *mm);
        }
      }
    }
  }
  return out;
}

PartialCatAction restrict_to_principal_group(const PartialCatAction& a, Mor e) {
  std::vector<Mor> emb;
  FiniteGroupoid H = a.groupoid().principal_subgroupoid(e, &emb);
  std::vector<Obj> objects = a.object_action().domain(e);
  std::vector<std::string> names;
  std::vector<Obj> local(a.num_objects(), kNoObj);
  for (std::size_t i = 0; i < objects.size(); ++i) {
    names.push_back(a.semicategory().object_name(objects[i]));
    local[objects[i]] = i;
  }
  PartialSetAction obj(H, names);
  for (Mor k = 0; k < H.size(); ++k) {
    std::vector<Obj> dom;
    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (a.in_domain(emb[k], objects[i])) dom.push_back(i);
      Obj to = a.move(emb[k], objects[i]);
      if (to != kNoObj && local[to] != kNoObj) obj.set_map(k, i, local[to]);
    }
    obj.set_domain(k, dom);
  }
  PartialCatAction out(obj, full_subsemicategory(a.semicategory(), objects));
  for (Mor k = 0; k < H.size(); ++k) {
    for (std::size_t i = 0; i < objects.size(); ++i) {
      for (std::size_t j = 0; j < objects.size(); ++j) {
        out.set_ideal(k, i, j, a.ideal(emb[k]).at(objects[i], objects[j]));
        const Matrix* m = a.map(emb[k], objects[i], objects[j]);
        if (m) out.set_map(k, i, j, *m);
      }
    }
  }
  return out;
}

Semicategory change_basis(const Semicategory& c, const std::vector<Matrix>& p) {
  const std::size_t n = c.num_objects();
  std::vector<std::size_t> ranks;
  std::vector<Matrix> inv;
  for (Obj y = 0; y < n; ++y) {
    for (Obj x = 0; x < n; ++x) {
      ranks.push_back(c.rank(y, x));
      auto i = p.at(y * n + x).inverse();
      if (!i) throw std::invalid_argument("change of basis is singular");
      inv.push_back(*i);
    }
  }
  Semicategory out(c.field(), c.object_names(), ranks);
  for (Obj z = 0; z < n; ++z) {
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        for (std::size_t i = 0; i < c.rank(z, y); ++i) {
          for (std::size_t j = 0; j < c.rank(y, x); ++j) {
            Vector v = c.compose(z, y, x, inv[z * n + y].column(i), inv[y * n + x].column(j));
            out.set_basis_product(z, y, x, i, j, p[z * n + x].apply(v));
          }
        }
      }
    }
  }
  return out;
}

PartialCatAction change_basis(const PartialCatAction& a, const std::vector<Matrix>& p) {
  const std::size_t n = a.num_objects();
  PartialCatAction out(a.object_action(), change_basis(a.semicategory(), p));
  const FiniteGroupoid& G = a.groupoid();
  for (Mor g = 0; g < G.size(); ++g) {
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        out.set_ideal(g, y, x, image(p[y * n + x], a.ideal(g).at(y, x)));
        const Matrix* m = a.map(g, y, x);
        if (!m) continue;
        Obj gy = a.move(g, y), gx = a.move(g, x);
        out.set_map(g, y, x, p[gy * n + gx] * *m * *p[y * n + x].inverse());
      }
    }
  }
  return out;
}

}  // namespace pgact
