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

#include "pgact/graded.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "pgact/skew.hpp"

namespace pgact {

GradedSemicategory::GradedSemicategory(Semicategory base, FiniteGroupoid groupoid)
    : base_(std::move(base)), groupoid_(std::move(groupoid)) {
  const std::size_t n = base_.num_objects();
  degrees_.resize(n * n);
  for (Obj y = 0; y < n; ++y) {
    for (Obj x = 0; x < n; ++x) degrees_[y * n + x].assign(base_.rank(y, x), kNoMor);
  }
}

std::vector<std::size_t> GradedSemicategory::component(Obj y, Obj x, Mor g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < base_.rank(y, x); ++i) {
    if (degree(y, x, i) == g) out.push_back(i);
  }
  return out;
}

Report validate_grading(const GradedSemicategory& b) {
  Report r;
  const Semicategory& B = b.base();
  const FiniteGroupoid& G = b.groupoid();
  const std::size_t n = B.num_objects();
  Check& assigned = r.clause("grading.assigned", "every basis vector has a degree");
  for (Obj y = 0; y < n; ++y) {
    for (Obj x = 0; x < n; ++x) {
      for (std::size_t i = 0; i < B.rank(y, x); ++i) {
        assigned.expect(b.degree(y, x, i) < G.size(), [&] {
          return B.labels(y, x)[i] + " at " + B.object_name(y) + "<-" + B.object_name(x);
        });
      }
    }
  }
  if (!assigned.passed()) return r;
  Check& closure = r.clause("grading.closure", "products of composable degrees t, s land in degree ts");
  Check& zero = r.clause("grading.zero", "products of non-composable degrees vanish");
  for (Obj z = 0; z < n; ++z) {
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        for (std::size_t i = 0; i < B.rank(z, y); ++i) {
          for (std::size_t j = 0; j < B.rank(y, x); ++j) {
            const Vector& v = B.basis_product(z, y, x, i, j);
            Mor t = b.degree(z, y, i), s = b.degree(y, x, j);
            Mor ts = G.compose(t, s);
            auto witness = [&] {
              return B.labels(z, y)[i] + " * " + B.labels(y, x)[j] + " at " + B.object_name(z) + "<-" +
                     B.object_name(y) + "<-" + B.object_name(x) + " = " + to_string(v);
            };
            if (ts == kNoMor) {
              zero.expect(is_zero(v), witness);
              continue;
            }
            bool ok = true;
            for (std::size_t k = 0; k < v.size(); ++k) ok = ok && (v[k].is_zero() || b.degree(z, x, k) == ts);
            closure.expect(ok, witness);
          }
        }
      }
    }
  }
  return r;
}

std::optional<Obj> GradedConstruction::find(Obj x, Mor g) const {
  for (Obj k = 0; k < objects.size(); ++k) {
    if (objects[k].first == x && objects[k].second == g) return k;
  }
  return std::nullopt;
}

namespace {

using HomRule = std::function<std::vector<std::size_t>(Obj y, Mor t, Obj x, Mor s)>;

GradedConstruction assemble(const GradedSemicategory& b, std::vector<std::pair<Obj, Mor>> objects,
                            const HomRule& rule, const std::string& tag) {
  const Semicategory& B = b.base();
  const FiniteGroupoid& G = b.groupoid();
  GradedConstruction out;
  out.objects = std::move(objects);
  const std::size_t m = out.objects.size();
  std::vector<std::string> names;
  for (const auto& [x, g] : out.objects) names.push_back("(" + B.object_name(x) + "," + G.name(g) + ")");
  std::vector<std::size_t> ranks;
  for (Obj Y = 0; Y < m; ++Y) {
    for (Obj X = 0; X < m; ++X) {
      const auto& [y, t] = out.objects[Y];
      const auto& [x, s] = out.objects[X];
      out.sources.push_back(rule(y, t, x, s));
      ranks.push_back(out.sources.back().size());
    }
  }
  out.cat = Semicategory(B.field(), names, ranks);
  for (Obj Y = 0; Y < m; ++Y) {
    for (Obj X = 0; X < m; ++X) {
      std::vector<std::string> labels;
      for (std::size_t i : out.source(Y, X)) labels.push_back(B.labels(out.objects[Y].first, out.objects[X].first)[i]);
      out.cat.set_labels(Y, X, labels);
    }
  }
  Check& closed = out.report.clause(tag + ".closed", "products stay in the component of the composed degree");
  for (Obj Z = 0; Z < m; ++Z) {
    for (Obj Y = 0; Y < m; ++Y) {
      for (Obj X = 0; X < m; ++X) {
        const auto& left = out.source(Z, Y);
        const auto& right = out.source(Y, X);
        const auto& target = out.source(Z, X);
        Obj z = out.objects[Z].first, y = out.objects[Y].first, x = out.objects[X].first;
        for (std::size_t i = 0; i < left.size(); ++i) {
          for (std::size_t j = 0; j < right.size(); ++j) {
            Vector v = B.basis_product(z, y, x, left[i], right[j]);
            Vector w = zero_vector(B.field(), target.size());
            for (std::size_t k = 0; k < target.size(); ++k) {
              w[k] = v[target[k]];
              v[target[k]] = 0;
            }
            closed.expect(is_zero(v), [&] {
              return names[Z] + "<-" + names[Y] + "<-" + names[X] + ": " + B.labels(z, y)[left[i]] + " * " +
                     B.labels(y, x)[right[j]];
            });
            out.cat.set_basis_product(Z, Y, X, i, j, std::move(w));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

GradedConstruction build_tensor(const GradedSemicategory& b) {
  const FiniteGroupoid& G = b.groupoid();
  std::vector<std::pair<Obj, Mor>> objects;
  for (Obj x = 0; x < b.base().num_objects(); ++x) {
    for (Mor e : G.identities()) objects.emplace_back(x, e);
  }
  return assemble(
      b, objects,
      [&](Obj y, Mor f, Obj x, Mor e) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < b.base().rank(y, x); ++i) {
          Mor g = b.degree(y, x, i);
          if (g < G.size() && G.d(g) == e && G.r(g) == f) out.push_back(i);
        }
        return out;
      },
      "tensor");
}

GradedConstruction build_smash(const GradedSemicategory& b) {
  const FiniteGroupoid& G = b.groupoid();
  std::vector<Mor> order = G.identities();
  for (Mor g = 0; g < G.size(); ++g) {
    if (!G.is_identity(g)) order.push_back(g);
  }
  std::vector<std::pair<Obj, Mor>> objects;
  for (Obj x = 0; x < b.base().num_objects(); ++x) {
    for (Mor s : order) objects.emplace_back(x, s);
  }
  return assemble(
      b, objects,
      [&](Obj y, Mor t, Obj x, Mor s) {
        if (G.r(t) != G.r(s)) return std::vector<std::size_t>{};
        return b.component(y, x, G.compose(G.inv(t), s));
      },
      "smash");
}

Report check_homogeneous_identities(const GradedSemicategory& b) {
  Report r;
  const Semicategory& B = b.base();
  const FiniteGroupoid& G = b.groupoid();
  CategoryCheck base = check_category(B);
  Check& pre = r.clause("identities.precondition", "B is a category");
  pre.expect(base.is_category, "some object of B has no identity");
  if (!pre.passed()) return r;

  Check& support = r.clause("identities.homogeneous", "identities of B live in identity degrees");
  for (Obj x = 0; x < B.num_objects(); ++x) {
    const Vector& id = *base.identities[x];
    for (std::size_t i = 0; i < id.size(); ++i) {
      support.expect(id[i].is_zero() || (b.degree(x, x, i) < G.size() && G.is_identity(b.degree(x, x, i))),
                     [&] { return "identity of " + B.object_name(x) + " uses " + B.labels(x, x)[i]; });
    }
  }

  auto component_at = [&](const GradedConstruction& c, Obj k, Mor e) {
    Obj x = c.objects[k].first;
    const auto& src = c.source(k, k);
    Vector v = zero_vector(B.field(), src.size());
    for (std::size_t p = 0; p < src.size(); ++p) {
      if (b.degree(x, x, src[p]) == e) v[p] = (*base.identities[x])[src[p]];
    }
    return v;
  };
  auto verify = [&](const GradedConstruction& c, const std::string& tag, const std::string& what,
                    const std::function<Mor(Mor)>& degree_of) {
    r.merge(c.report);
    Check& two_sided = r.clause("identities." + tag, what);
    CategoryCheck direct = check_category(c.cat);
    Check& agree = r.clause("identities." + tag + "-direct", "the components agree with a direct identity solve");
    for (Obj k = 0; k < c.objects.size(); ++k) {
      Vector v = component_at(c, k, degree_of(c.objects[k].second));
      std::string why;
      two_sided.expect(is_identity_at(c.cat, k, v, &why), [&] { return c.cat.object_name(k) + ": " + why; });
      agree.expect(direct.identities[k].has_value() && *direct.identities[k] == v,
                   [&] { return c.cat.object_name(k); });
    }
  };
  verify(build_tensor(b), "tensor", "1^e is a two-sided identity at (x, e)", [](Mor e) { return e; });
  verify(build_smash(b), "smash", "1^d(s) is a two-sided identity at (x, s)", [&](Mor s) { return G.d(s); });
  return r;
}

PartialCatAction canonical_smash_action(const GradedSemicategory& b, const GradedConstruction& smash) {
  const FiniteGroupoid& G = b.groupoid();
  const Field& F = b.base().field();
  const std::size_t m = smash.objects.size();
  auto inside = [&](Mor g) {
    std::vector<Obj> out;
    for (Obj k = 0; k < m; ++k) {
      if (G.r(smash.objects[k].second) == G.r(g)) out.push_back(k);
    }
    return out;
  };
  PartialSetAction objects(G, smash.cat.object_names());
  for (Mor g = 0; g < G.size(); ++g) {
    objects.set_domain(g, inside(g));
    for (Obj k : inside(G.inv(g))) {
      const auto& [x, s] = smash.objects[k];
      objects.set_map(g, k, *smash.find(x, G.compose(g, s)));
    }
  }
  PartialCatAction a(objects, smash.cat);
  for (Mor g = 0; g < G.size(); ++g) {
    HomFamily family = HomFamily::zero(smash.cat);
    for (Obj Y : inside(g)) {
      for (Obj X : inside(g)) family.at(Y, X) = Submodule::full(F, smash.cat.rank(Y, X));
    }
    a.set_ideal(g, family);
    for (Obj Y : inside(G.inv(g))) {
      for (Obj X : inside(G.inv(g))) a.set_map(g, Y, X, Matrix::identity(F, smash.cat.rank(Y, X)));
    }
  }
  return a;
}

CoveringCheck check_galois_covering(const GradedSemicategory& b) {
  CoveringCheck out;
  const FiniteGroupoid& G = b.groupoid();
  const Field& F = b.base().field();
  GradedConstruction S = build_smash(b);
  PartialCatAction a = canonical_smash_action(b, S);
  out.tensor = build_tensor(b);
  out.quotient = build_quotient(a);
  const GradedConstruction& T = out.tensor;
  const QuotientSemicategory& Q = out.quotient;
  out.report.merge(S.report);
  out.report.merge(T.report);
  out.report.merge(validate_cat_action(a), "action.");
  Check& global = out.report.clause("covering.global", "the canonical action is global");
  global.expect(check_global(a).by_domains, "some I^g differs from I^r(g)");
  out.report.merge(Q.report);
  if (Q.cat.num_objects() == 0 && !S.objects.empty()) return out;

  const std::size_t k = Q.orbits.classes.size();
  Check& objs = out.report.clause("covering.objects", "the class of (x, s) goes to (x, d(s)) bijectively");
  out.objects.assign(k, kNoObj);
  for (std::size_t c = 0; c < k; ++c) {
    for (Obj member : Q.orbits.classes[c]) {
      const auto& [x, s] = S.objects[member];
      Obj t = *T.find(x, G.d(s));
      if (out.objects[c] == kNoObj) out.objects[c] = t;
      objs.expect(out.objects[c] == t, [&] { return "class " + Q.cat.object_name(c) + " meets two tensor objects"; });
    }
  }
  std::set<Obj> hit(out.objects.begin(), out.objects.end());
  objs.expect(hit.size() == k && k == T.objects.size(), "object map is not a bijection");
  if (!objs.passed()) return out;
  std::vector<std::size_t> class_of(T.objects.size());
  for (std::size_t c = 0; c < k; ++c) class_of[out.objects[c]] = c;

  Check& inv = out.report.clause("covering.invertible", "every hom map is invertible");
  out.homs.assign(k * k, Matrix());
  for (Obj Y = 0; Y < T.objects.size(); ++Y) {
    for (Obj X = 0; X < T.objects.size(); ++X) {
      const std::size_t tau = class_of[Y], rho = class_of[X];
      const Quotient& q = Q.homs[tau * k + rho];
      const auto& [y, bb] = T.objects[Y];
      const auto& [x, aa] = T.objects[X];
      const auto& src = T.source(Y, X);
      Matrix m(F, q.dim(), src.size());
      for (std::size_t i = 0; i < src.size(); ++i) {
        Mor l = b.degree(y, x, src[i]);
        Obj sy = *S.find(y, bb), sx = *S.find(x, l);
        const auto& smash_src = S.source(sy, sx);
        std::size_t p = std::find(smash_src.begin(), smash_src.end(), src[i]) - smash_src.begin();
        Vector amb = zero_vector(F, Q.ambient_dims[tau * k + rho]);
        for (const auto& blk : Q.blocks[tau * k + rho]) {
          if (blk.e == bb && blk.y == sy && blk.x == sx) amb[blk.offset + p] = 1;
        }
        inv.expect(!is_zero(amb), [&] { return "no ambient copy for " + T.cat.object_name(Y) + "<-" + T.cat.object_name(X); });
        m.set_column(i, q.projection.apply(amb));
      }
      inv.expect(m.rows() == m.cols() && m.inverse().has_value(),
                 [&] { return T.cat.object_name(Y) + "<-" + T.cat.object_name(X); });
      out.homs[tau * k + rho] = std::move(m);
    }
  }
  Check& mult = out.report.clause("covering.multiplicative", "hom maps carry tensor products to quotient products");
  for (Obj Z = 0; Z < T.objects.size(); ++Z) {
    for (Obj Y = 0; Y < T.objects.size(); ++Y) {
      for (Obj X = 0; X < T.objects.size(); ++X) {
        const std::size_t cz = class_of[Z], cy = class_of[Y], cx = class_of[X];
        const Matrix& mzy = out.homs[cz * k + cy];
        const Matrix& myx = out.homs[cy * k + cx];
        const Matrix& mzx = out.homs[cz * k + cx];
        for (std::size_t i = 0; i < T.cat.rank(Z, Y); ++i) {
          for (std::size_t j = 0; j < T.cat.rank(Y, X); ++j) {
            Vector lhs = mzx.apply(T.cat.basis_product(Z, Y, X, i, j));
            Vector rhs = Q.cat.compose(cz, cy, cx, mzy.column(i), myx.column(j));
            mult.expect(lhs == rhs, [&] {
              return T.cat.object_name(Z) + "<-" + T.cat.object_name(Y) + "<-" + T.cat.object_name(X) + " basis " +
                     std::to_string(i) + "," + std::to_string(j);
            });
          }
        }
      }
    }
  }
  out.covering = out.report.ok();
  return out;
}

SkewEquivalenceCheck check_skew_equivalence(const GradedSemicategory& b) {
  SkewEquivalenceCheck out;
  const FiniteGroupoid& G = b.groupoid();
  const Field& F = b.base().field();
  GradedConstruction S = build_smash(b);
  PartialCatAction a = canonical_smash_action(b, S);
  SkewSemicategory sk = build_skew(a);
  GradedConstruction T = build_tensor(b);
  out.report.merge(S.report);
  out.report.merge(T.report);
  out.report.merge(sk.report);
  const std::size_t m = S.objects.size();

  Semifunctor fn;
  for (const auto& [x, s] : S.objects) fn.objects.push_back(*T.find(x, G.d(s)));
  Check& homs = out.report.clause("equivalence.hom-map", "each summand basis vector has a tensor counterpart");
  for (Obj Y = 0; Y < m; ++Y) {
    for (Obj X = 0; X < m; ++X) {
      const auto& dst = T.source(fn.objects[Y], fn.objects[X]);
      Matrix mat(F, dst.size(), sk.cat.rank(Y, X));
      for (const auto& sm : sk.at(Y, X)) {
        const auto& src = S.source(Y, sm.target);
        for (std::size_t p = 0; p < sm.dim; ++p) {
          auto it = std::find(dst.begin(), dst.end(), src[p]);
          if (homs.expect(it != dst.end(), [&] { return G.name(sm.g) + " summand at " + S.cat.object_name(Y) + "<-" + S.cat.object_name(X); })) {
            mat.at(it - dst.begin(), sm.offset + p) = 1;
          }
        }
      }
      fn.homs.push_back(std::move(mat));
    }
  }
  Check& functor = out.report.clause("equivalence.functor", "F preserves composition");
  check_semifunctor(functor, sk.cat, T.cat, fn);
  out.functor = homs.passed() && functor.passed();

  Check& ff = out.report.clause("equivalence.fully-faithful", "every hom matrix is invertible");
  for (Obj Y = 0; Y < m; ++Y) {
    for (Obj X = 0; X < m; ++X) {
      const Matrix& mat = fn.at(Y, X);
      ff.expect(mat.rows() == mat.cols() && mat.inverse().has_value(),
                [&] { return S.cat.object_name(Y) + "<-" + S.cat.object_name(X); });
    }
  }
  out.fully_faithful = ff.passed();

  Check& onto = out.report.clause("equivalence.surjective", "every tensor object is an image");
  std::set<Obj> hit(fn.objects.begin(), fn.objects.end());
  for (Obj t = 0; t < T.objects.size(); ++t) {
    onto.expect(hit.count(t) > 0, [&] { return T.cat.object_name(t); });
  }
  out.surjective = onto.passed();

  CategoryCheck cs = check_category(sk.cat), ct = check_category(T.cat);
  if (cs.is_category && ct.is_category) {
    Check& ids = out.report.clause("equivalence.identities", "F carries identities to identities");
    for (Obj Y = 0; Y < m; ++Y) {
      ids.expect(fn.at(Y, Y).apply(*cs.identities[Y]) == *ct.identities[fn.objects[Y]],
                 [&] { return S.cat.object_name(Y); });
    }
  } else {
    out.report.note("identities not compared: the skew product or the tensor construction is not a category");
  }
  return out;
}

}  // namespace pgact
