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

#include "pgact/semicategory.hpp"

#include <stdexcept>

namespace pgact {

Semicategory::Semicategory(Field f, std::vector<std::string> objects, std::vector<std::size_t> ranks)
    : field_(f), objects_(std::move(objects)), ranks_(std::move(ranks)) {
  const std::size_t n = objects_.size();
  if (ranks_.size() != n * n) throw std::invalid_argument("semicategory needs one rank per object pair");
  labels_.resize(n * n);
  for (Obj y = 0; y < n; ++y) {
    for (Obj x = 0; x < n; ++x) {
      auto& l = labels_[y * n + x];
      for (std::size_t i = 0; i < rank(y, x); ++i) l.push_back("e" + std::to_string(i + 1));
    }
  }
  products_.resize(n * n * n);
  for (Obj z = 0; z < n; ++z) {
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        products_[table(z, y, x)].assign(rank(z, y) * rank(y, x), zero_vector(field_, rank(z, x)));
      }
    }
  }
}

std::optional<Obj> Semicategory::find_object(const std::string& name) const {
  for (Obj x = 0; x < objects_.size(); ++x) {
    if (objects_[x] == name) return x;
  }
  return std::nullopt;
}

void Semicategory::set_labels(Obj y, Obj x, std::vector<std::string> labels) {
  if (labels.size() != rank(y, x)) throw std::invalid_argument("label count differs from hom rank");
  labels_.at(y * num_objects() + x) = std::move(labels);
}

const Vector& Semicategory::basis_product(Obj z, Obj y, Obj x, std::size_t i, std::size_t j) const {
  return products_.at(table(z, y, x)).at(i * rank(y, x) + j);
}

void Semicategory::set_basis_product(Obj z, Obj y, Obj x, std::size_t i, std::size_t j, Vector v) {
  if (i >= rank(z, y) || j >= rank(y, x)) throw std::out_of_range("basis index out of range");
  if (v.size() != rank(z, x)) {
    throw std::invalid_argument("product of " + objects_[z] + "<-" + objects_[y] + " and " + objects_[y] + "<-" +
                                objects_[x] + " must have length " + std::to_string(rank(z, x)));
  }
  for (auto& s : v) s = field_.coerce(s);
  products_.at(table(z, y, x)).at(i * rank(y, x) + j) = std::move(v);
}

Vector Semicategory::compose(Obj z, Obj y, Obj x, const Vector& f, const Vector& g) const {
  if (f.size() != rank(z, y) || g.size() != rank(y, x)) throw std::invalid_argument("compose: operand length mismatch");
  Vector out = zero(z, x);
  const auto& tab = products_[table(z, y, x)];
  const std::size_t ry = rank(y, x);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; j < ry; ++j) {
      if (g[j].is_zero()) continue;
      axpy(out, f[i] * g[j], tab[i * ry + j]);
    }
  }
  return out;
}

Report Semicategory::validate() const {
  Report rep;
  Check& assoc = rep.clause("semicategory.associativity", "(e_i e_j) e_k = e_i (e_j e_k) on all basis triples");
  const std::size_t n = num_objects();
  for (Obj a = 0; a < n; ++a) {
    for (Obj b = 0; b < n; ++b) {
      for (Obj c = 0; c < n; ++c) {
        for (Obj d = 0; d < n; ++d) {
          for (std::size_t i = 0; i < rank(a, b); ++i) {
            for (std::size_t j = 0; j < rank(b, c); ++j) {
              const Vector& ij = basis_product(a, b, c, i, j);
              for (std::size_t k = 0; k < rank(c, d); ++k) {
                const Vector& jk = basis_product(b, c, d, j, k);
                Vector left = zero(a, d), right = zero(a, d);
                for (std::size_t m = 0; m < ij.size(); ++m) {
                  if (!ij[m].is_zero()) axpy(left, ij[m], basis_product(a, c, d, m, k));
                }
                for (std::size_t m = 0; m < jk.size(); ++m) {
                  if (!jk[m].is_zero()) axpy(right, jk[m], basis_product(a, b, d, i, m));
                }
                assoc.expect(left == right, [&] {
                  return objects_[a] + "<-" + objects_[b] + "<-" + objects_[c] + "<-" + objects_[d] + " on (" +
                         labels(a, b)[i] + ", " + labels(b, c)[j] + ", " + labels(c, d)[k] + "): " +
                         to_string(left) + " vs " + to_string(right);
                });
              }
            }
          }
        }
      }
    }
  }
  return rep;
}

bool operator==(const Semicategory& a, const Semicategory& b) {
  return a.field_ == b.field_ && a.objects_ == b.objects_ && a.ranks_ == b.ranks_ && a.products_ == b.products_;
}

HomFamily HomFamily::zero(const Semicategory& c) {
  HomFamily h;
  h.n_ = c.num_objects();
  for (Obj y = 0; y < h.n_; ++y) {
    for (Obj x = 0; x < h.n_; ++x) h.parts_.push_back(Submodule::zero(c.field(), c.rank(y, x)));
  }
  return h;
}

HomFamily HomFamily::full(const Semicategory& c) {
  HomFamily h;
  h.n_ = c.num_objects();
  for (Obj y = 0; y < h.n_; ++y) {
    for (Obj x = 0; x < h.n_; ++x) h.parts_.push_back(Submodule::full(c.field(), c.rank(y, x)));
  }
  return h;
}

std::vector<Obj> HomFamily::support() const {
  std::vector<Obj> out;
  for (Obj x = 0; x < n_; ++x) {
    bool used = false;
    for (Obj y = 0; y < n_ && !used; ++y) used = !at(y, x).is_zero() || !at(x, y).is_zero();
    if (used) out.push_back(x);
  }
  return out;
}

std::size_t HomFamily::total_dim() const {
  std::size_t s = 0;
  for (const auto& p : parts_) s += p.dim();
  return s;
}

HomFamily intersect(const HomFamily& a, const HomFamily& b) {
  if (a.num_objects() != b.num_objects()) throw std::invalid_argument("hom families over different object sets");
  HomFamily r = a;
  for (Obj y = 0; y < a.num_objects(); ++y) {
    for (Obj x = 0; x < a.num_objects(); ++x) r.at(y, x) = intersect(a.at(y, x), b.at(y, x));
  }
  return r;
}

bool is_subfamily(const HomFamily& a, const HomFamily& b) {
  if (a.num_objects() != b.num_objects()) return false;
  for (Obj y = 0; y < a.num_objects(); ++y) {
    for (Obj x = 0; x < a.num_objects(); ++x) {
      if (!a.at(y, x).is_subset_of(b.at(y, x))) return false;
    }
  }
  return true;
}

ObjectSet all_objects(std::size_t n) { return ObjectSet(n, true); }

void check_absorbs(Check& check, const Semicategory& c, const HomFamily& inner, const HomFamily& outer,
                   const ObjectSet& within) {
  const std::size_t n = c.num_objects();
  auto nm = [&](Obj o) { return c.object_name(o); };
  for (Obj y = 0; y < n; ++y) {
    for (Obj x = 0; x < n; ++x) {
      if (!within[y] || !within[x]) continue;
      check.expect(inner.at(y, x).is_subset_of(outer.at(y, x)),
                   [&] { return "component at (" + nm(y) + "," + nm(x) + ") is not contained in the outer family"; });
    }
  }
  for (Obj z = 0; z < n; ++z) {
    if (!within[z]) continue;
    for (Obj y = 0; y < n; ++y) {
      if (!within[y]) continue;
      for (Obj x = 0; x < n; ++x) {
        if (!within[x]) continue;
        const Submodule& target = inner.at(z, x);
        for (const auto& a : outer.at(z, y).basis()) {
          for (const auto& b : inner.at(y, x).basis()) {
            Vector p = c.compose(z, y, x, a, b);
            check.expect(target.contains(p), [&] {
              return "outer " + to_string(a) + " at (" + nm(z) + "," + nm(y) + ") times " + to_string(b) + " at (" +
                     nm(y) + "," + nm(x) + ") = " + to_string(p) + " leaves the family at (" + nm(z) + "," + nm(x) + ")";
            });
          }
        }
        for (const auto& a : inner.at(z, y).basis()) {
          for (const auto& b : outer.at(y, x).basis()) {
            Vector p = c.compose(z, y, x, a, b);
            check.expect(target.contains(p), [&] {
              return to_string(a) + " at (" + nm(z) + "," + nm(y) + ") times outer " + to_string(b) + " at (" + nm(y) +
                     "," + nm(x) + ") = " + to_string(p) + " leaves the family at (" + nm(z) + "," + nm(x) + ")";
            });
          }
        }
      }
    }
  }
}

void check_supported_on(Check& check, const Semicategory& c, const HomFamily& family, const ObjectSet& within) {
  for (Obj y = 0; y < c.num_objects(); ++y) {
    for (Obj x = 0; x < c.num_objects(); ++x) {
      if (within[y] && within[x]) continue;
      check.expect(family.at(y, x).is_zero(), [&] {
        return "nonzero component at (" + c.object_name(y) + "," + c.object_name(x) + ") outside the object domain";
      });
    }
  }
}

Report check_ideal(const Semicategory& c, const HomFamily& family, const ObjectSet* within) {
  Report rep;
  ObjectSet all = all_objects(c.num_objects());
  Check& ch = rep.clause("ideal.absorbs", "closed under composition with arbitrary morphisms on both sides");
  check_absorbs(ch, c, family, HomFamily::full(c), within ? *within : all);
  return rep;
}

LocalIdentity find_local_identity(const Semicategory& c, const HomFamily& ideal, Obj x, bool two_sided) {
  const Field& f = c.field();
  const Submodule& home = ideal.at(x, x);
  const std::size_t k = home.dim();
  std::vector<Vector> rows;
  Vector rhs;
  for (Obj y = 0; y < c.num_objects(); ++y) {
    // e f = f for f in _xI_y
    for (const auto& fv : ideal.at(x, y).basis()) {
      std::vector<Vector> cols;
      for (const auto& b : home.basis()) cols.push_back(c.compose(x, x, y, b, fv));
      for (std::size_t m = 0; m < fv.size(); ++m) {
        Vector row;
        for (std::size_t j = 0; j < k; ++j) row.push_back(cols[j][m]);
        rows.push_back(std::move(row));
        rhs.push_back(fv[m]);
      }
    }
    if (!two_sided) continue;
    // f e = f for f in _yI_x
    for (const auto& fv : ideal.at(y, x).basis()) {
      std::vector<Vector> cols;
      for (const auto& b : home.basis()) cols.push_back(c.compose(y, x, x, fv, b));
      for (std::size_t m = 0; m < fv.size(); ++m) {
        Vector row;
        for (std::size_t j = 0; j < k; ++j) row.push_back(cols[j][m]);
        rows.push_back(std::move(row));
        rhs.push_back(fv[m]);
      }
    }
  }
  LocalIdentity li;
  Matrix m = Matrix::from_rows(f, k, rows);
  auto sol = solve(m, rhs);
  if (!sol) {
    li.failure = "no element of the component at (" + c.object_name(x) + "," + c.object_name(x) +
                 ") acts as identity on the family";
    return li;
  }
  li.exists = true;
  li.element = home.combine(*sol);
  li.freedom = kernel(m).dim();
  return li;
}

CategoryCheck check_category(const Semicategory& c) {
  CategoryCheck out;
  out.is_category = true;
  Check& ch = out.report.clause("category.identities", "every object has a two-sided identity");
  HomFamily all = HomFamily::full(c);
  for (Obj x = 0; x < c.num_objects(); ++x) {
    LocalIdentity li = find_local_identity(c, all, x);
    ch.expect(li.exists, [&] { return li.failure; });
    if (li.exists) {
      out.identities.emplace_back(li.element);
    } else {
      out.identities.emplace_back(std::nullopt);
      out.is_category = false;
    }
  }
  return out;
}

bool is_identity_at(const Semicategory& c, Obj x, const Vector& candidate, std::string* witness) {
  for (Obj y = 0; y < c.num_objects(); ++y) {
    for (std::size_t i = 0; i < c.rank(x, y); ++i) {
      Vector f = c.unit(x, y, i);
      if (c.compose(x, x, y, candidate, f) != f) {
        if (witness) *witness = "fails on the left against " + c.labels(x, y)[i] + " at (" + c.object_name(x) + "," + c.object_name(y) + ")";
        return false;
      }
    }
    for (std::size_t i = 0; i < c.rank(y, x); ++i) {
      Vector f = c.unit(y, x, i);
      if (c.compose(y, x, x, f, candidate) != f) {
        if (witness) *witness = "fails on the right against " + c.labels(y, x)[i] + " at (" + c.object_name(y) + "," + c.object_name(x) + ")";
        return false;
      }
    }
  }
  return true;
}

void check_semifunctor(Check& check, const Semicategory& src, const Semicategory& dst, const Semifunctor& f,
                       const HomFamily* domain, const ObjectSet* within) {
  const std::size_t n = src.num_objects();
  auto in = [&](Obj o) { return within == nullptr || (*within)[o]; };
  auto basis = [&](Obj y, Obj x) {
    if (domain) return domain->at(y, x).basis();
    std::vector<Vector> b;
    for (std::size_t i = 0; i < src.rank(y, x); ++i) b.push_back(src.unit(y, x, i));
    return b;
  };
  for (Obj z = 0; z < n; ++z) {
    if (!in(z)) continue;
    for (Obj y = 0; y < n; ++y) {
      if (!in(y)) continue;
      auto bzy = basis(z, y);
      if (bzy.empty()) continue;
      for (Obj x = 0; x < n; ++x) {
        if (!in(x)) continue;
        auto byx = basis(y, x);
        for (const auto& a : bzy) {
          for (const auto& b : byx) {
            Vector lhs = f.at(z, x).apply(src.compose(z, y, x, a, b));
            Vector rhs = dst.compose(f.objects[z], f.objects[y], f.objects[x], f.at(z, y).apply(a), f.at(y, x).apply(b));
            check.expect(lhs == rhs, [&] {
              return "composition at " + src.object_name(z) + "<-" + src.object_name(y) + "<-" + src.object_name(x) +
                     " on " + to_string(a) + ", " + to_string(b) + " maps to " + to_string(lhs) + " instead of " + to_string(rhs);
            });
          }
        }
      }
    }
  }
}

Semicategory restrict_to(const Semicategory& c, const HomFamily& family, const std::vector<Obj>& objects) {
  const std::size_t m = objects.size();
  std::vector<std::string> names;
  std::vector<std::size_t> ranks;
  for (Obj a : objects) names.push_back(c.object_name(a));
  for (Obj a : objects) {
    for (Obj b : objects) ranks.push_back(family.at(a, b).dim());
  }
  Semicategory out(c.field(), names, ranks);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const Submodule& s = family.at(objects[a], objects[b]);
      if (s.is_full()) out.set_labels(a, b, c.labels(objects[a], objects[b]));
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const auto& left = family.at(objects[a], objects[b]).basis();
      if (left.empty()) continue;
      for (std::size_t d = 0; d < m; ++d) {
        const auto& right = family.at(objects[b], objects[d]).basis();
        const Submodule& target = family.at(objects[a], objects[d]);
        for (std::size_t i = 0; i < left.size(); ++i) {
          for (std::size_t j = 0; j < right.size(); ++j) {
            Vector p = c.compose(objects[a], objects[b], objects[d], left[i], right[j]);
            auto coords = target.coordinates(p);
            if (!coords) {
              throw std::invalid_argument("family is not closed under composition at (" + c.object_name(objects[a]) +
                                          "," + c.object_name(objects[d]) + ")");
            }
            out.set_basis_product(a, b, d, i, j, *coords);
          }
        }
      }
    }
  }
  return out;
}

Semicategory full_subsemicategory(const Semicategory& c, const std::vector<Obj>& objects) {
  return restrict_to(c, HomFamily::full(c), objects);
}

}  // namespace pgact
