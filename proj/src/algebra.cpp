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

#include "pgact/algebra.hpp"

#include <map>
#include <stdexcept>

namespace pgact {

Algebra::Algebra(Field f, std::size_t n) : field_(f), n_(n) {
  for (std::size_t i = 0; i < n; ++i) labels_.push_back("b" + std::to_string(i + 1));
  products_.assign(n * n, zero_vector(field_, n));
}

void Algebra::set_labels(std::vector<std::string> labels) {
  if (labels.size() != n_) throw std::invalid_argument("label count differs from algebra rank");
  labels_ = std::move(labels);
}

void Algebra::set_product(std::size_t i, std::size_t j, Vector v) {
  if (i >= n_ || j >= n_) throw std::out_of_range("basis index out of range");
  if (v.size() != n_) throw std::invalid_argument("product must have length " + std::to_string(n_));
  for (auto& s : v) s = field_.coerce(s);
  products_[i * n_ + j] = std::move(v);
}

Vector Algebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != n_ || b.size() != n_) throw std::invalid_argument("multiply: operand length mismatch");
  Vector out = zero_vector(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (b[j].is_zero()) continue;
      axpy(out, a[i] * b[j], products_[i * n_ + j]);
    }
  }
  return out;
}

Matrix Algebra::right_multiplication(const Vector& a) const {
  Matrix m(field_, n_, n_);
  for (std::size_t j = 0; j < n_; ++j) m.set_column(j, multiply(unit_vector(field_, n_, j), a));
  return m;
}

Matrix Algebra::left_multiplication(const Vector& a) const {
  Matrix m(field_, n_, n_);
  for (std::size_t j = 0; j < n_; ++j) m.set_column(j, multiply(a, unit_vector(field_, n_, j)));
  return m;
}

Report Algebra::check_associative() const {
  Report rep;
  Check& ch = rep.clause("algebra.associativity", "(b_i b_j) b_k = b_i (b_j b_k) on all basis triples");
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        Vector lhs = multiply(products_[i * n_ + j], unit_vector(field_, n_, k));
        Vector rhs = multiply(unit_vector(field_, n_, i), products_[j * n_ + k]);
        ch.expect(lhs == rhs, [&] { return "(" + labels_[i] + "," + labels_[j] + "," + labels_[k] + ")"; });
      }
    }
  }
  return rep;
}

namespace {

// Solves for e with e b_j = b_j (and b_j e = b_j when two_sided) for all j.
// Homogenized with a last unknown t on the right-hand side; a solution exists
// iff some kernel vector has t != 0.
std::optional<Vector> solve_unit(const Algebra& a, bool two_sided) {
  const std::size_t n = a.rank();
  if (n == 0) return Vector{};
  const auto t = static_cast<std::uint32_t>(n);
  SparseReducer red(a.field(), n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t c = 0; c < n; ++c) {
      for (int side = 0; side < (two_sided ? 2 : 1); ++side) {
        SparseRow row;
        for (std::size_t i = 0; i < n; ++i) {
          const Scalar& v = side == 0 ? a.product(i, j)[c] : a.product(j, i)[c];
          if (!v.is_zero()) row.emplace_back(static_cast<std::uint32_t>(i), v);
        }
        if (c == j) row.emplace_back(t, -a.field().one());
        if (!row.empty()) red.add(std::move(row));
      }
    }
  }
  for (const auto& v : red.nullspace()) {
    if (v[n].is_zero()) continue;
    const Scalar inv = v[n].inverse();
    Vector e(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
    for (auto& x : e) x *= inv;
    return e;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Vector> Algebra::find_unit() const { return solve_unit(*this, true); }
std::optional<Vector> Algebra::find_left_unit() const { return solve_unit(*this, false); }

BlockAlgebra algebra_of(const Semicategory& c) {
  const std::size_t n = c.num_objects();
  BlockAlgebra out;
  std::size_t total = 0;
  for (std::size_t s = 0; s < n * n; ++s) {
    out.offsets.push_back(total);
    total += c.rank(s / n, s % n);
  }
  out.algebra = Algebra(c.field(), total);
  std::vector<std::string> labels;
  for (Obj y = 0; y < n; ++y) {
    for (Obj x = 0; x < n; ++x) {
      for (const auto& l : c.labels(y, x)) labels.push_back(c.object_name(y) + "<-" + c.object_name(x) + ":" + l);
    }
  }
  out.algebra.set_labels(std::move(labels));
  for (Obj z = 0; z < n; ++z) {
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        for (std::size_t i = 0; i < c.rank(z, y); ++i) {
          for (std::size_t j = 0; j < c.rank(y, x); ++j) {
            const Vector& p = c.basis_product(z, y, x, i, j);
            Vector v = zero_vector(c.field(), total);
            for (std::size_t k = 0; k < p.size(); ++k) v[out.offset(z * n + x) + k] = p[k];
            out.algebra.set_product(out.offset(z * n + y) + i, out.offset(y * n + x) + j, std::move(v));
          }
        }
      }
    }
  }
  return out;
}

Algebra ideal_algebra(const Semicategory& c, const HomFamily& ideal) {
  std::vector<Obj> objects;
  for (Obj x = 0; x < c.num_objects(); ++x) objects.push_back(x);
  return algebra_of(restrict_to(c, ideal, objects)).algebra;
}

namespace {

using Row = std::map<std::uint32_t, Scalar>;

// Most structure constants vanish; skipping them keeps row assembly cheap.
void accumulate(Row& row, std::uint32_t column, const Scalar& v) {
  if (!v.is_zero()) row[column] += v;
}

void push(SparseReducer& red, const Row& row) {
  SparseRow sr;
  for (const auto& [k, v] : row) {
    if (!v.is_zero()) sr.emplace_back(k, v);
  }
  if (!sr.empty()) red.add(std::move(sr));
}

}  // namespace

MultiplierSpace compute_multipliers(const Algebra& a) {
  const std::size_t n = a.rank();
  const Field& f = a.field();
  const auto R = [n](std::size_t c, std::size_t k) { return static_cast<std::uint32_t>(c * n + k); };
  const auto L = [n](std::size_t c, std::size_t k) { return static_cast<std::uint32_t>(n * n + c * n + k); };
  SparseReducer red(f, 2 * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t c = 0; c < n; ++c) {
        // (b_i b_j) R = b_i (b_j R)
        Row r1;
        for (std::size_t m = 0; m < n; ++m) accumulate(r1, R(c, m), a.product(i, j)[m]);
        for (std::size_t k = 0; k < n; ++k) accumulate(r1, R(k, j), -a.product(i, k)[c]);
        push(red, r1);
        // L (b_i b_j) = (L b_i) b_j
        Row r2;
        for (std::size_t m = 0; m < n; ++m) accumulate(r2, L(c, m), a.product(i, j)[m]);
        for (std::size_t k = 0; k < n; ++k) accumulate(r2, L(k, i), -a.product(k, j)[c]);
        push(red, r2);
        // (b_i R) b_j = b_i (L b_j)
        Row r3;
        for (std::size_t k = 0; k < n; ++k) {
          accumulate(r3, R(k, i), a.product(k, j)[c]);
          accumulate(r3, L(k, j), -a.product(i, k)[c]);
        }
        push(red, r3);
      }
    }
  }
  MultiplierSpace out;
  for (const auto& v : red.nullspace()) {
    Matrix rm(f, n, n), lm(f, n, n);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t k = 0; k < n; ++k) {
        rm.at(c, k) = v[R(c, k)];
        lm.at(c, k) = v[L(c, k)];
      }
    }
    out.basis.emplace_back(std::move(rm), std::move(lm));
  }
  return out;
}

bool MultiplierSpace::contains(const Algebra& a, const Matrix& r, const Matrix& l) const {
  const std::size_t n = a.rank();
  const Field& f = a.field();
  for (std::size_t i = 0; i < n; ++i) {
    Vector bi = unit_vector(f, n, i);
    for (std::size_t j = 0; j < n; ++j) {
      Vector bj = unit_vector(f, n, j);
      if (r.apply(a.product(i, j)) != a.multiply(bi, r.apply(bj))) return false;
      if (l.apply(a.product(i, j)) != a.multiply(l.apply(bi), bj)) return false;
      if (a.multiply(r.apply(bi), bj) != a.multiply(bi, l.apply(bj))) return false;
    }
  }
  return true;
}

namespace {

// Row-reduced basis of the span of a family of same-shape matrices.
std::vector<Matrix> matrix_span(const Field& f, std::size_t n, const std::vector<Matrix>& ms) {
  std::vector<Vector> flat;
  for (const auto& m : ms) {
    Vector v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) v.push_back(m.at(i, j));
    }
    flat.push_back(std::move(v));
  }
  std::vector<Matrix> out;
  const Submodule span = Submodule::span(f, n * n, flat);
  for (const auto& v : span.basis()) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
    }
    out.push_back(std::move(m));
  }
  return out;
}

// Nonzero entries of a square matrix, row by row.
class SparseSquare {
 public:
  explicit SparseSquare(const Matrix& m) : rows_(m.rows()) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!m.at(i, j).is_zero()) rows_[i].emplace_back(j, m.at(i, j));
      }
    }
  }
  std::size_t size() const { return rows_.size(); }
  const std::vector<std::pair<std::size_t, Scalar>>& row(std::size_t i) const { return rows_[i]; }

 private:
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows_;
};

// Whether a b = b a, accumulating a b - b a in acc (n * n zeros on entry and
// on exit).
bool commute(const SparseSquare& a, const SparseSquare& b, std::vector<Scalar>& acc,
             std::vector<std::size_t>& touched) {
  const std::size_t n = a.size();
  touched.clear();
  auto add = [&](const SparseSquare& x, const SparseSquare& y, bool negate) {
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [k, v] : x.row(i)) {
        for (const auto& [j, w] : y.row(k)) {
          Scalar& slot = acc[i * n + j];
          if (negate) {
            slot -= v * w;
          } else {
            slot += v * w;
          }
          touched.push_back(i * n + j);
        }
      }
    }
  };
  add(a, b, false);
  add(b, a, true);
  bool ok = true;
  for (std::size_t t : touched) {
    if (!acc[t].is_zero()) ok = false;
    acc[t] = Scalar();
  }
  return ok;
}

}  // namespace

LRCheck check_lr_associative(const Algebra& a, LRConvention convention) {
  LRCheck out;
  MultiplierSpace m = compute_multipliers(a);
  out.report.note("multiplier space has dimension " + std::to_string(m.dim()));
  if (convention == LRConvention::as_printed) {
    Check& ch = out.report.clause("lr.as-printed", "R' L = L' R for all multipliers (R, L), (R', L')");
    for (std::size_t p = 0; p < m.dim(); ++p) {
      const auto& [r, l] = m.basis[p];
      for (std::size_t q = 0; q < m.dim(); ++q) {
        const auto& [r2, l2] = m.basis[q];
        ch.expect(r2 * l == l2 * r, [&] {
          return "multipliers #" + std::to_string(p + 1) + " (R=" + r.to_string() + ", L=" + l.to_string() + ") and #" +
                 std::to_string(q + 1) + " (R=" + r2.to_string() + ", L=" + l2.to_string() + ")";
        });
      }
    }
    out.associative = ch.passed();
    return out;
  }
  // R' L = L R' is bilinear in (L, R'), so bases of the two spans suffice.
  Check& ch = out.report.clause("lr.commuting", "R' L = L R' for all multipliers (R, L), (R', L')");
  std::vector<Matrix> ls, rs;
  for (const auto& [r, l] : m.basis) {
    rs.push_back(r);
    ls.push_back(l);
  }
  ls = matrix_span(a.field(), a.rank(), ls);
  rs = matrix_span(a.field(), a.rank(), rs);
  std::vector<SparseSquare> sl, sr;
  for (const auto& l : ls) sl.emplace_back(l);
  for (const auto& r : rs) sr.emplace_back(r);
  std::vector<Scalar> acc(a.rank() * a.rank(), a.field().zero());
  std::vector<std::size_t> touched;
  for (std::size_t p = 0; p < ls.size(); ++p) {
    for (std::size_t q = 0; q < rs.size(); ++q) {
      ch.expect(commute(sl[p], sr[q], acc, touched),
                [&] { return "left part L=" + ls[p].to_string() + " and right part R'=" + rs[q].to_string(); });
    }
  }
  out.associative = ch.passed();
  return out;
}

SUnitalCheck check_s_unital(const Algebra& a) {
  SUnitalCheck out;
  const std::size_t n = a.rank();
  Check& unit = out.report.clause("s-unital.left-unit", "some e satisfies e x = x for every x");
  out.left_unit = a.find_left_unit();
  unit.expect(out.left_unit.has_value(), "no left identity");
  Check& basis = out.report.clause("s-unital.basis", "each basis vector x lies in A x");
  if (out.left_unit) {
    // x = e x certifies x in A x.
    for (std::size_t j = 0; j < n; ++j) {
      const Vector bj = unit_vector(a.field(), n, j);
      basis.expect(a.multiply(*out.left_unit, bj) == bj, [&] { return "e " + a.labels()[j] + " differs from " + a.labels()[j]; });
    }
    out.s_unital = unit.passed() && basis.passed();
    return out;
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(a.product(i, j));
    Matrix m = Matrix::from_columns(a.field(), n, cols);
    Vector bj = unit_vector(a.field(), n, j);
    basis.expect(solve(m, bj).has_value(), [&] { return a.labels()[j] + " is not in A " + a.labels()[j]; });
  }
  out.s_unital = unit.passed();
  return out;
}

Report check_left_local_units(const Semicategory& c) {
  Report rep;
  Check& ch = rep.clause("s-unital.left-local-units", "every _uC_u has a left identity for all of _uC_-");
  HomFamily all = HomFamily::full(c);
  for (Obj u = 0; u < c.num_objects(); ++u) {
    LocalIdentity li = find_local_identity(c, all, u, false);
    ch.expect(li.exists, [&] { return c.object_name(u) + ": " + li.failure; });
  }
  return rep;
}

namespace {

bool ideal_of(const Algebra& a, const Submodule& inner, const Submodule& outer) {
  for (const auto& d : inner.basis()) {
    for (const auto& u : outer.basis()) {
      if (!inner.contains(a.multiply(u, d)) || !inner.contains(a.multiply(d, u))) return false;
    }
  }
  return inner.is_subset_of(outer);
}

}  // namespace

Report validate_ring_action(const RingPartialAction& a) {
  Report rep;
  const FiniteGroupoid& G = a.groupoid;
  const Algebra& A = a.algebra;
  Submodule whole = Submodule::full(A.field(), A.rank());
  Check& ideal = rep.clause("ring.ideal", "D_e is an ideal of A for identities e");
  for (Mor e : G.identities()) {
    ideal.expect(ideal_of(A, a.domains[e], whole), [&] { return "D_" + G.name(e); });
  }
  Check& nest = rep.clause("ring.ideal-nesting", "D_g is an ideal of D_r(g)");
  for (Mor g = 0; g < G.size(); ++g) {
    nest.expect(ideal_of(A, a.domains[g], a.domains[G.r(g)]), [&] { return "D_" + G.name(g); });
  }
  Check& iso = rep.clause("ring.isomorphism", "alpha_g maps D_{g^-1} isomorphically onto D_g");
  for (Mor g = 0; g < G.size(); ++g) {
    const Submodule& src = a.domains[G.inv(g)];
    Submodule img = image(a.maps[g], src);
    if (!iso.expect(img == a.domains[g] && img.dim() == src.dim(), [&] { return "alpha_" + G.name(g) + " image"; })) {
      continue;
    }
    for (const auto& u : src.basis()) {
      for (const auto& v : src.basis()) {
        iso.expect(a.maps[g].apply(A.multiply(u, v)) == A.multiply(a.maps[g].apply(u), a.maps[g].apply(v)),
                   [&] { return "alpha_" + G.name(g) + " is not multiplicative"; });
      }
    }
  }
  Check& ident = rep.clause("ring.identity", "alpha_e is the identity of D_e");
  for (Mor e : G.identities()) {
    for (const auto& u : a.domains[e].basis()) {
      ident.expect(a.maps[e].apply(u) == u, [&] { return "alpha_" + G.name(e); });
    }
  }
  Check& inter = rep.clause("ring.intersection", "alpha_h^-1(D_{g^-1} cap D_h) lies in D_{(gh)^-1}");
  Check& comp = rep.clause("ring.composition", "alpha_g alpha_h = alpha_gh on alpha_h^-1(D_{g^-1} cap D_h)");
  for (const auto& [g, h] : G.composable_pairs()) {
    Mor gh = G.compose(g, h);
    Submodule pre = image(a.maps[G.inv(h)], intersect(a.domains[G.inv(g)], a.domains[h]));
    inter.expect(pre.is_subset_of(a.domains[G.inv(gh)]), [&] { return "(" + G.name(g) + "," + G.name(h) + ")"; });
    for (const auto& u : pre.basis()) {
      comp.expect(a.maps[g].apply(a.maps[h].apply(u)) == a.maps[gh].apply(u),
                  [&] { return "(" + G.name(g) + "," + G.name(h) + ") on " + to_string(u); });
    }
  }
  return rep;
}

bool is_global_ring_action(const RingPartialAction& a) {
  const FiniteGroupoid& G = a.groupoid;
  for (Mor g = 0; g < G.size(); ++g) {
    if (a.domains[g] != a.domains[G.r(g)]) return false;
  }
  for (const auto& [g, h] : G.composable_pairs()) {
    for (const auto& u : a.domains[G.inv(h)].basis()) {
      if (a.maps[g].apply(a.maps[h].apply(u)) != a.maps[G.compose(g, h)].apply(u)) return false;
    }
  }
  return true;
}

SkewRing build_skew_ring(const RingPartialAction& a) {
  SkewRing out;
  const FiniteGroupoid& G = a.groupoid;
  const Algebra& A = a.algebra;
  std::size_t total = 0;
  std::vector<std::string> labels;
  for (Mor g = 0; g < G.size(); ++g) {
    out.offsets.push_back(total);
    for (std::size_t k = 0; k < a.domains[g].dim(); ++k) {
      out.tags.emplace_back(g, k);
      labels.push_back(G.name(g) + "#" + std::to_string(k + 1));
    }
    total += a.domains[g].dim();
  }
  out.algebra = Algebra(A.field(), total);
  out.algebra.set_labels(std::move(labels));
  Check& closed = out.report.clause("skew-ring.closed", "alpha_g(alpha_{g^-1}(a) b) lies in D_gh");
  for (std::size_t p = 0; p < total; ++p) {
    const auto [g, k] = out.tags[p];
    const Vector& av = a.domains[g].basis()[k];
    for (std::size_t q = 0; q < total; ++q) {
      const auto [h, l] = out.tags[q];
      if (G.d(g) != G.r(h)) continue;
      Mor gh = G.compose(g, h);
      Vector v = a.maps[g].apply(A.multiply(a.maps[G.inv(g)].apply(av), a.domains[h].basis()[l]));
      auto coords = a.domains[gh].coordinates(v);
      if (!closed.expect(coords.has_value(), [&] { return G.name(g) + " times " + G.name(h); })) continue;
      Vector full = zero_vector(A.field(), total);
      for (std::size_t i = 0; i < coords->size(); ++i) full[out.offsets[gh] + i] = (*coords)[i];
      out.algebra.set_product(p, q, std::move(full));
    }
  }
  return out;
}

Report check_ring_globalization(const RingPartialAction& alpha, const RingPartialAction& beta,
                                const std::vector<std::optional<Matrix>>& psi) {
  Report rep;
  const FiniteGroupoid& G = alpha.groupoid;
  const Algebra& A = alpha.algebra;
  const Algebra& B = beta.algebra;
  rep.merge(validate_ring_action(beta), "target.");
  Check& glob = rep.clause("ring-globalization.global", "beta is a global action");
  glob.expect(is_global_ring_action(beta), "beta_g beta_h differs from beta_gh or B_g differs from B_r(g)");

  auto psi_of = [&](Mor e) -> const Matrix& {
    if (!psi.at(e)) throw std::invalid_argument("missing monomorphism psi_" + G.name(e));
    return *psi[e];
  };
  std::vector<Submodule> embedded(G.size());
  for (Mor e : G.identities()) embedded[e] = image(psi_of(e), alpha.domains[e]);

  Check& mono = rep.clause("ring-globalization.monomorphism", "psi_e is an injective ring map on A_e");
  Check& ideal = rep.clause("ring-globalization.ideal", "psi_e(A_e) is an ideal of B_e");
  for (Mor e : G.identities()) {
    const Matrix& P = psi_of(e);
    mono.expect(embedded[e].dim() == alpha.domains[e].dim(), [&] { return "psi_" + G.name(e) + " is not injective"; });
    for (const auto& u : alpha.domains[e].basis()) {
      for (const auto& v : alpha.domains[e].basis()) {
        mono.expect(P.apply(A.multiply(u, v)) == B.multiply(P.apply(u), P.apply(v)),
                    [&] { return "psi_" + G.name(e) + " is not multiplicative"; });
      }
    }
    for (const auto& u : embedded[e].basis()) {
      for (const auto& b : beta.domains[e].basis()) {
        ideal.expect(embedded[e].contains(B.multiply(b, u)) && embedded[e].contains(B.multiply(u, b)), [&] {
          return "B_" + G.name(e) + " element " + to_string(b) + " moves " + to_string(u) + " out of psi(A)";
        });
      }
    }
    ideal.expect(embedded[e].is_subset_of(beta.domains[e]), [&] { return "psi_" + G.name(e) + "(A) not in B"; });
  }

  Check& inter = rep.clause("ring-globalization.intersection",
                            "psi_r(g)(A_g) = psi_r(g)(A_r(g)) cap beta_g(psi_d(g)(A_d(g)))");
  Check& tw = rep.clause("ring-globalization.intertwining", "beta_g psi_d(g) = psi_r(g) alpha_g on A_{g^-1}");
  Check& gen = rep.clause("ring-globalization.generation", "B_g = sum over r(h) = r(g) of beta_h(psi_d(h)(A_d(h)))");
  for (Mor g = 0; g < G.size(); ++g) {
    Mor rg = G.r(g), dg = G.d(g);
    Submodule lhs = image(psi_of(rg), alpha.domains[g]);
    Submodule rhs = intersect(embedded[rg], image(beta.maps[g], embedded[dg]));
    inter.expect(lhs == rhs, [&] { return G.name(g) + ": " + lhs.to_string() + " vs " + rhs.to_string(); });
    for (const auto& a : alpha.domains[G.inv(g)].basis()) {
      tw.expect(beta.maps[g].apply(psi_of(dg).apply(a)) == psi_of(rg).apply(alpha.maps[g].apply(a)),
                [&] { return G.name(g) + " on " + to_string(a); });
    }
    Submodule sum = Submodule::zero(B.field(), B.rank());
    for (Mor h : G.with_range(rg)) sum = sum_of(sum, image(beta.maps[h], embedded[G.d(h)]));
    gen.expect(sum == beta.domains[g], [&] { return "B_" + G.name(g); });
  }
  return rep;
}

}  // namespace pgact
