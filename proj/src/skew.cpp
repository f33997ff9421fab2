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

#include "pgact/skew.hpp"

#include <stdexcept>

namespace pgact {

SkewSemicategory build_skew(const PartialCatAction& a) {
  SkewSemicategory out;
  const FiniteGroupoid& G = a.groupoid();
  const Semicategory& C = a.semicategory();
  const std::size_t n = C.num_objects();
  out.summands.resize(n * n);
  std::vector<std::size_t> ranks(n * n, 0);
  for (Obj y = 0; y < n; ++y) {
    for (Obj x = 0; x < n; ++x) {
      auto& list = out.summands[y * n + x];
      for (Mor g = 0; g < G.size(); ++g) {
        if (!a.in_domain(G.inv(g), x)) continue;
        Obj gx = a.move(g, x);
        list.push_back({g, gx, ranks[y * n + x], a.ideal(g).at(y, gx).dim()});
        ranks[y * n + x] += list.back().dim;
      }
    }
  }
  out.cat = Semicategory(C.field(), C.object_names(), ranks);
  for (Obj y = 0; y < n; ++y) {
    for (Obj x = 0; x < n; ++x) {
      std::vector<std::string> labels;
      for (const auto& s : out.summands[y * n + x]) {
        for (std::size_t i = 0; i < s.dim; ++i) labels.push_back(G.name(s.g) + "." + std::to_string(i + 1));
      }
      out.cat.set_labels(y, x, std::move(labels));
    }
  }

  Check& closed = out.report.clause("skew.closed", "alpha^t(alpha^{t^-1}(f) l) lies in the summand of tg");
  for (Obj z = 0; z < n; ++z) {
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        for (const auto& st : out.summands[z * n + y]) {
          for (const auto& sg : out.summands[y * n + x]) {
            Mor t = st.g, g = sg.g;
            if (!G.composable(t, g)) continue;
            Mor tg = G.compose(t, g);
            if (!a.in_domain(G.inv(tg), x)) continue;
            const SkewSummand* dst = nullptr;
            for (const auto& s : out.summands[z * n + x]) {
              if (s.g == tg) dst = &s;
            }
            const Submodule& target = a.ideal(tg).at(z, dst->target);
            Obj tz = a.move(G.inv(t), z);
            for (std::size_t i = 0; i < st.dim; ++i) {
              const Vector& f = a.ideal(t).at(z, st.target).basis()[i];
              const Matrix* back = tz == kNoObj ? nullptr : a.map(G.inv(t), z, st.target);
              if (!closed.expect(back != nullptr, [&] {
                    return "alpha^" + G.name(G.inv(t)) + " undefined at (" + C.object_name(z) + "," +
                           C.object_name(st.target) + ")";
                  })) {
                continue;
              }
              Vector fb = back->apply(f);
              for (std::size_t j = 0; j < sg.dim; ++j) {
                const Vector& l = a.ideal(g).at(y, sg.target).basis()[j];
                Vector p = C.compose(tz, y, sg.target, fb, l);
                if (is_zero(p)) continue;
                const Matrix* fwd = a.map(t, tz, sg.target);
                if (!closed.expect(fwd != nullptr, [&] {
                      return "alpha^" + G.name(t) + " undefined at (" + C.object_name(tz) + "," +
                             C.object_name(sg.target) + ")";
                    })) {
                  continue;
                }
                auto coords = target.coordinates(fwd->apply(p));
                if (!closed.expect(coords.has_value(), [&] {
                      return G.name(t) + " times " + G.name(g) + " at " + C.object_name(z) + "<-" + C.object_name(y) +
                             "<-" + C.object_name(x);
                    })) {
                  continue;
                }
                Vector v = out.cat.zero(z, x);
                for (std::size_t k = 0; k < coords->size(); ++k) v[dst->offset + k] = (*coords)[k];
                out.cat.set_basis_product(z, y, x, st.offset + i, sg.offset + j, std::move(v));
              }
            }
          }
        }
      }
    }
  }
  return out;
}

Report check_skew_associative(const SkewSemicategory& s) {
  Report rep;
  rep.merge(s.report);
  rep.merge(s.cat.validate(), "skew.");
  return rep;
}

AssociativityCriterion check_lr_criterion(const PartialCatAction& a, LRConvention convention) {
  AssociativityCriterion out;
  const FiniteGroupoid& G = a.groupoid();
  out.hypothesis = true;
  for (Mor g = 0; g < G.size(); ++g) {
    bool ok = false;
    try {
      ok = check_lr_associative(ideal_algebra(a.semicategory(), a.ideal(g)), convention).associative;
    } catch (const std::invalid_argument& e) {
      out.report.note("a(I^" + G.name(g) + ") is not closed: " + e.what());
    }
    out.report.note("a(I^" + G.name(g) + ") is " + (ok ? "" : "not ") + "(L,R)-associative");
    out.hypothesis = out.hypothesis && ok;
  }
  SkewSemicategory s = build_skew(a);
  out.conclusion = check_skew_associative(s).ok();
  out.report.note(std::string("skew product is ") + (out.conclusion ? "" : "not ") + "associative");
  Check& imp = out.report.clause("skew.lr-implication", "(L,R)-associative ideals give an associative skew product");
  imp.expect(!out.hypothesis || out.conclusion, "hypothesis holds but the skew product is not associative");
  return out;
}

SkewCategoryCheck check_skew_category(const PartialCatAction& a, const SkewSemicategory& s) {
  SkewCategoryCheck out;
  const FiniteGroupoid& G = a.groupoid();
  const Semicategory& C = a.semicategory();
  const std::size_t n = C.num_objects();
  Check& pre = out.report.clause("skew-category.precondition",
                                 "associative skew product and local identities of I^e at each x in C_0^e");
  pre.expect(check_skew_associative(s).ok(), "skew product is not associative");
  std::vector<Vector> sums(n);
  for (Obj x = 0; x < n; ++x) {
    sums[x] = s.cat.zero(x, x);
    for (const auto& sm : s.at(x, x)) {
      if (!G.is_identity(sm.g)) continue;
      LocalIdentity li = find_local_identity(C, a.ideal(sm.g), x);
      if (!pre.expect(li.exists, [&] { return "I^" + G.name(sm.g) + " at " + C.object_name(x) + ": " + li.failure; })) {
        continue;
      }
      auto coords = a.ideal(sm.g).at(x, x).coordinates(li.element);
      for (std::size_t k = 0; k < coords->size(); ++k) sums[x][sm.offset + k] = (*coords)[k];
    }
  }
  if (!pre.passed()) return out;
  Check& ident = out.report.clause("skew-category.identity", "the sum of local identities is a two-sided identity");
  Check& agree = out.report.clause("skew-category.agreement", "a direct solve for identities finds the same elements");
  CategoryCheck direct = check_category(s.cat);
  for (Obj x = 0; x < n; ++x) {
    std::string why;
    bool ok = is_identity_at(s.cat, x, sums[x], &why);
    ident.expect(ok, [&] { return C.object_name(x) + ": " + why; });
    agree.expect(direct.identities[x].has_value() == ok && (!ok || *direct.identities[x] == sums[x]),
                 [&] { return C.object_name(x); });
    out.identities.emplace_back(ok ? std::optional<Vector>(sums[x]) : std::nullopt);
  }
  out.is_category = out.report.ok();
  return out;
}

RingPartialAction ring_action_of(const PartialCatAction& a) {
  RingPartialAction out;
  const FiniteGroupoid& G = a.groupoid();
  const Semicategory& C = a.semicategory();
  const std::size_t n = C.num_objects();
  BlockAlgebra ba = algebra_of(C);
  const std::size_t N = ba.algebra.rank();
  out.groupoid = G;
  out.algebra = ba.algebra;
  for (Mor g = 0; g < G.size(); ++g) {
    std::vector<Vector> gens;
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        for (const auto& b : a.ideal(g).at(y, x).basis()) {
          Vector v = zero_vector(C.field(), N);
          for (std::size_t k = 0; k < b.size(); ++k) v[ba.offset(y * n + x) + k] = b[k];
          gens.push_back(std::move(v));
        }
      }
    }
    out.domains.push_back(Submodule::span(C.field(), N, gens));
    Matrix m(C.field(), N, N);
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        const Matrix* block = a.map(g, y, x);
        if (!block) continue;
        std::size_t ro = ba.offset(a.move(g, y) * n + a.move(g, x)), co = ba.offset(y * n + x);
        for (std::size_t i = 0; i < block->rows(); ++i) {
          for (std::size_t j = 0; j < block->cols(); ++j) m.at(ro + i, co + j) = block->at(i, j);
        }
      }
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

TransportCheck check_skew_ring_transport(const PartialCatAction& a) {
  TransportCheck out;
  const FiniteGroupoid& G = a.groupoid();
  const Semicategory& C = a.semicategory();
  const std::size_t n = C.num_objects();
  SkewSemicategory s = build_skew(a);
  out.report.merge(s.report);
  BlockAlgebra lhs = algebra_of(s.cat);
  BlockAlgebra ac = algebra_of(C);
  RingPartialAction ring = ring_action_of(a);
  Report valid = validate_ring_action(ring);
  out.ring_action_valid = valid.ok();
  for (const auto& c : valid.checks()) {
    if (!c.passed()) out.report.note("induced ring action: " + c.tag + " fails (" + c.witnesses.front() + ")");
  }
  if (out.ring_action_valid) out.report.note("induced ring action satisfies the partial action axioms");
  SkewRing rhs = build_skew_ring(ring);
  out.report.merge(rhs.report);

  const std::size_t N = lhs.algebra.rank();
  Check& bij = out.report.clause("transport.bijection", "f_g -> f_g delta_g is a bijection of bases");
  Matrix phi(C.field(), rhs.algebra.rank(), N);
  for (Obj y = 0; y < n; ++y) {
    for (Obj x = 0; x < n; ++x) {
      for (const auto& sm : s.at(y, x)) {
        for (std::size_t k = 0; k < sm.dim; ++k) {
          const Vector& f = a.ideal(sm.g).at(y, sm.target).basis()[k];
          Vector v = zero_vector(C.field(), ac.algebra.rank());
          for (std::size_t i = 0; i < f.size(); ++i) v[ac.offset(y * n + sm.target) + i] = f[i];
          auto coords = ring.domains[sm.g].coordinates(v);
          if (!bij.expect(coords.has_value(), [&] { return "summand " + G.name(sm.g) + " not in D_g"; })) continue;
          for (std::size_t i = 0; i < coords->size(); ++i) phi.at(rhs.offsets[sm.g] + i, lhs.offset(y * n + x) + sm.offset + k) = (*coords)[i];
        }
      }
    }
  }
  bij.expect(rhs.algebra.rank() == N && phi.rank() == N, [&] {
    return "ranks " + std::to_string(N) + " and " + std::to_string(rhs.algebra.rank());
  });
  if (!bij.passed()) return out;
  Check& prod = out.report.clause("transport.products", "phi(b_i b_j) = phi(b_i) phi(b_j) on all basis pairs");
  for (std::size_t i = 0; i < N; ++i) {
    Vector pi = phi.column(i);
    for (std::size_t j = 0; j < N; ++j) {
      prod.expect(phi.apply(lhs.algebra.product(i, j)) == rhs.algebra.multiply(pi, phi.column(j)),
                  [&] { return "(" + lhs.algebra.labels()[i] + "," + lhs.algebra.labels()[j] + ")"; });
    }
  }
  out.transports = bij.passed() && prod.passed();
  return out;
}

RingGlobalizationCheck check_ring_level_globalization(const PartialCatAction& a, const Globalization& g) {
  RingGlobalizationCheck out;
  const FiniteGroupoid& G = a.groupoid();
  const Semicategory& C = a.semicategory();
  const Semicategory& T = g.target.semicategory();
  const std::size_t n = C.num_objects(), m = T.num_objects();
  RingPartialAction alpha = ring_action_of(a);
  RingPartialAction beta = ring_action_of(g.target);
  BlockAlgebra ac = algebra_of(C), at = algebra_of(T);
  std::vector<std::optional<Matrix>> psi(G.size());
  for (Mor e : G.identities()) {
    Matrix P(C.field(), at.algebra.rank(), ac.algebra.rank());
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        const Matrix* block = g.embed(e, y, x);
        if (!block) continue;
        std::size_t ro = at.offset(g.embedding[y] * m + g.embedding[x]), co = ac.offset(y * n + x);
        for (std::size_t i = 0; i < block->rows(); ++i) {
          for (std::size_t j = 0; j < block->cols(); ++j) P.at(ro + i, co + j) = block->at(i, j);
        }
      }
    }
    psi[e] = std::move(P);
  }
  out.report = check_ring_globalization(alpha, beta, psi);
  out.globalization = out.report.ok();
  SUnitalCheck partial = check_s_unital(algebra_of(build_skew(a).cat).algebra);
  SUnitalCheck global = check_s_unital(algebra_of(build_skew(g.target).cat).algebra);
  out.partial_skew_s_unital = partial.s_unital;
  out.global_skew_s_unital = global.s_unital;
  out.report.note(std::string("a(C * G) is ") + (partial.s_unital ? "" : "not ") + "left s-unital");
  out.report.note(std::string("a(T * G) is ") + (global.s_unital ? "" : "not ") + "left s-unital");
  return out;
}

}  // namespace pgact
