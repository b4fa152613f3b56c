#include "wh/duality.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wh {

namespace {

Element column_element(const Matrix& m, std::size_t c) {
  Element out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!Field::is_zero(m(r, c))) out.add_term(Field::rationals(), r, m(r, c));
  }
  return out;
}

void add_scaled_matrix(const Field& F, Matrix& out, const Matrix& m, const Scalar& c) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (!Field::is_zero(m(r, k))) out(r, k) = F.add(out(r, k), F.mul(c, m(r, k)));
    }
  }
}

std::vector<Vector> unit_vectors(std::size_t dim, const std::vector<std::size_t>& idx) {
  std::vector<Vector> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(unit_vector(dim, i));
  return out;
}

bool supported_in(const Element& e, const std::set<std::size_t>& allowed) {
  for (const auto& [i, c] : e.terms()) {
    if (!allowed.count(i)) return false;
  }
  return true;
}

// Closure of span{basis_i : i ∈ idx} under the product.
void check_closed(const FinAlgebra& A, const std::vector<std::size_t>& idx, const std::string& axiom,
                  Report& report) {
  std::set<std::size_t> allowed(idx.begin(), idx.end());
  for (auto x : idx) {
    for (auto y : idx) {
      const Element& p = A.product(x, y);
      if (!supported_in(p, allowed)) {
        report.add_violation(axiom, {A.label(x), A.label(y)}, "product " + A.format(p) + " leaves the span");
      }
    }
  }
}

void check_products_vanish(const FinAlgebra& A, const std::vector<std::size_t>& left,
                           const std::vector<std::size_t>& right, const std::string& axiom, Report& report) {
  for (auto x : left) {
    for (auto y : right) {
      const Element& p = A.product(x, y);
      if (!p.is_zero()) report.add_violation(axiom, {A.label(x), A.label(y)}, "product " + A.format(p));
    }
  }
}

void note_conditions(const DualityContext& ctx, Report& report) {
  if (!ctx.module_report.holds()) {
    report.add_note("conditional: B is not a weak KG-module algebra (" +
                    std::to_string(ctx.module_report.total_violations()) + " violations)");
  }
  if (!ctx.strata.total()) {
    report.add_note("conditional: " + std::to_string(ctx.strata.unclassified()) + " basis elements unclassified");
  }
}

void set_strata_dims(const DualityContext& ctx, Report& report) {
  for (std::size_t k = 1; k <= kStratumCount; ++k) {
    auto s = static_cast<Stratum>(k);
    report.set_dimension("dim " + to_string(s), static_cast<long>(ctx.strata.count(s)));
  }
}

struct Candidate {
  std::string name;
  const Element* y;
};

std::vector<Candidate> candidates(const DualityContext& ctx) {
  return {{"y_object_sum", &ctx.y.object_sum}, {"y_morphism_sum", &ctx.y.morphism_sum}};
}

// Folds per-candidate reports: the claim holds if one candidate does.
void fold_candidates(Report& report, const std::vector<std::pair<std::string, Report>>& per) {
  bool any = false;
  for (const auto& [name, r] : per) {
    if (r.holds()) {
      any = true;
      report.add_certificate(name + " satisfies every condition");
    } else {
      report.add_note(name + " fails " + std::to_string(r.total_violations()) + " conditions");
    }
  }
  if (!any) {
    for (const auto& [name, r] : per) {
      for (const auto& v : r.violations()) report.add_violation(name + ": " + v.axiom, v.witness, v.detail);
    }
  }
}

Report verify_thm22(const DualityContext& ctx) {
  const Field& F = ctx.field();
  const FinAlgebra& A = ctx.dsm.algebra;
  const std::size_t N = A.dim();
  Report report("thm2.2");
  report.set_field(F.name());
  note_conditions(ctx, report);
  set_strata_dims(ctx, report);
  report.set_dimension("dim ker phi", static_cast<long>(ctx.kernel.dim_kernel));
  report.set_dimension("dim im phi", static_cast<long>(ctx.kernel.dim_image));

  const auto& K = ctx.kernel.kernel;
  auto low = ctx.strata.members({Stratum::A3, Stratum::A4, Stratum::A5, Stratum::A6});
  auto span = unit_vectors(N, low);
  if (!subspace_equal(F, K, span)) {
    for (auto x : low) {
      if (!ctx.phi.images[x].is_zero()) {
        report.add_violation("kernel-equals-A3-A6", {A.label(x)}, "element of A3..A6 with nonzero image");
      }
    }
    for (const auto& k : K) {
      if (!subspace_contains(F, span, k)) {
        report.add_violation("kernel-equals-A3-A6", {A.format(Element::from_dense(k))},
                             "kernel vector outside span(A3..A6)");
      }
    }
    if (report.holds()) report.add_violation("kernel-equals-A3-A6", {}, "subspaces differ");
  }
  for (auto s : {Stratum::A1, Stratum::A2, Stratum::A7, Stratum::A8, Stratum::A9, Stratum::A10}) {
    auto idx = ctx.strata.members({s});
    auto vs = unit_vectors(N, idx);
    std::size_t meet = intersection_dim(F, vs, K, N);
    if (meet != 0) {
      std::vector<std::string> witness;
      for (auto x : idx) {
        if (ctx.phi.images[x].is_zero()) witness.push_back(A.label(x));
      }
      report.add_violation(to_string(s) + "-meets-kernel", witness,
                           "dim(span ∩ ker) = " + std::to_string(meet));
    }
  }
  return report;
}

Report verify_prop23(const DualityContext& ctx) {
  Report report("prop2.3");
  report.set_field(ctx.field().name());
  note_conditions(ctx, report);
  auto idx = ctx.strata.members({Stratum::A1, Stratum::A7, Stratum::A10});
  report.set_dimension("dim S'", static_cast<long>(idx.size()));
  check_closed(ctx.dsm.algebra, idx, "A1+A7+A10-closed", report);
  return report;
}

Report verify_prop24(const DualityContext& ctx) {
  const FinAlgebra& A = ctx.dsm.algebra;
  Report report("prop2.4");
  report.set_field(ctx.field().name());
  note_conditions(ctx, report);
  auto idx = ctx.strata.members({Stratum::A1, Stratum::A7, Stratum::A10});
  std::set<std::size_t> allowed(idx.begin(), idx.end());
  std::vector<std::pair<std::string, Report>> per;
  for (const auto& c : candidates(ctx)) {
    Report r(c.name);
    const Element& y = *c.y;
    report.add_note(c.name + " = " + A.format(y));
    if (!supported_in(y, allowed)) {
      for (const auto& [i, coeff] : y.terms()) {
        if (!allowed.count(i)) {
          r.add_violation("in-subalgebra", {A.label(i)}, "term of y outside A1+A7+A10 (" + to_string(ctx.strata.labels[i]) + ")");
        }
      }
    }
    for (auto x : idx) {
      Element z = Element::basis(x);
      Element left = A.multiply(y, z);
      if (left != z) r.add_violation("left-identity", {A.label(x)}, "yz = " + A.format(left));
      Element right = A.multiply(z, y);
      if (right != z) r.add_violation("right-identity", {A.label(x)}, "zy = " + A.format(right));
    }
    Element yy = A.multiply(y, y);
    if (yy != y) r.add_violation("idempotent", {c.name}, "y² = " + A.format(yy));
    per.emplace_back(c.name, std::move(r));
  }
  fold_candidates(report, per);
  return report;
}

Report verify_prop25(const DualityContext& ctx) {
  const FinAlgebra& A = ctx.dsm.algebra;
  Report report("prop2.5");
  report.set_field(ctx.field().name());
  note_conditions(ctx, report);
  auto a2 = ctx.strata.members({Stratum::A2});
  auto a89 = ctx.strata.members({Stratum::A8, Stratum::A9});
  report.set_dimension("dim A2", static_cast<long>(a2.size()));
  report.set_dimension("dim A8+A9", static_cast<long>(a89.size()));
  std::vector<std::pair<std::string, Report>> per;
  for (const auto& c : candidates(ctx)) {
    Report r(c.name);
    for (auto x : a2) {
      Element p = A.multiply(*c.y, Element::basis(x));
      if (!p.is_zero()) r.add_violation("left-annihilates-A2", {A.label(x)}, "yz = " + A.format(p));
    }
    for (auto x : a89) {
      Element p = A.multiply(Element::basis(x), *c.y);
      if (!p.is_zero()) r.add_violation("right-annihilates-A8-A9", {A.label(x)}, "zy = " + A.format(p));
    }
    per.emplace_back(c.name, std::move(r));
  }
  fold_candidates(report, per);
  return report;
}

Report verify_thm26(const DualityContext& ctx) {
  const Field& F = ctx.field();
  const FinAlgebra& A = ctx.dsm.algebra;
  const std::size_t N = A.dim();
  Report report("thm2.6");
  report.set_field(F.name());
  note_conditions(ctx, report);

  const auto& D = ctx.kernel.kernel;
  auto s_idx = ctx.strata.members(
      {Stratum::A1, Stratum::A2, Stratum::A7, Stratum::A8, Stratum::A9, Stratum::A10});
  auto sp_idx = ctx.strata.members({Stratum::A1, Stratum::A7, Stratum::A10});
  auto t_idx = ctx.strata.members({Stratum::A2, Stratum::A8, Stratum::A9});
  auto S = unit_vectors(N, s_idx);
  report.set_dimension("dim D", static_cast<long>(D.size()));
  report.set_dimension("dim S", static_cast<long>(S.size()));
  report.set_dimension("dim S'", static_cast<long>(sp_idx.size()));
  report.set_dimension("dim T", static_cast<long>(t_idx.size()));

  std::vector<Vector> both(D);
  both.insert(both.end(), S.begin(), S.end());
  std::size_t r = span_rank(F, both, N);
  if (D.size() + S.size() != N || r != N) {
    report.add_violation("D-plus-S-whole", {},
                         "dim D + dim S = " + std::to_string(D.size() + S.size()) + ", rank(D ∪ S) = " +
                             std::to_string(r) + ", whole = " + std::to_string(N));
  }

  // Algebra structure: D, S, S', T subalgebras with vanishing cross products.
  std::vector<Element> d_elems;
  for (const auto& v : D) d_elems.push_back(Element::from_dense(v));
  std::vector<Vector> dd;
  for (std::size_t i = 0; i < d_elems.size(); ++i) {
    for (std::size_t j = 0; j < d_elems.size(); ++j) {
      Element p = A.multiply(d_elems[i], d_elems[j]);
      if (!p.is_zero() && !subspace_contains(F, D, p.dense(N))) {
        report.add_violation("D-subalgebra", {A.format(d_elems[i]), A.format(d_elems[j])},
                             "product " + A.format(p) + " leaves D");
      }
    }
  }
  check_closed(A, s_idx, "S-subalgebra", report);
  check_closed(A, sp_idx, "S'-subalgebra", report);
  check_closed(A, t_idx, "T-subalgebra", report);
  for (const auto& d : d_elems) {
    for (auto x : s_idx) {
      Element z = Element::basis(x);
      Element ds = A.multiply(d, z);
      if (!ds.is_zero()) report.add_violation("D-S-products-vanish", {A.format(d), A.label(x)}, A.format(ds));
      Element sd = A.multiply(z, d);
      if (!sd.is_zero()) report.add_violation("D-S-products-vanish", {A.label(x), A.format(d)}, A.format(sd));
    }
  }
  check_products_vanish(A, sp_idx, t_idx, "S'-T-products-vanish", report);
  check_products_vanish(A, t_idx, sp_idx, "S'-T-products-vanish", report);
  return report;
}

Report verify_rem27(const DualityContext& ctx) {
  const Field& F = ctx.field();
  Report report("rem2.7");
  report.set_field(F.name());
  note_conditions(ctx, report);
  auto s_idx = ctx.strata.members(
      {Stratum::A1, Stratum::A2, Stratum::A7, Stratum::A8, Stratum::A9, Stratum::A10});
  Matrix flat = ctx.phi.flattened();
  std::vector<Vector> cols;
  for (auto x : s_idx) cols.push_back(flat.column(x));
  std::size_t dim_phi_s = span_rank(F, cols, flat.rows());
  const std::size_t N = ctx.dsm.algebra.dim();
  report.set_dimension("dim D", static_cast<long>(ctx.kernel.dim_kernel));
  report.set_dimension("dim phi(S)", static_cast<long>(dim_phi_s));
  report.set_dimension("dim im phi", static_cast<long>(ctx.kernel.dim_image));
  if (dim_phi_s != ctx.kernel.dim_image) {
    report.add_violation("phi(S)-equals-image", {},
                         std::to_string(dim_phi_s) + " vs " + std::to_string(ctx.kernel.dim_image));
  }
  if (ctx.kernel.dim_kernel + dim_phi_s != N) {
    report.add_violation("dimension-count", {},
                         "dim D + dim φ(S) = " + std::to_string(ctx.kernel.dim_kernel + dim_phi_s) +
                             ", whole = " + std::to_string(N));
  }
  return report;
}

Report verify_phi_hom(const DualityContext& ctx) {
  Report report = phi_is_homomorphism(ctx.phi, ctx.dsm, ctx.bsm, ctx.kg);
  note_conditions(ctx, report);
  return report;
}

Report verify_thm29(const DualityContext& ctx) {
  const Field& F = ctx.field();
  Report report("thm2.9");
  report.set_field(F.name());
  note_conditions(ctx, report);
  if (!ctx.decomposition.report.holds() || !ctx.decomposition.decomposition.homogeneous()) {
    report.add_violation("hypothesis", {}, "B is not the direct sum of homogeneous components B_e");
    return report;
  }
  DfapResult dfap = derive_dfap_action(ctx.b, ctx.groupoid, ctx.decomposition.decomposition, ctx.action);
  if (!dfap.report.holds()) {
    for (const auto& v : dfap.report.violations()) report.add_violation("hypothesis: " + v.axiom, v.witness, v.detail);
    return report;
  }
  std::optional<SkewRing> built;
  try {
    built = skew_groupoid_ring(ctx.b, ctx.groupoid, dfap.dfap);
  } catch (const std::invalid_argument& e) {
    report.add_violation("hypothesis", {}, e.what());
    return report;
  }
  const SkewRing& skew = *built;
  Report assoc = check_associativity(skew.algebra, "skew-associativity");
  for (const auto& v : assoc.violations()) report.add_violation("skew-associativity", v.witness, v.detail);

  PsiMap psi = build_psi(skew, ctx.kgstar, ctx.dsm);
  const std::size_t n = psi.domain.size();
  std::vector<std::size_t> d1, c, b0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t g = skew.basis[psi.domain[k].first].second;
    std::size_t h = psi.domain[k].second;
    if (ctx.groupoid.composable(g, h)) {
      c.push_back(k);
      if (ctx.groupoid.is_loop(g)) b0.push_back(k);
    } else {
      d1.push_back(k);
    }
  }
  report.set_dimension("dim domain", static_cast<long>(n));
  report.set_dimension("dim D1", static_cast<long>(d1.size()));
  report.set_dimension("dim C", static_cast<long>(c.size()));
  report.set_dimension("dim B0", static_cast<long>(b0.size()));

  Matrix phipsi = multiply(F, ctx.phi.flattened(), psi.matrix);
  auto ker = kernel_basis(F, phipsi);
  auto d1v = unit_vectors(n, d1);
  if (!subspace_equal(F, ker, d1v)) {
    report.add_violation("D1-equals-kernel", {},
                         "dim ker(φΨ) = " + std::to_string(ker.size()) + ", dim D1 = " + std::to_string(d1.size()));
  }
  std::vector<Vector> cd(unit_vectors(n, c));
  cd.insert(cd.end(), d1v.begin(), d1v.end());
  if (c.size() + d1.size() != n || span_rank(F, cd, n) != n) {
    report.add_violation("C-plus-D1-whole", {}, "C and D1 do not decompose the domain");
  }
  std::vector<Vector> phipsi_c, psi_c, psi_b0;
  for (auto k : c) {
    phipsi_c.push_back(phipsi.column(k));
    psi_c.push_back(psi.matrix.column(k));
  }
  for (auto k : b0) psi_b0.push_back(psi.matrix.column(k));
  std::size_t im_c = span_rank(F, phipsi_c, phipsi.rows());
  report.set_dimension("dim phi(psi(C))", static_cast<long>(im_c));
  if (d1.size() + im_c != n) {
    report.add_violation("exactness", {},
                         "dim D1 + dim φΨ(C) = " + std::to_string(d1.size() + im_c) + ", domain = " +
                             std::to_string(n));
  }
  if (span_rank(F, psi_c, psi.matrix.rows()) != c.size()) {
    report.add_violation("psi-injective-on-C", {}, "Ψ restricted to C has a kernel");
  }
  const std::size_t N = ctx.dsm.algebra.dim();
  auto a1 = unit_vectors(N, ctx.strata.members({Stratum::A1}));
  report.set_dimension("dim A1", static_cast<long>(a1.size()));
  if (!subspace_equal(F, psi_b0, a1)) {
    report.add_violation("psi(B0)-equals-A1", {},
                         "rank Ψ(B0) = " + std::to_string(span_rank(F, psi_b0, N)) + ", dim A1 = " +
                             std::to_string(a1.size()));
  }
  return report;
}

}  // namespace

Matrix LinearMapRep::flattened() const {
  const std::size_t d = codomain_dim;
  Matrix out(d * d, images.size());
  for (std::size_t k = 0; k < images.size(); ++k) {
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) out(r * d + c, k) = images[k](r, c);
    }
  }
  return out;
}

Matrix LinearMapRep::image_of(const Field& field, const Element& v) const {
  Matrix out(codomain_dim, codomain_dim);
  for (const auto& [k, c] : v.terms()) add_scaled_matrix(field, out, images.at(k), c);
  return out;
}

LinearMapRep build_phi(const SmashAlgebra& dsm, const SmashAlgebra& bsm, const Pairing& pairing) {
  if (!dsm.with_dual || bsm.with_dual) throw std::invalid_argument("φ maps B#KG#KG* into End(B#KG)");
  if (dsm.b_dim != bsm.b_dim || dsm.morphisms != bsm.morphisms || !(dsm.action == bsm.action) ||
      !(dsm.algebra.field() == bsm.algebra.field())) {
    throw std::invalid_argument("B#KG#KG* and B#KG come from different data");
  }
  auto pair = pairing ? pairing : Pairing([](std::size_t h, std::size_t l) { return h == l; });
  const std::size_t d = bsm.algebra.dim();
  LinearMapRep out;
  out.domain_labels = dsm.algebra.labels();
  out.codomain_dim = d;
  out.images.reserve(dsm.algebra.dim());
  for (std::size_t x = 0; x < dsm.algebra.dim(); ++x) {
    const std::size_t left = bsm.index(dsm.b_of(x), dsm.g_of(x));
    const std::size_t h = dsm.h_of(x);
    Matrix m(d, d);
    for (std::size_t col = 0; col < d; ++col) {
      if (!pair(h, bsm.g_of(col))) continue;
      for (const auto& [r, c] : bsm.algebra.product(left, col).terms()) m(r, col) = c;
    }
    out.images.push_back(std::move(m));
  }
  return out;
}

Report phi_is_homomorphism(const LinearMapRep& phi, const SmashAlgebra& dsm, const SmashAlgebra& bsm,
                           const WeakHopf& kg) {
  const Field& F = dsm.algebra.field();
  const FinAlgebra& A = dsm.algebra;
  Report report("phi-hom");
  report.set_field(F.name());
  const std::size_t n = A.dim();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Matrix lhs = phi.image_of(F, A.product(x, y));
      Matrix rhs = multiply(F, phi.images[x], phi.images[y]);
      if (lhs != rhs) report.add_violation("phi-multiplicative", {A.label(x), A.label(y)}, "φ(xy) ≠ φ(x)φ(y)");
    }
  }

  if (!kg.algebra.unit()) throw std::invalid_argument("right B-linearity needs a unital KG");
  const std::size_t d = bsm.algebra.dim();
  std::vector<Element> b_hat;  // b#1_KG per B-basis vector
  for (std::size_t b = 0; b < bsm.b_dim; ++b) {
    Element e;
    for (const auto& [g, c] : kg.algebra.unit()->terms()) e.add_term(F, bsm.index(b, g), c);
    b_hat.push_back(std::move(e));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < d; ++z) {
      Element fz = column_element(phi.images[x], z);
      for (std::size_t b = 0; b < bsm.b_dim; ++b) {
        Element zb = bsm.algebra.multiply(Element::basis(z), b_hat[b]);
        Element lhs = Element::from_dense(apply(F, phi.images[x], zb.dense(d)));
        Element rhs = bsm.algebra.multiply(fz, b_hat[b]);
        if (lhs != rhs) {
          report.add_violation("right-B-linear", {A.label(x), bsm.algebra.label(z), bsm.algebra.label(bsm.index(b, 0))},
                               "φ(x)(z·b) = " + bsm.algebra.format(lhs) + " but φ(x)(z)·b = " +
                                   bsm.algebra.format(rhs));
        }
      }
    }
  }
  return report;
}

std::string to_string(Stratum s) {
  if (s == Stratum::Unclassified) return "Unclassified";
  return "A" + std::to_string(static_cast<int>(s));
}

std::size_t stratum_slot(Stratum s) { return static_cast<std::size_t>(s) - 1; }

std::optional<Stratum> parse_stratum(const std::string& name) {
  if (name == "Unclassified") return Stratum::Unclassified;
  for (int k = 1; k <= 10; ++k) {
    if (name == "A" + std::to_string(k)) return static_cast<Stratum>(k);
  }
  return std::nullopt;
}

Stratum classify(const Groupoid& G, const Membership& m, std::size_t g, std::size_t h) {
  if (!G.composable(g, h)) return Stratum::A3;
  if (!m.component) return Stratum::Unclassified;
  const std::size_t e = *m.component;
  const bool loop = G.is_loop(g);
  if (m.in_bg) {
    if (!m.in_image) return Stratum::Unclassified;
    return loop ? Stratum::A1 : Stratum::A2;
  }
  const bool lg = e == G.src(g);
  const bool gl = G.connected(G.tgt(g), e);
  std::vector<Stratum> hits;
  if (!lg && !gl) hits.push_back(Stratum::A4);
  if (lg && !gl && !loop) hits.push_back(Stratum::A5);
  if (!lg && gl) hits.push_back(Stratum::A6);
  if (lg && gl && loop) hits.push_back(Stratum::A7);
  if (lg && gl && !loop) hits.push_back(Stratum::A8);
  if (lg && !gl && !loop) hits.push_back(Stratum::A9);
  if (lg && !gl && loop) hits.push_back(Stratum::A10);
  return hits.size() == 1 ? hits.front() : Stratum::Unclassified;
}

std::vector<std::size_t> Stratification::members(std::initializer_list<Stratum> strata) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (std::find(strata.begin(), strata.end(), labels[i]) != strata.end()) out.push_back(i);
  }
  return out;
}

std::vector<Vector> Stratification::span_of(std::initializer_list<Stratum> strata) const {
  return unit_vectors(labels.size(), members(strata));
}

std::vector<Membership> memberships(const FinAlgebra& b, const Groupoid& G, const ComponentDecomposition& d,
                                    const ModuleAction& action) {
  if (!b.unit()) throw std::invalid_argument("memberships need a unital B");
  const Field& F = b.field();
  const std::size_t n = b.dim();
  const std::size_t m = G.size();
  std::vector<Membership> out(n * m);
  for (std::size_t g = 0; g < m; ++g) {
    Element g1 = action.act(F, g, *b.unit());
    std::vector<Vector> bg, img;
    for (std::size_t j = 0; j < n; ++j) {
      bg.push_back(b.multiply(Element::basis(j), g1).dense(n));
      img.push_back(action.at(g, j).dense(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      Membership& mm = out[i * m + g];
      mm.component = d.basis_component.at(i);
      mm.in_bg = subspace_contains(F, bg, unit_vector(n, i));
      mm.in_image = subspace_contains(F, img, unit_vector(n, i));
    }
  }
  return out;
}

Stratification stratify(const SmashAlgebra& dsm, const Groupoid& G, const std::vector<Membership>& m) {
  Stratification out;
  const std::size_t d = dsm.algebra.dim();
  out.labels.reserve(d);
  for (std::size_t x = 0; x < d; ++x) {
    const std::size_t g = dsm.g_of(x);
    Stratum s = classify(G, m.at(dsm.b_of(x) * dsm.morphisms + g), g, dsm.h_of(x));
    out.labels.push_back(s);
    ++out.counts[stratum_slot(s)];
  }
  return out;
}

KernelImage kernel_and_image(const Field& field, const LinearMapRep& phi) {
  KernelImage out;
  out.kernel = kernel_basis(field, phi.flattened());
  out.dim_domain = phi.images.size();
  out.dim_kernel = out.kernel.size();
  out.dim_image = out.dim_domain - out.dim_kernel;
  return out;
}

IdentityCandidates identity_candidates(const SmashAlgebra& dsm, const FinAlgebra& b, const Groupoid& G,
                                       const ModuleAction& action) {
  if (!b.unit()) throw std::invalid_argument("identity candidates need a unital B");
  const Field& F = b.field();
  auto term = [&](Element& out, std::size_t acting, std::size_t e) {
    Element a = action.act(F, acting, *b.unit());
    for (std::size_t n = 0; n < G.size(); ++n) {
      if (G.src(n) != e) continue;
      for (const auto& [i, c] : a.terms()) out.add_term(F, dsm.index(i, e, n), c);
    }
  };
  IdentityCandidates out;
  for (std::size_t l = 0; l < G.size(); ++l) term(out.morphism_sum, l, G.tgt(l));
  for (std::size_t e = 0; e < G.object_count(); ++e) term(out.object_sum, e, e);
  return out;
}

PsiMap build_psi(const SkewRing& skew, const WeakHopf& kgstar, const SmashAlgebra& dsm) {
  if (!(skew.source == dsm.action)) throw std::invalid_argument("skew ring and B#KG#KG* use different actions");
  if (kgstar.algebra.dim() != dsm.morphisms) throw std::invalid_argument("KG* does not match B#KG#KG*");
  PsiMap out;
  const std::size_t m = dsm.morphisms;
  out.matrix = Matrix(dsm.algebra.dim(), skew.basis.size() * m);
  for (std::size_t k = 0; k < skew.basis.size(); ++k) {
    for (std::size_t h = 0; h < m; ++h) {
      const std::size_t col = out.domain.size();
      out.domain.emplace_back(k, h);
      out.domain_labels.push_back(skew.algebra.label(k) + "#" + kgstar.algebra.label(h));
      out.matrix(dsm.index(skew.basis[k].first, skew.basis[k].second, h), col) = Scalar(1);
    }
  }
  return out;
}

DualityContext DualityContext::build(Groupoid g, FinAlgebra b, ModuleAction action) {
  WeakHopf kg = groupoid_algebra(g, b.field());
  WeakHopf kgstar = dual_weak_hopf(kg, g);
  SmashAlgebra bsm = smash_product(b, kg, action);
  SmashAlgebra dsm = double_smash(b, kg, kgstar, action);
  Report module_report = check_module_algebra(b, kg, action);
  DecompositionResult decomposition = component_decomposition(b, g, action);
  auto membership = memberships(b, g, decomposition.decomposition, action);
  LinearMapRep phi = build_phi(dsm, bsm);
  KernelImage kernel = kernel_and_image(b.field(), phi);
  Stratification strata = stratify(dsm, g, membership);
  IdentityCandidates y = identity_candidates(dsm, b, g, action);
  return DualityContext{std::move(g),          std::move(b),          std::move(action), std::move(kg),
                        std::move(kgstar),     std::move(bsm),        std::move(dsm),    std::move(module_report),
                        std::move(decomposition), std::move(membership), std::move(phi), std::move(kernel),
                        std::move(strata),     std::move(y)};
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids{"thm2.2", "prop2.3", "prop2.4", "prop2.5",
                                            "thm2.6", "rem2.7",  "thm2.9",  "phi-hom"};
  return ids;
}

bool is_claim_id(const std::string& id) {
  const auto& ids = claim_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Report verify_claim(const std::string& id, const DualityContext& ctx) {
  if (id == "thm2.2") return verify_thm22(ctx);
  if (id == "prop2.3") return verify_prop23(ctx);
  if (id == "prop2.4") return verify_prop24(ctx);
  if (id == "prop2.5") return verify_prop25(ctx);
  if (id == "thm2.6") return verify_thm26(ctx);
  if (id == "rem2.7") return verify_rem27(ctx);
  if (id == "thm2.9") return verify_thm29(ctx);
  if (id == "phi-hom") return verify_phi_hom(ctx);
  throw std::invalid_argument("unknown claim: " + id);
}

Report verify_expected_kernel(const DualityContext& ctx, const std::vector<Stratum>& kernel_strata,
                              const std::vector<Stratum>& empty_strata) {
  const Field& F = ctx.field();
  const std::size_t N = ctx.dsm.algebra.dim();
  Report report("expected-kernel");
  report.set_field(F.name());
  note_conditions(ctx, report);
  set_strata_dims(ctx, report);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < N; ++i) {
    if (std::find(kernel_strata.begin(), kernel_strata.end(), ctx.strata.labels[i]) != kernel_strata.end()) {
      idx.push_back(i);
    }
  }
  std::string name;
  for (auto s : kernel_strata) name += (name.empty() ? "" : "+") + to_string(s);
  report.set_dimension("dim ker phi", static_cast<long>(ctx.kernel.dim_kernel));
  report.set_dimension("dim span(" + name + ")", static_cast<long>(idx.size()));
  if (!subspace_equal(F, ctx.kernel.kernel, unit_vectors(N, idx))) {
    report.add_violation("kernel-equals-" + name, {},
                         "dim ker φ = " + std::to_string(ctx.kernel.dim_kernel) + ", dim span = " +
                             std::to_string(idx.size()));
  }
  for (auto s : empty_strata) {
    if (ctx.strata.count(s) != 0) {
      std::vector<std::string> witness;
      for (auto i : ctx.strata.members({s})) witness.push_back(ctx.dsm.algebra.label(i));
      report.add_violation(to_string(s) + "-empty", witness, std::to_string(ctx.strata.count(s)) + " members");
    }
  }
  return report;
}

}  // namespace wh
