#include "wh/action.hpp"

#include <map>
#include <stdexcept>

namespace wh {

Element ModuleAction::act(const Field& field, std::size_t g, const Element& b) const {
  Element out;
  for (const auto& [i, c] : b.terms()) out.add_scaled(field, at(g, i), c);
  return out;
}

Element ModuleAction::act(const Field& field, const Element& sigma, const Element& b) const {
  Element out;
  for (const auto& [g, c] : sigma.terms()) out.add_scaled(field, act(field, g, b), c);
  return out;
}

Report check_module_algebra(const FinAlgebra& b, const WeakHopf& kg, const ModuleAction& action) {
  if (!b.unit()) throw std::invalid_argument("module algebra check needs a unital B");
  if (!kg.algebra.unit()) throw std::invalid_argument("module algebra check needs a unital KG");
  const std::size_t m = kg.algebra.dim();
  const std::size_t n = b.dim();
  if (action.morphisms() != m || action.b_dim() != n) {
    throw std::invalid_argument("action table does not cover every (morphism, basis) pair");
  }
  const Field& F = b.field();
  const Element& one_b = *b.unit();
  const FinAlgebra& H = kg.algebra;
  Report report("module-algebra");
  report.set_field(F.name());

  // (i)
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t h = 0; h < m; ++h) {
      const Element& gh = H.product(g, h);
      for (std::size_t i = 0; i < n; ++i) {
        Element lhs = action.act(F, g, action.at(h, i));
        Element rhs = action.act(F, gh, Element::basis(i));
        if (lhs != rhs) {
          report.add_violation("module-associativity", {H.label(g), H.label(h), b.label(i)},
                               "g·(h·b) = " + b.format(lhs) + " but (gh)·b = " + b.format(rhs));
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Element lhs = action.act(F, *H.unit(), Element::basis(i));
    if (lhs != Element::basis(i)) {
      report.add_violation("module-unital", {"1_KG", b.label(i)}, "1·b = " + b.format(lhs));
    }
  }

  // (ii), unit pairs first so the simplest witness is reported first.
  std::vector<std::pair<std::string, Element>> args{{"1_B", one_b}};
  for (std::size_t i = 0; i < n; ++i) args.emplace_back(b.label(i), Element::basis(i));
  for (std::size_t g = 0; g < m; ++g) {
    const auto& delta = kg.co.delta.at(g);
    for (const auto& [la, ea] : args) {
      for (const auto& [lb, eb] : args) {
        Element lhs = action.act(F, g, b.multiply(ea, eb));
        Element rhs;
        for (const auto& t : delta) {
          rhs.add_scaled(F, b.multiply(action.act(F, t.left, ea), action.act(F, t.right, eb)), t.coeff);
        }
        if (lhs != rhs) {
          report.add_violation("module-multiplicative", {H.label(g), la, lb},
                               "σ(ab) = " + b.format(lhs) + " but (σ₁a)(σ₂b) = " + b.format(rhs));
        }
      }
    }
  }

  // (iii)
  for (std::size_t g = 0; g < m; ++g) {
    Element lhs = action.act(F, g, one_b);
    Element rhs = action.act(F, target_counit(kg, Element::basis(g)), one_b);
    if (lhs != rhs) {
      report.add_violation("module-unit", {H.label(g), "1_B"},
                           "σ·1 = " + b.format(lhs) + " but ε_t(σ)·1 = " + b.format(rhs));
    }
  }
  return report;
}

bool ComponentDecomposition::homogeneous() const {
  for (const auto& c : basis_component) {
    if (!c) return false;
  }
  return true;
}

DecompositionResult component_decomposition(const FinAlgebra& b, const Groupoid& g, const ModuleAction& action) {
  if (!b.unit()) throw std::invalid_argument("component decomposition needs a unital B");
  const Field& F = b.field();
  const std::size_t n = b.dim();
  const std::size_t objects = g.object_count();
  DecompositionResult result{{}, Report("decomposition")};
  auto& d = result.decomposition;
  auto& report = result.report;
  report.set_field(F.name());

  for (std::size_t e = 0; e < objects; ++e) d.idempotents.push_back(action.act(F, e, *b.unit()));

  for (std::size_t e = 0; e < objects; ++e) {
    const Element& p = d.idempotents[e];
    if (b.multiply(p, p) != p) {
      report.add_violation("idempotent", {g.label(e)}, g.label(e) + "·1_B = " + b.format(p) + " is not idempotent");
    }
    for (std::size_t f = 0; f < objects; ++f) {
      if (f == e) continue;
      if (!b.multiply(p, d.idempotents[f]).is_zero()) {
        report.add_violation("orthogonal", {g.label(e), g.label(f)});
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      Element bi = Element::basis(i);
      if (b.multiply(p, bi) != b.multiply(bi, p)) report.add_violation("central", {g.label(e), b.label(i)});
    }
    std::vector<Vector> spanning;
    for (std::size_t i = 0; i < n; ++i) spanning.push_back(b.multiply(Element::basis(i), p).dense(n));
    d.components.push_back(span_basis(F, spanning, n));
    report.set_dimension("dim B_" + g.label(e), static_cast<long>(d.components.back().size()));
  }

  std::vector<Vector> all;
  std::size_t total = 0;
  for (const auto& c : d.components) {
    total += c.size();
    all.insert(all.end(), c.begin(), c.end());
  }
  std::size_t spanned = span_rank(F, all, n);
  if (total != n || spanned != n) {
    report.add_violation("direct-sum", {},
                         "Σ dim B_e = " + std::to_string(total) + ", dim Σ B_e = " + std::to_string(spanned) +
                             ", dim B = " + std::to_string(n));
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> owner;
    std::size_t hits = 0;
    for (std::size_t e = 0; e < objects; ++e) {
      if (subspace_contains(F, d.components[e], unit_vector(n, i))) {
        owner = e;
        ++hits;
      }
    }
    d.basis_component.push_back(hits == 1 ? owner : std::nullopt);
    if (hits != 1) report.add_note("basis vector " + b.label(i) + " lies in " + std::to_string(hits) + " components");
  }
  report.set_dimension("dim B", static_cast<long>(n));
  return result;
}

DfapResult derive_dfap_action(const FinAlgebra& b, const Groupoid& g, const ComponentDecomposition& decomposition,
                              const ModuleAction& action) {
  if (!decomposition.homogeneous()) {
    throw std::invalid_argument("groupoid action needs every basis vector of B in exactly one component");
  }
  const Field& F = b.field();
  const std::size_t n = b.dim();
  const std::size_t m = g.size();
  DfapResult result{{}, Report("dfap-action")};
  auto& dfap = result.dfap;
  auto& report = result.report;
  report.set_field(F.name());
  dfap.source = action;

  dfap.ideals.resize(m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t i = 0; i < n; ++i) {
      if (decomposition.basis_component[i] == g.src(x)) dfap.ideals[x].push_back(i);
    }
  }
  auto in_ideal = [&](std::size_t x, const Element& e) {
    for (const auto& [i, c] : e.terms()) {
      if (decomposition.basis_component[i] != g.src(x)) return false;
    }
    return true;
  };

  dfap.isos.resize(m);
  for (std::size_t x = 0; x < m; ++x) {
    const auto& domain = dfap.ideals[g.inv(x)];
    std::vector<Vector> images;
    for (auto i : domain) {
      Element image = action.act(F, x, Element::basis(i));
      if (!in_ideal(x, image)) {
        report.add_violation("iso-range", {g.label(x), b.label(i)}, "β_g(r) = " + b.format(image) + " leaves E_g");
      }
      images.push_back(image.dense(n));
      dfap.isos[x].push_back(std::move(image));
    }
    std::size_t r = span_rank(F, images, n);
    if (r != domain.size() || r != dfap.ideals[x].size()) {
      report.add_violation("iso-bijective", {g.label(x)},
                           "rank " + std::to_string(r) + " from E_g^-1 of dim " + std::to_string(domain.size()) +
                               " onto E_g of dim " + std::to_string(dfap.ideals[x].size()));
    }
    for (std::size_t p = 0; p < domain.size(); ++p) {
      for (std::size_t q = 0; q < domain.size(); ++q) {
        Element ab = b.product(domain[p], domain[q]);
        Element lhs = action.act(F, x, ab);
        Element rhs = b.multiply(dfap.isos[x][p], dfap.isos[x][q]);
        if (lhs != rhs) {
          report.add_violation("iso-multiplicative", {g.label(x), b.label(domain[p]), b.label(domain[q])});
        }
      }
    }
  }

  for (std::size_t e = 0; e < g.object_count(); ++e) {
    for (std::size_t p = 0; p < dfap.ideals[e].size(); ++p) {
      if (dfap.isos[e][p] != Element::basis(dfap.ideals[e][p])) {
        report.add_violation("dfap-i", {g.label(e), b.label(dfap.ideals[e][p])}, "β_e is not the identity");
      }
    }
  }
  for (const auto& [x, y] : g.composable_pairs()) {
    auto xy = g.compose(x, y);
    if (!xy) continue;
    const auto& domain = dfap.ideals[g.inv(y)];
    for (std::size_t p = 0; p < domain.size(); ++p) {
      Element lhs = action.act(F, x, dfap.isos[y][p]);
      Element rhs = action.act(F, *xy, Element::basis(domain[p]));
      if (lhs != rhs) {
        report.add_violation("dfap-ii", {g.label(x), g.label(y), b.label(domain[p])}, "β_g β_h != β_gh");
      }
    }
  }
  return result;
}

SkewRing skew_groupoid_ring(const FinAlgebra& b, const Groupoid& g, const DfapAction& dfap) {
  const Field& F = b.field();
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  std::vector<std::string> labels;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> position;
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (auto i : dfap.ideals.at(x)) {
      position[{i, x}] = basis.size();
      basis.emplace_back(i, x);
      labels.push_back(b.label(i) + "*delta_" + g.label(x));
    }
  }
  FinAlgebra alg(F, std::move(labels));
  for (std::size_t p = 0; p < basis.size(); ++p) {
    const auto [xi, gx] = basis[p];
    for (std::size_t q = 0; q < basis.size(); ++q) {
      const auto [yi, hy] = basis[q];
      auto gh = g.compose(gx, hy);
      if (!gh) continue;
      Element z = b.multiply(Element::basis(xi), dfap.beta(F, gx, Element::basis(yi)));
      Element value;
      for (const auto& [k, c] : z.terms()) {
        auto it = position.find({k, *gh});
        if (it == position.end()) {
          throw std::invalid_argument("skew product leaves E_" + g.label(*gh) + " at (" + alg.label(p) + ", " +
                                      alg.label(q) + ")");
        }
        value.add_term(F, it->second, c);
      }
      alg.set_product(p, q, std::move(value));
    }
  }
  return {std::move(alg), std::move(basis), dfap.source};
}

}  // namespace wh
