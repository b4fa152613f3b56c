#include "wh/weak_hopf.hpp"

#include <stdexcept>

namespace wh {

std::string kg_label(const std::string& morphism) { return "u_" + morphism; }
std::string kgstar_label(const std::string& morphism) { return "rho_" + morphism; }

Tensor2 coproduct(const WeakHopf& h, const Element& x) {
  const Field& F = h.algebra.field();
  Tensor2 out;
  for (const auto& [i, c] : x.terms()) {
    for (const auto& t : h.co.delta.at(i)) out.add_term(F, {t.left, t.right}, F.mul(c, t.coeff));
  }
  return out;
}

Scalar counit(const WeakHopf& h, const Element& x) {
  const Field& F = h.algebra.field();
  Scalar out = 0;
  for (const auto& [i, c] : x.terms()) out = F.add(out, F.mul(c, h.co.counit.at(i)));
  return out;
}

Element antipode(const WeakHopf& h, const Element& x) {
  if (!h.co.antipode) throw std::invalid_argument("no antipode table");
  const Field& F = h.algebra.field();
  Element out;
  for (const auto& [i, c] : x.terms()) out.add_scaled(F, h.co.antipode->at(i), c);
  return out;
}

WeakHopf groupoid_algebra(const Groupoid& g, const Field& field) {
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back(kg_label(l));
  FinAlgebra alg(field, std::move(labels));
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (auto ab = g.compose(a, b)) alg.set_product(a, b, Element::basis(*ab));
    }
  }
  Element unit;
  for (std::size_t e = 0; e < g.object_count(); ++e) unit.add_term(field, e, 1);
  alg.set_unit(unit);

  CoStructure co;
  co.delta.resize(n);
  co.counit.assign(n, Scalar(1));
  co.antipode.emplace();
  for (std::size_t a = 0; a < n; ++a) {
    co.delta[a].push_back({a, a, Scalar(1)});
    co.antipode->push_back(Element::basis(g.inv(a)));
  }
  return {std::move(alg), std::move(co)};
}

WeakHopf dual_weak_hopf(const WeakHopf& kg, const Groupoid& g) {
  const std::size_t n = g.size();
  if (kg.algebra.dim() != n) throw std::invalid_argument("dual_weak_hopf: algebra is not KG of this groupoid");
  for (std::size_t a = 0; a < n; ++a) {
    if (kg.algebra.label(a) != kg_label(g.label(a))) {
      throw std::invalid_argument("dual_weak_hopf: basis label mismatch at " + kg.algebra.label(a));
    }
  }
  const Field& field = kg.algebra.field();
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back(kgstar_label(l));
  FinAlgebra alg(field, std::move(labels));
  Element unit;
  for (std::size_t a = 0; a < n; ++a) {
    alg.set_product(a, a, Element::basis(a));
    unit.add_term(field, a, 1);
  }
  alg.set_unit(unit);

  CoStructure co;
  co.delta.resize(n);
  co.counit.resize(n);
  co.antipode.emplace();
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t l = 0; l < n; ++l) {
      if (auto hl = g.compose(h, l)) co.delta[*hl].push_back({h, l, Scalar(1)});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    co.counit[a] = g.is_object(a) ? Scalar(1) : Scalar(0);
    co.antipode->push_back(Element::basis(g.inv(a)));
  }
  return {std::move(alg), std::move(co)};
}

WeakHopf transpose_dual(const WeakHopf& h, const std::string& prefix) {
  const Field& F = h.algebra.field();
  const std::size_t n = h.algebra.dim();
  std::vector<std::string> labels;
  for (const auto& l : h.algebra.labels()) labels.push_back(prefix + l);
  FinAlgebra alg(F, std::move(labels));

  // (f_a f_b)(e_i) = Σ c over Sweedler pairs (a, b, c) of Δ(e_i).
  std::vector<Element> products(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& t : h.co.delta.at(i)) products[t.left * n + t.right].add_term(F, i, t.coeff);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) alg.set_product(a, b, products[a * n + b]);
  }
  Element unit;
  for (std::size_t i = 0; i < n; ++i) unit.add_term(F, i, h.co.counit.at(i));
  alg.set_unit(unit);

  CoStructure co;
  co.delta.resize(n);
  co.counit.assign(n, Scalar(0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto& [i, c] : h.algebra.product(a, b).terms()) co.delta[i].push_back({a, b, c});
    }
  }
  if (h.algebra.unit()) {
    for (const auto& [i, c] : h.algebra.unit()->terms()) co.counit[i] = c;
  }
  if (h.co.antipode) {
    co.antipode.emplace(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [i, c] : h.co.antipode->at(j).terms()) (*co.antipode)[i].add_term(F, j, c);
    }
  }
  return {std::move(alg), std::move(co)};
}

namespace {

void require_shape(const WeakHopf& h) {
  const std::size_t n = h.algebra.dim();
  if (h.co.delta.size() != n || h.co.counit.size() != n) {
    throw std::invalid_argument("costructure tables do not match the basis size");
  }
  if (h.co.antipode && h.co.antipode->size() != n) {
    throw std::invalid_argument("antipode table does not match the basis size");
  }
  for (const auto& terms : h.co.delta) {
    for (const auto& t : terms) {
      if (t.left >= n || t.right >= n) throw std::invalid_argument("coproduct refers to an unknown basis index");
    }
  }
}

const Element& require_unit(const WeakHopf& h) {
  if (!h.algebra.unit()) throw std::invalid_argument("weak bialgebra checks need a unit");
  return *h.algebra.unit();
}

// (Δ⊗id)(t)
Tensor3 delta_left(const WeakHopf& h, const Tensor2& t) {
  const Field& F = h.algebra.field();
  Tensor3 out;
  for (const auto& [k, c] : t.terms()) {
    for (const auto& s : h.co.delta[k[0]]) out.add_term(F, {s.left, s.right, k[1]}, F.mul(c, s.coeff));
  }
  return out;
}

// (id⊗Δ)(t)
Tensor3 delta_right(const WeakHopf& h, const Tensor2& t) {
  const Field& F = h.algebra.field();
  Tensor3 out;
  for (const auto& [k, c] : t.terms()) {
    for (const auto& s : h.co.delta[k[1]]) out.add_term(F, {k[0], s.left, s.right}, F.mul(c, s.coeff));
  }
  return out;
}

// Places `t` in two slots of A⊗A⊗A and the element `x` in the remaining one.
Tensor3 embed(const Field& F, const Tensor2& t, const Element& x, std::size_t free_slot) {
  Tensor3 out;
  for (const auto& [k, c] : t.terms()) {
    for (const auto& [i, cx] : x.terms()) {
      std::array<std::size_t, 3> key{};
      std::size_t src = 0;
      for (std::size_t slot = 0; slot < 3; ++slot) key[slot] = slot == free_slot ? i : k[src++];
      out.add_term(F, key, F.mul(c, cx));
    }
  }
  return out;
}

std::string describe(const FinAlgebra& alg, const Tensor2& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : t.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += Field::format(c) + "*";
    out += alg.label(k[0]) + "⊗" + alg.label(k[1]);
  }
  return out;
}

}  // namespace

Report check_weak_bialgebra(const WeakHopf& h) {
  require_shape(h);
  const Element& one = require_unit(h);
  const FinAlgebra& A = h.algebra;
  const Field& F = A.field();
  const std::size_t n = A.dim();
  Report report("weak-bialgebra");
  report.set_field(F.name());

  std::vector<Tensor2> deltas;
  deltas.reserve(n);
  for (std::size_t i = 0; i < n; ++i) deltas.push_back(coproduct(h, Element::basis(i)));

  // (i) Δ(hk) = Δ(h)Δ(k)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Tensor2 lhs = coproduct(h, A.product(i, j));
      Tensor2 rhs = tensor_multiply(A, deltas[i], deltas[j]);
      if (lhs != rhs) {
        report.add_violation("delta-multiplicative", {A.label(i), A.label(j)},
                             "Δ(hk) = " + describe(A, lhs) + " but Δ(h)Δ(k) = " + describe(A, rhs));
      }
    }
  }

  // (ii) weak comultiplicativity of the unit
  Tensor2 d1 = coproduct(h, one);
  Tensor3 dd1 = delta_left(h, d1);
  Tensor3 d1_then_1 = embed(F, d1, one, 2);  // Δ(1)⊗1
  Tensor3 one_then_d1 = embed(F, d1, one, 0);  // 1⊗Δ(1)
  if (dd1 != tensor_multiply(A, d1_then_1, one_then_d1)) {
    report.add_violation("weak-unit", {"1"}, "Δ²(1) != (Δ(1)⊗1)(1⊗Δ(1))");
  }
  if (dd1 != tensor_multiply(A, one_then_d1, d1_then_1)) {
    report.add_violation("weak-unit", {"1"}, "Δ²(1) != (1⊗Δ(1))(Δ(1)⊗1)");
  }

  // (iii) weak multiplicativity of the counit
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Element& hk_part = A.product(i, k);
      for (std::size_t l = 0; l < n; ++l) {
        Scalar lhs = counit(h, A.multiply(hk_part, Element::basis(l)));
        Scalar first = 0;
        Scalar second = 0;
        for (const auto& t : h.co.delta[k]) {
          Scalar a = F.mul(counit(h, A.product(i, t.left)), counit(h, A.product(t.right, l)));
          Scalar b = F.mul(counit(h, A.product(i, t.right)), counit(h, A.product(t.left, l)));
          first = F.add(first, F.mul(t.coeff, a));
          second = F.add(second, F.mul(t.coeff, b));
        }
        if (lhs != first) {
          report.add_violation("weak-counit", {A.label(i), A.label(k), A.label(l)}, "ε(hkl) != ε(hk₁)ε(k₂l)");
        }
        if (lhs != second) {
          report.add_violation("weak-counit", {A.label(i), A.label(k), A.label(l)}, "ε(hkl) != ε(hk₂)ε(k₁l)");
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (delta_left(h, deltas[i]) != delta_right(h, deltas[i])) {
      report.add_violation("coassociativity", {A.label(i)});
    }
    Element left;
    Element right;
    for (const auto& t : h.co.delta[i]) {
      left.add_term(F, t.right, F.mul(t.coeff, h.co.counit[t.left]));
      right.add_term(F, t.left, F.mul(t.coeff, h.co.counit[t.right]));
    }
    if (left != Element::basis(i)) report.add_violation("counit", {A.label(i)}, "(ε⊗id)Δ(h) != h");
    if (right != Element::basis(i)) report.add_violation("counit", {A.label(i)}, "(id⊗ε)Δ(h) != h");
  }
  report.set_dimension("dim", static_cast<long>(n));
  return report;
}

Element target_counit(const WeakHopf& h, const Element& x) {
  const Element& one = require_unit(h);
  const FinAlgebra& A = h.algebra;
  const Field& F = A.field();
  Element out;
  const Tensor2 delta_one = coproduct(h, one);
  for (const auto& [k, c] : delta_one.terms()) {
    Scalar e = counit(h, A.multiply(Element::basis(k[0]), x));
    out.add_term(F, k[1], F.mul(c, e));
  }
  return out;
}

Element source_counit(const WeakHopf& h, const Element& x) {
  const Element& one = require_unit(h);
  const FinAlgebra& A = h.algebra;
  const Field& F = A.field();
  Element out;
  const Tensor2 delta_one = coproduct(h, one);
  for (const auto& [k, c] : delta_one.terms()) {
    Scalar e = counit(h, A.multiply(x, Element::basis(k[1])));
    out.add_term(F, k[0], F.mul(c, e));
  }
  return out;
}

Report check_antipode(const WeakHopf& h) {
  require_shape(h);
  require_unit(h);
  if (!h.co.antipode) throw std::invalid_argument("antipode checks need an antipode table");
  const FinAlgebra& A = h.algebra;
  const Field& F = A.field();
  Report report("antipode");
  report.set_field(F.name());

  for (std::size_t i = 0; i < A.dim(); ++i) {
    Element x = Element::basis(i);
    Element first;
    Element second;
    for (const auto& t : h.co.delta[i]) {
      first.add_scaled(F, A.multiply(Element::basis(t.left), antipode(h, Element::basis(t.right))), t.coeff);
      second.add_scaled(F, A.multiply(antipode(h, Element::basis(t.left)), Element::basis(t.right)), t.coeff);
    }
    Element eps_t = target_counit(h, x);
    Element eps_s = source_counit(h, x);
    if (first != eps_t) {
      report.add_violation("antipode-i", {A.label(i)},
                           "x₁S(x₂) = " + A.format(first) + " but ε(1₁x)1₂ = " + A.format(eps_t));
    }
    if (second != eps_s) {
      report.add_violation("antipode-ii", {A.label(i)},
                           "S(x₁)x₂ = " + A.format(second) + " but 1₁ε(x1₂) = " + A.format(eps_s));
    }

    Element third;
    const Tensor3 triple = delta_left(h, coproduct(h, x));
    for (const auto& [k, c] : triple.terms()) {
      Element s1 = antipode(h, Element::basis(k[0]));
      Element s3 = antipode(h, Element::basis(k[2]));
      third.add_scaled(F, A.multiply(A.multiply(s1, Element::basis(k[1])), s3), c);
    }
    Element sx = antipode(h, x);
    if (third != sx) {
      report.add_violation("antipode-iii", {A.label(i)},
                           "S(x₁)x₂S(x₃) = " + A.format(third) + " but S(x) = " + A.format(sx));
    }
  }
  report.set_dimension("dim", static_cast<long>(A.dim()));
  return report;
}

}  // namespace wh
