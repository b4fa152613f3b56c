#include "wh/smash.hpp"

#include <stdexcept>

namespace wh {

SmashAlgebra smash_product(const FinAlgebra& b, const WeakHopf& kg, const ModuleAction& action) {
  const Field& F = b.field();
  const FinAlgebra& H = kg.algebra;
  const std::size_t n = b.dim();
  const std::size_t m = H.dim();
  if (action.b_dim() != n || action.morphisms() != m) throw std::invalid_argument("action does not match B and KG");

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t g = 0; g < m; ++g) labels.push_back(b.label(i) + "#" + H.label(g));
  }
  SmashAlgebra out{FinAlgebra(F, std::move(labels)), n, m, false, action};

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t sigma = 0; sigma < m; ++sigma) {
      for (std::size_t c = 0; c < n; ++c) {
        Element left = b.multiply(Element::basis(a), action.at(sigma, c));
        for (std::size_t tau = 0; tau < m; ++tau) {
          const Element& st = H.product(sigma, tau);
          Element value;
          for (const auto& [bi, bc] : left.terms()) {
            for (const auto& [gi, gc] : st.terms()) value.add_term(F, out.index(bi, gi), F.mul(bc, gc));
          }
          out.algebra.set_product(out.index(a, sigma), out.index(c, tau), std::move(value));
        }
      }
    }
  }
  return out;
}

Element harpoon(const SmashAlgebra& bsm, std::size_t rho, const Element& z) {
  if (bsm.with_dual) throw std::invalid_argument("harpoon acts on B#KG");
  Element out;
  for (const auto& [i, c] : z.terms()) {
    if (bsm.g_of(i) == rho) out.add_term(bsm.algebra.field(), i, c);
  }
  return out;
}

SmashAlgebra double_smash(const FinAlgebra& b, const WeakHopf& kg, const WeakHopf& kgstar,
                          const ModuleAction& action) {
  const Field& F = b.field();
  const std::size_t n = b.dim();
  const std::size_t m = kg.algebra.dim();
  if (kgstar.algebra.dim() != m) throw std::invalid_argument("KG* must be dual to KG");
  SmashAlgebra bsm = smash_product(b, kg, action);

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t g = 0; g < m; ++g) {
      for (std::size_t h = 0; h < m; ++h) {
        labels.push_back(b.label(i) + "#" + kg.algebra.label(g) + "#" + kgstar.algebra.label(h));
      }
    }
  }
  SmashAlgebra out{FinAlgebra(F, std::move(labels)), n, m, true, action};

  const std::size_t d = out.algebra.dim();
  for (std::size_t x = 0; x < d; ++x) {
    const std::size_t a = out.b_of(x), mm = out.g_of(x), nn = out.h_of(x);
    for (std::size_t y = 0; y < d; ++y) {
      const std::size_t c = out.b_of(y), s = out.g_of(y), t = out.h_of(y);
      Element value;
      for (const auto& term : kgstar.co.delta.at(nn)) {
        Element harpooned = harpoon(bsm, term.left, Element::basis(bsm.index(c, s)));
        if (harpooned.is_zero()) continue;
        Element left = bsm.algebra.multiply(Element::basis(bsm.index(a, mm)), harpooned);
        const Element& right = kgstar.algebra.product(term.right, t);
        for (const auto& [li, lc] : left.terms()) {
          for (const auto& [ri, rc] : right.terms()) {
            value.add_term(F, out.index(bsm.b_of(li), bsm.g_of(li), ri), F.mul(term.coeff, F.mul(lc, rc)));
          }
        }
      }
      out.algebra.set_product(x, y, std::move(value));
    }
  }
  return out;
}

}  // namespace wh
