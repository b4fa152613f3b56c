#pragma once

#include <cstddef>

#include "wh/action.hpp"
#include "wh/algebra.hpp"
#include "wh/weak_hopf.hpp"

namespace wh {

/// B#KG (pairs) or B#KG#KG* (triples) over K. The basis is lexicographic in
/// (B index, morphism index[, dual index]); no unit is asserted.
struct SmashAlgebra {
  FinAlgebra algebra;
  std::size_t b_dim = 0;
  std::size_t morphisms = 0;
  bool with_dual = false;
  ModuleAction action;

  std::size_t index(std::size_t b, std::size_t g) const { return b * morphisms + g; }
  std::size_t index(std::size_t b, std::size_t g, std::size_t h) const { return (b * morphisms + g) * morphisms + h; }
  std::size_t b_of(std::size_t i) const { return with_dual ? i / (morphisms * morphisms) : i / morphisms; }
  std::size_t g_of(std::size_t i) const { return with_dual ? (i / morphisms) % morphisms : i % morphisms; }
  std::size_t h_of(std::size_t i) const { return i % morphisms; }
};

/// (a#u_σ)(b#u_τ) = a(σ·b) # u_σ u_τ.
SmashAlgebra smash_product(const FinAlgebra& b, const WeakHopf& kg, const ModuleAction& action);

/// ρ_h ⇀ (b#u_l) = ρ_h(u_l)·(b#u_l), extended linearly over B#KG.
Element harpoon(const SmashAlgebra& bsm, std::size_t rho, const Element& z);

/// (a#u_m#ρ_n)(b#u_s#ρ_t) = Σ (a#u_m)(ρ_{n₁}⇀(b#u_s)) # ρ_{n₂}*ρ_t with
/// Δ(ρ_n) = Σ ρ_{n₁}⊗ρ_{n₂}. For KG* this is [n = st]·a(m·b)#u_{ms}#ρ_t.
SmashAlgebra double_smash(const FinAlgebra& b, const WeakHopf& kg, const WeakHopf& kgstar, const ModuleAction& action);

}  // namespace wh
