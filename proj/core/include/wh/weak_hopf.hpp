#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wh/algebra.hpp"
#include "wh/groupoid.hpp"
#include "wh/report.hpp"

namespace wh {

/// One Sweedler pair c·(e_left ⊗ e_right) of Δ(e_i).
struct SweedlerTerm {
  std::size_t left;
  std::size_t right;
  Scalar coeff;

  bool operator==(const SweedlerTerm&) const = default;
};

/// Δ, ε and (optionally) S, stored extensionally per basis index.
struct CoStructure {
  std::vector<std::vector<SweedlerTerm>> delta;
  std::vector<Scalar> counit;
  std::optional<std::vector<Element>> antipode;

  bool operator==(const CoStructure&) const = default;
};

struct WeakHopf {
  FinAlgebra algebra;
  CoStructure co;
};

/// Label conventions for the two groupoid constructions.
std::string kg_label(const std::string& morphism);
std::string kgstar_label(const std::string& morphism);

Tensor2 coproduct(const WeakHopf& h, const Element& x);
Scalar counit(const WeakHopf& h, const Element& x);
/// Throws std::invalid_argument if no antipode table is present.
Element antipode(const WeakHopf& h, const Element& x);

/// KG: u_g u_h = u_{gh} when t(g) = s(h), else 0; unit Σ_{e∈G₀} u_e;
/// Δ(u_g) = u_g⊗u_g, ε(u_g) = 1, S(u_g) = u_{g⁻¹}. The groupoid is assumed
/// valid; missing table entries simply give zero products.
WeakHopf groupoid_algebra(const Groupoid& g, const Field& field);

/// KG* on the dual basis ρ_g: ρ_a ρ_b = δ_{ab} ρ_a, unit Σ_g ρ_g,
/// Δ(ρ_g) = Σ_{hl=g} ρ_h⊗ρ_l (factorizations enumerated from the table),
/// ε(ρ_g) = [g ∈ G₀], S(ρ_g) = ρ_{g⁻¹}. Throws std::invalid_argument when `kg`
/// is not the groupoid algebra of `g`.
WeakHopf dual_weak_hopf(const WeakHopf& kg, const Groupoid& g);

/// Linear dual of any finite-dimensional (weak) bialgebra: the product is the
/// transpose of Δ, Δ the transpose of the product, unit ε, counit evaluation
/// at 1, S the transpose of S. Labels become prefix + original label.
WeakHopf transpose_dual(const WeakHopf& h, const std::string& prefix);

/// Weak bialgebra axioms on every basis tuple: Δ(hk) = Δ(h)Δ(k);
/// Δ²(1) = (Δ(1)⊗1)(1⊗Δ(1)) = (1⊗Δ(1))(Δ(1)⊗1);
/// ε(hkl) = ε(hk₁)ε(k₂l) = ε(hk₂)ε(k₁l); coassociativity; counit laws.
/// Throws std::invalid_argument if the algebra has no unit or the tables are
/// not sized to the basis.
Report check_weak_bialgebra(const WeakHopf& h);

/// x₁S(x₂) = ε(1₁x)1₂, S(x₁)x₂ = 1₁ε(x1₂), S(x₁)x₂S(x₃) = S(x) per basis x.
/// Throws std::invalid_argument without unit or antipode.
Report check_antipode(const WeakHopf& h);

/// ε_t(x) = Σ ε(1₁x)1₂ over the Sweedler pairs of Δ(1).
Element target_counit(const WeakHopf& h, const Element& x);
/// ε_s(x) = Σ 1₁ε(x1₂).
Element source_counit(const WeakHopf& h, const Element& x);

}  // namespace wh
