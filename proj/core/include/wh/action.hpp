#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "wh/algebra.hpp"
#include "wh/groupoid.hpp"
#include "wh/report.hpp"
#include "wh/weak_hopf.hpp"

namespace wh {

/// u_g · b_i for every morphism g and B-basis index i, extended bilinearly.
class ModuleAction {
 public:
  ModuleAction() = default;
  ModuleAction(std::size_t morphisms, std::size_t b_dim)
      : morphisms_(morphisms), b_dim_(b_dim), table_(morphisms * b_dim) {}

  std::size_t morphisms() const { return morphisms_; }
  std::size_t b_dim() const { return b_dim_; }

  const Element& at(std::size_t g, std::size_t i) const { return table_.at(g * b_dim_ + i); }
  void set(std::size_t g, std::size_t i, Element value) { table_.at(g * b_dim_ + i) = std::move(value); }

  /// u_g · b
  Element act(const Field& field, std::size_t g, const Element& b) const;
  /// σ · b for σ ∈ KG written in the u-basis.
  Element act(const Field& field, const Element& sigma, const Element& b) const;

  bool operator==(const ModuleAction&) const = default;

 private:
  std::size_t morphisms_ = 0;
  std::size_t b_dim_ = 0;
  std::vector<Element> table_;
};

/// Weak module-algebra axioms for B over KG:
///  (i)   u_g·(u_h·b) = (u_g u_h)·b on all triples, and 1_KG·b = b;
///  (ii)  σ(ab) = (σ₁·a)(σ₂·b) for a, b ∈ {1_B} ∪ basis;
///  (iii) σ·1_B = ε_t(σ)·1_B.
/// Throws std::invalid_argument when B has no unit or the table is mis-sized.
Report check_module_algebra(const FinAlgebra& b, const WeakHopf& kg, const ModuleAction& action);

struct ComponentDecomposition {
  /// e·1_B, indexed by object.
  std::vector<Element> idempotents;
  /// Basis of B_e = B·(e·1_B), indexed by object.
  std::vector<std::vector<Vector>> components;
  /// The unique object e with b_i ∈ B_e, if there is exactly one.
  std::vector<std::optional<std::size_t>> basis_component;

  bool homogeneous() const;
};

struct DecompositionResult {
  ComponentDecomposition decomposition;
  Report report;
};

/// Computes e·1_B and B_e per object and reports idempotency, orthogonality,
/// centrality and whether B = ⊕ B_e. Nothing is assumed.
DecompositionResult component_decomposition(const FinAlgebra& b, const Groupoid& g, const ModuleAction& action);

/// Groupoid action by ideal isomorphisms: E_g = B_{s(g)} and
/// β_g = (g·-) restricted to E_{g⁻¹} = B_{t(g)}.
struct DfapAction {
  /// B-basis indices spanning E_g, per morphism.
  std::vector<std::vector<std::size_t>> ideals;
  /// β_g of each basis vector of E_{g⁻¹}, aligned with ideals[inv(g)].
  std::vector<std::vector<Element>> isos;
  ModuleAction source;

  Element beta(const Field& field, std::size_t g, const Element& r) const { return source.act(field, g, r); }
};

struct DfapResult {
  DfapAction dfap;
  Report report;
};

/// Throws std::invalid_argument unless every B-basis vector lies in exactly
/// one component. Failures of the β_g (range, bijectivity, multiplicativity,
/// axioms (i)/(ii)) are report content; the action is still returned.
DfapResult derive_dfap_action(const FinAlgebra& b, const Groupoid& g, const ComponentDecomposition& decomposition,
                              const ModuleAction& action);

/// B *_β G: basis x·δ_g with x running over the basis of E_g, product
/// (xδ_g)(yδ_h) = xβ_g(y)δ_{gh} when (g, h) ∈ G₂ and 0 otherwise.
struct SkewRing {
  FinAlgebra algebra;
  /// (B-basis index, morphism) per skew-ring basis element.
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  ModuleAction source;
};

SkewRing skew_groupoid_ring(const FinAlgebra& b, const Groupoid& g, const DfapAction& dfap);

}  // namespace wh
