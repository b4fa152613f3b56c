#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wh/action.hpp"
#include "wh/groupoid.hpp"
#include "wh/linalg.hpp"
#include "wh/report.hpp"
#include "wh/smash.hpp"
#include "wh/weak_hopf.hpp"

namespace wh {

/// φ as one endomorphism matrix of B#KG per domain basis element.
struct LinearMapRep {
  std::vector<std::string> domain_labels;
  std::size_t codomain_dim = 0;
  std::vector<Matrix> images;

  /// codomain_dim² × |domain|, column k = row-major flattening of images[k].
  Matrix flattened() const;
  /// φ(v) for v in domain coordinates.
  Matrix image_of(const Field& field, const Element& v) const;
};

/// ρ_h(u_l) as a 0/1 pairing; the default is the dual-basis pairing h == l.
using Pairing = std::function<bool(std::size_t rho, std::size_t u)>;

/// φ(a#u_g#ρ_h)(b#u_l) = (a#u_g)(b # ρ_h(u_l)u_l), product in B#KG.
/// Throws std::invalid_argument if the two smash products come from
/// different B, KG or action.
LinearMapRep build_phi(const SmashAlgebra& dsm, const SmashAlgebra& bsm, const Pairing& pairing = {});

/// φ(xy) = φ(x)∘φ(y) on every domain basis pair, plus right B-linearity of
/// each φ(x) under z·b := z(b#1_KG) (reported under its own axiom).
Report phi_is_homomorphism(const LinearMapRep& phi, const SmashAlgebra& dsm, const SmashAlgebra& bsm,
                           const WeakHopf& kg);

enum class Stratum { A1 = 1, A2, A3, A4, A5, A6, A7, A8, A9, A10, Unclassified };
inline constexpr std::size_t kStratumCount = 11;

std::string to_string(Stratum s);
std::size_t stratum_slot(Stratum s);

/// Per B-basis vector and morphism g: what the stratum predicates need.
struct Membership {
  std::optional<std::size_t> component;  ///< object e with b ∈ B_e, if unique
  bool in_bg = false;                    ///< b ∈ B·(g·1_B)
  bool in_image = false;                 ///< b ∈ span{g·b'}
};

/// Stratum of a ⊗ u_g ⊗ ρ_h. Order: A3 if (g,h) ∉ G₂; Unclassified if `a` is
/// inhomogeneous; A1/A2 when a ∈ B_g and a ∈ Im(g·); otherwise the A4 to A10
/// conjunction selected by (l,g) ∈ G₂ ⟺ e = s(g) and (g,l) ∈ G₂ ⟺ some
/// morphism runs t(g) → e. A5 and A9 share their conditions but sit on
/// opposite sides of ker φ, so a match of both is Unclassified.
Stratum classify(const Groupoid& g, const Membership& m, std::size_t morphism, std::size_t rho);

struct Stratification {
  std::vector<Stratum> labels;
  std::array<std::size_t, kStratumCount> counts{};

  std::size_t count(Stratum s) const { return counts[stratum_slot(s)]; }
  std::size_t unclassified() const { return count(Stratum::Unclassified); }
  bool total() const { return unclassified() == 0; }
  std::vector<std::size_t> members(std::initializer_list<Stratum> strata) const;
  std::vector<Vector> span_of(std::initializer_list<Stratum> strata) const;
};

/// Memberships for every (B-basis index, morphism), computed from the action.
std::vector<Membership> memberships(const FinAlgebra& b, const Groupoid& g, const ComponentDecomposition& d,
                                    const ModuleAction& action);

Stratification stratify(const SmashAlgebra& dsm, const Groupoid& g, const std::vector<Membership>& m);

struct KernelImage {
  std::vector<Vector> kernel;
  std::size_t dim_domain = 0;
  std::size_t dim_kernel = 0;
  std::size_t dim_image = 0;
};

KernelImage kernel_and_image(const Field& field, const LinearMapRep& phi);

struct IdentityCandidates {
  /// Σ_{l∈G} l·1_B # u_{t(l)} # Σ_{s(n)=t(l)} ρ_n
  Element morphism_sum;
  /// Σ_{e∈G₀} e·1_B # u_e # Σ_{s(n)=e} ρ_n
  Element object_sum;
};

IdentityCandidates identity_candidates(const SmashAlgebra& dsm, const FinAlgebra& b, const Groupoid& g,
                                       const ModuleAction& action);

/// Ψ: B*_βG # KG* → B#KG#KG*, a_gδ_g#ρ_h ↦ a_g#u_g#ρ_h.
struct PsiMap {
  std::vector<std::string> domain_labels;
  /// (skew-ring basis index, dual index) per domain basis element.
  std::vector<std::pair<std::size_t, std::size_t>> domain;
  /// |B#KG#KG*| × |domain|
  Matrix matrix;
};

/// Throws std::invalid_argument when the skew ring was derived from a
/// different action than the double smash product.
PsiMap build_psi(const SkewRing& skew, const WeakHopf& kgstar, const SmashAlgebra& dsm);

/// Everything the claim verifiers share, built once per instance.
struct DualityContext {
  Groupoid groupoid;
  FinAlgebra b;
  ModuleAction action;
  WeakHopf kg;
  WeakHopf kgstar;
  SmashAlgebra bsm;
  SmashAlgebra dsm;
  Report module_report;
  DecompositionResult decomposition;
  std::vector<Membership> membership;
  LinearMapRep phi;
  KernelImage kernel;
  Stratification strata;
  IdentityCandidates y;

  static DualityContext build(Groupoid g, FinAlgebra b, ModuleAction action);
  const Field& field() const { return b.field(); }
};

/// Claim ids accepted by verify_claim, in canonical order.
const std::vector<std::string>& claim_ids();
bool is_claim_id(const std::string& id);

/// Throws std::invalid_argument for unknown ids. Every finding, including
/// unmet hypotheses, is report content.
Report verify_claim(const std::string& claim_id, const DualityContext& ctx);

/// Compares ker φ against span of the given strata and checks that the
/// `empty` strata have no members (used for worked examples with a stated
/// kernel).
Report verify_expected_kernel(const DualityContext& ctx, const std::vector<Stratum>& kernel_strata,
                              const std::vector<Stratum>& empty_strata);

std::optional<Stratum> parse_stratum(const std::string& name);

}  // namespace wh
