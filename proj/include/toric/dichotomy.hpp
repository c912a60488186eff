#pragma once

// Complete rank-3 fans either carry a nontrivial integral conewise linear
// function (every ray has at least four neighbouring 2-cones), or some ray
// has exactly three and a finite-index sublattice N′ ⊂ N yields an H¹
// certificate at the half-integral degree m = l/2.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/cpl.hpp"
#include "toric/danilov.hpp"
#include "toric/fan.hpp"

namespace toric {

/// m_ρ for every ray. Throws NotComplete.
std::vector<std::size_t> classify_rays(const Fan& fan);

/// First l ∈ M (sup-norm, then lexicographic, in coordinates of M's basis)
/// with l ∈ RelInt τ^∨, l ∉ τ₁^∨, l ∉ τ₂^∨. Throws SearchExhausted.
IntVector choose_l(const Cone& tau, const Cone& tau1, const Cone& tau2, const Sublattice& lattice, long radius);

struct SublatticeConstruction {
  IntVector n_vec;            // first point of N outside Span(τ)
  Sublattice n1;              // Span(n) ∩ N
  Sublattice n2;              // Span(τ) ∩ N
  IntVector w1, w2;           // primitive generators of τ
  Int c1, c2, q;              // cᵢ = ⟨l, wᵢ⟩, q = c₁c₂
  IntVector v1, v2;           // v₁ = c₂w₁, v₂ = c₁w₂
  Sublattice n2_refined;      // span{v₁, v₂}
  Sublattice n_double_prime;  // N₁ + span{v₁, v₂}
  RatVector l_scaled;         // l / q
  RatVector m;                // l / (2q)
  Sublattice m_double_prime;  // dual of N″
  Sublattice m_prime;         // M″ + mℤ
  Sublattice n_prime;         // dual of M′
  Int index_in_n;             // [N : N′]

  // Checked postconditions.
  bool tau_smooth_in_n_double_prime = false;  // with primitive generators v₁, v₂
  bool l_scaled_is_one_on_v = false;
  bool m_in_m_prime = false;
  bool n_prime_in_n = false;
  bool tau_smooth_in_n_prime = false;  // expected false: τ is an A₁ singularity there
};

/// Throws LNotInRelativeInterior, InvalidInput (τ not 2-dimensional).
SublatticeConstruction build_sublattice(const Cone& tau, const IntVector& l, const Sublattice& lattice_n);

enum class Branch { LineBundle, KGroup };

struct LabelingAttempt {
  RayIndices tau;
  bool succeeded = false;
  std::string diagnostics;
};

struct KGroupWitness {
  std::size_t ray = 0;
  RayIndices tau, tau1, tau2;
  std::vector<LabelingAttempt> attempts;
  IntVector l;
  SublatticeConstruction sublattice;
  Fan reindexed_fan;
  RatVector m_in_m_prime_coords;
  H1Certificate certificate;  // on the reindexed fan, M′ = ℤ³
  H1Certificate certificate_original_coords;  // same data with M = M′ in ℚ³
  bool m_outside_sigma_duals = false;
  bool sigmas_contain_side_walls = false;
};

struct DichotomyResult {
  Branch branch = Branch::LineBundle;
  std::optional<NontrivialCPL> line_bundle_witness;
  std::optional<CountReport> counts;
  std::optional<KGroupWitness> kgroup_witness;
};

/// Throws InvalidFan, WrongDimension, NotComplete, SearchExhausted,
/// CertificateInvalid.
DichotomyResult run_dichotomy(const Fan& fan, long radius = 10, Execution exec = Execution::parallel);

}  // namespace toric
