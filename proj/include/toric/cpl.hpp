#pragma once

// Single-valued conewise linear functions: one functional per maximal cone,
// agreeing on the span of every pairwise intersection.

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

struct CPLFunction {
  /// Functional on each maximal cone, indexed like Fan::maximal_cones().
  std::vector<RatVector> pieces;

  /// Value at a ray; uses the first maximal cone containing it.
  Rat value_at_ray(const Fan& fan, std::size_t ray) const;
  bool is_integral() const;
};

struct CPLSpace {
  std::vector<CPLFunction> basis;
  std::size_t dim = 0;
  std::size_t trivial_dim = 0;
};

/// Exact solution space of the wall-agreement system. For a maximal cone
/// that is not full-dimensional its functional is pinned inside Span(σ) so
/// that every function has a unique representation. Throws InvalidFan.
CPLSpace cpl_space(const Fan& fan);

/// Whether a per-cone assignment satisfies every agreement constraint.
bool satisfies_agreement(const Fan& fan, const CPLFunction& f);

/// Global functional u with u|σ = f|σ on every maximal cone, if one exists.
std::optional<RatVector> global_representative(const Fan& fan, const CPLFunction& f);

struct NontrivialCPL {
  CPLFunction function;  // integral
  std::size_t witness_ray = 0;
  /// ℓ_σ₀ on the first full-dimensional cone; the function differs from it at witness_ray.
  RatVector compared_against;
};

/// Integral function that is not globally linear, if dim > trivial_dim.
std::optional<NontrivialCPL> nontrivial_cpl(const Fan& fan);

struct CountReport {
  long f1 = 0, f2 = 0, f3 = 0;
  long min_m_rho = 0;
  bool all_m_rho_at_least_4 = false;
  long four_f1 = 0;
  long two_f2 = 0;
  bool four_f1_le_two_f2 = false;
  long two_f1_minus_3 = 0;
  bool f2_gt_two_f1_minus_3 = false;
  long relations = 0;            // 2·f₂ − 3·f₃
  bool excess_variables = false;  // f₁ > 2f₂ − 3f₃ + 3
  bool hypothesis_holds = false;
  long cpl_dim = 0;
};

/// Counting argument for complete rank-3 fans. When every ray has at least
/// four neighbours the inequality chain is asserted (CertificateInvalid if
/// it fails). Throws NotComplete / WrongDimension.
CountReport counting_certificate(const Fan& fan);

}  // namespace toric
