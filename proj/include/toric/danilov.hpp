#pragma once

// Graded pieces of the cokernel F = Coker(Ω¹ → Ω̃¹) on affine pieces U_σ,
// computed as lattice ranks:
//   dim Ω̃¹(U_σ)_m = dim Span(σ^∨_m)          (0 if m ∉ σ^∨)
//   image lattice   = ℤ-span of σ^∨ ∩ (m − σ^∨) ∩ M
//   dim F(U_σ)_m    = dim Ω̃¹(U_σ)_m − rank(image lattice)
// Torsion of the quotient is invisible over a characteristic-0 field.
//
// The working lattice M may be any full-rank lattice in ℚⁿ (for instance an
// overlattice M′ ⊃ ℤⁿ); the computation happens in coordinates of a basis
// of M and results are mapped back.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/cone.hpp"
#include "toric/fan.hpp"
#include "toric/lattice_points.hpp"
#include "toric/linalg.hpp"
#include "toric/polyhedron.hpp"

namespace toric {

struct GradedPieceReport {
  RatVector degree;             // ambient coordinates
  RatVector degree_in_lattice;  // coordinates in the working lattice
  bool in_dual_cone = false;
  std::size_t face_dim = 0;  // dim σ^∨_m
  std::size_t dim_tilde = 0;
  Sublattice image_lattice;  // ambient coordinates
  std::size_t dim_f = 0;
};

/// Throws DegreeNotInLattice if m ∉ M.
std::size_t tilde_omega_dim(const Cone& sigma, const RatVector& m, const Sublattice& lattice);

/// Throws DegreeNotInLattice / DegreeNotInCone.
Sublattice image_lattice(const Cone& sigma, const RatVector& m, const Sublattice& lattice,
                         Execution exec = Execution::parallel);

/// ℤ-span of P ∩ M. Throws EmptyPolyhedron (from P's construction).
Sublattice lattice_points_span(const Polyhedron& p, const Sublattice& lattice, Execution exec = Execution::parallel);

GradedPieceReport f_dim(const Cone& sigma, const RatVector& m, const Sublattice& lattice,
                        Execution exec = Execution::parallel);

/// Pairwise intersections of distinct 2-dimensional cones of a fan.
struct WallIntersections {
  std::size_t max_dim = 0;
  bool all_smooth = true;
};

WallIntersections wall_intersections(const Fan& fan);

struct H1Certificate {
  RayIndices wall;
  std::size_t sigma1 = 0;  // maximal-cone indices, ascending
  std::size_t sigma2 = 0;
  RatVector degree;
  Sublattice lattice;
  GradedPieceReport wall_report;
  GradedPieceReport sigma1_report;
  GradedPieceReport sigma2_report;
  WallIntersections intersections;
  bool valid = false;
};

/// Degree-m Mayer–Vietoris certificate for H¹(X, F) ≠ 0 at a wall.
/// Throws WrongDimension, NotComplete, NotAWall, DegreeNotInLattice.
H1Certificate h1_wall_certificate(const Fan& fan, const RayIndices& wall, const RatVector& m, const Sublattice& lattice,
                                  Execution exec = Execution::parallel);

/// Same, with the fan-wide intersection summary supplied by the caller.
H1Certificate h1_wall_certificate(const Fan& fan, const RayIndices& wall, const RatVector& m, const Sublattice& lattice,
                                  const WallIntersections& intersections, Execution exec);

/// Every valid certificate over all walls and all m ∈ M (coordinates in M's
/// basis with sup-norm ≤ radius) in the relative interior of τ^∨. Ordered by
/// wall index, then (sup-norm, lexicographic) degree.
std::vector<H1Certificate> find_h1_witness(const Fan& fan, const Sublattice& lattice, long radius,
                                           Execution exec = Execution::parallel);

/// Interpretation attached to serialized certificates.
std::string certificate_commentary(const H1Certificate& cert);

}  // namespace toric
