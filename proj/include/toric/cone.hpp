#pragma once

// Rational polyhedral cones in ℝⁿ with both descriptions kept canonical.
//
// A cone is held as two generator sets: its own (extremal rays plus a
// lineality basis) and its dual's. The dual's rays are the facet normals and
// the dual's lineality spans the equations Span(c)^⊥. Rays are primitive in
// ℤⁿ/Lin and reduced modulo the lineality HNF; lineality bases are HNF bases
// of saturated lattices. Everything is sorted, so cone equality is
// structural.

#include <cstddef>
#include <vector>

#include "toric/arith.hpp"
#include "toric/linalg.hpp"

namespace toric {

struct GeneratorSet {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

/// Extreme rays and lineality of {x : ⟨a, x⟩ ≥ 0 for a in constraints},
/// canonicalized. Incremental double description.
GeneratorSet double_description(std::size_t n, const std::vector<IntVector>& constraints);

/// Canonical form of a raw generator set (lineality saturated, rays reduced,
/// primitive, deduplicated, sorted). Does not drop redundant rays.
GeneratorSet canonicalize(std::size_t n, const std::vector<IntVector>& rays,
                          const std::vector<IntVector>& lineality);

class Cone {
 public:
  /// The zero cone in ℝ⁰.
  Cone();

  static Cone from_generators(std::size_t n, const std::vector<IntVector>& generators,
                              const std::vector<IntVector>& lineality = {});
  static Cone from_inequalities(std::size_t n, const std::vector<IntVector>& inequalities,
                                const std::vector<IntVector>& equations = {});
  static Cone zero(std::size_t n);
  static Cone full_space(std::size_t n);

  std::size_t ambient_rank() const { return n_; }
  std::size_t dim() const { return n_ - dual_.lineality.size(); }
  std::size_t lineality_dim() const { return primal_.lineality.size(); }
  bool is_pointed() const { return primal_.lineality.empty(); }
  bool is_full_dimensional() const { return dim() == n_; }

  const std::vector<IntVector>& rays() const { return primal_.rays; }
  const std::vector<IntVector>& lineality() const { return primal_.lineality; }
  /// Facet normals u, meaning ⟨u, x⟩ ≥ 0 on the cone.
  const std::vector<IntVector>& inequalities() const { return dual_.rays; }
  /// Basis of Span(c)^⊥ ∩ ℤⁿ.
  const std::vector<IntVector>& equations() const { return dual_.lineality; }

  /// Rays followed by ± each lineality vector.
  std::vector<IntVector> generators() const;

  Cone dual() const { return Cone(n_, dual_, primal_); }

  bool contains(const RatVector& p) const;
  bool contains(const IntVector& p) const;
  bool in_relative_interior(const RatVector& p) const;
  bool in_relative_interior(const IntVector& p) const;

  /// A lattice point in the relative interior (sum of rays).
  IntVector interior_point() const;

  friend bool operator==(const Cone& a, const Cone& b) = default;
  friend bool operator<(const Cone& a, const Cone& b);

 private:
  Cone(std::size_t n, GeneratorSet primal, GeneratorSet dual)
      : n_(n), primal_(std::move(primal)), dual_(std::move(dual)) {}

  std::size_t n_ = 0;
  GeneratorSet primal_;
  GeneratorSet dual_;
};

Cone dual_cone(const Cone& c);

/// Faces grouped by dimension: result[d] holds the d-dimensional faces,
/// each list sorted.
std::vector<std::vector<Cone>> faces(const Cone& c);
std::vector<Cone> facets(const Cone& c);

/// Throws NotInCone if p ∉ c.
Cone smallest_face_containing(const Cone& c, const RatVector& p);

bool is_smooth(const Cone& c);

Cone intersect(const Cone& a, const Cone& b);
bool is_face_of(const Cone& f, const Cone& c);

/// Span_ℚ(c) ∩ ℤⁿ.
Sublattice span(const Cone& c);

/// Cone with every generator and inequality mapped to new coordinates:
/// points x ↦ x·T, so functionals transform by the inverse transpose.
Cone transform_cone(const Cone& c, const std::vector<RatVector>& point_map);

}  // namespace toric
