#pragma once

#include <cstddef>
#include <vector>

#include "toric/arith.hpp"
#include "toric/cone.hpp"

namespace toric {

/// ⟨normal, x⟩ ≥ offset
struct Halfspace {
  IntVector normal;
  Int offset;
};

/// Rational polyhedron {x : ⟨uᵢ, x⟩ ≥ cᵢ} with its derived V-description.
class Polyhedron {
 public:
  /// Throws EmptyPolyhedron if the system is infeasible.
  Polyhedron(std::size_t n, std::vector<Halfspace> halfspaces);

  /// Accepts rational offsets; each inequality is scaled to integers.
  static Polyhedron from_rational(std::size_t n, const std::vector<std::pair<RatVector, Rat>>& halfspaces);

  std::size_t ambient_rank() const { return n_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

  /// Minimal-face representatives (vertices when pointed).
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& lineality() const { return lineality_; }

  bool contains(const RatVector& x) const;
  bool contains(const IntVector& x) const;

  bool is_bounded() const { return rays_.empty() && lineality_.empty(); }

  /// Image under x ↦ x·T for an invertible T given by rows.
  Polyhedron transformed(const std::vector<RatVector>& point_map) const;

 private:
  std::size_t n_;
  std::vector<Halfspace> halfspaces_;
  std::vector<RatVector> vertices_;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lineality_;
};

}  // namespace toric
