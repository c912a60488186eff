#pragma once

// Lattice-point span kernels. The serial kernel is the reference; the
// OpenMP kernel must return the identical (canonical) lattice.

#include <cstddef>
#include <optional>

#include "toric/linalg.hpp"
#include "toric/polyhedron.hpp"

namespace toric {

enum class Execution { serial, parallel };

/// Incrementally maintained ℤ-span of a stream of integer vectors.
class LatticeAccumulator {
 public:
  explicit LatticeAccumulator(std::size_t n) : lattice_(n) {}

  void add(const IntVector& v);
  void add(const Sublattice& other);
  const Sublattice& lattice() const { return lattice_; }

 private:
  Sublattice lattice_;
};

/// ℤ-span of P ∩ ℤⁿ ∩ [−radius, radius]ⁿ. Prefixes are bounded by
/// Fourier–Motzkin projections of P and the last coordinate is solved as an
/// interval, so only prefixes over the projection of P are visited.
Sublattice box_points_span(const Polyhedron& p, long radius, Execution exec = Execution::parallel);

/// Box radius the stabilization search starts from: ⌈max vertex sup-norm⌉
/// plus the sup-norms of the ray and lineality generators.
long initial_span_radius(const Polyhedron& p);

struct SpanSearchResult {
  Sublattice span;
  long initial_radius = 0;
  long final_radius = 0;
  bool hit_ceiling = false;
};

/// ℤ-span of P ∩ ℤⁿ: start at initial_span_radius, double the box until the
/// span is unchanged across three consecutive doublings. A bounded P needs
/// only the first box. The search also stops once the span reaches the
/// lattice of integer points of the affine hull, or `ceiling` if given (a
/// lattice known to contain the answer).
SpanSearchResult search_lattice_span(const Polyhedron& p, const std::optional<Sublattice>& ceiling = std::nullopt,
                                     Execution exec = Execution::parallel);

}  // namespace toric
