#pragma once

// Multivalued conewise linear functions: a multiset of integral functionals
// on each maximal cone, compatible under restriction to common faces.

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/cpl.hpp"
#include "toric/fan.hpp"
#include "toric/polynomial.hpp"

namespace toric {

/// Sorted list of functionals; multiset equality is list equality.
class FunctionalMultiset {
 public:
  FunctionalMultiset() = default;
  explicit FunctionalMultiset(std::vector<IntVector> elements);

  const std::vector<IntVector>& elements() const { return elements_; }
  std::size_t degree() const { return elements_.size(); }
  bool contains(const IntVector& u) const;

  friend bool operator==(const FunctionalMultiset&, const FunctionalMultiset&) = default;

 private:
  std::vector<IntVector> elements_;
};

/// Restriction to Span(γ) as canonical cosets modulo Ann(γ) ∩ M.
FunctionalMultiset restrict_to(const FunctionalMultiset& s, const Cone& face);

struct MultivaluedCPL {
  Fan fan;
  std::vector<FunctionalMultiset> multisets;  // parallel to fan.maximal_cones()

  std::size_t degree() const { return multisets.empty() ? 0 : multisets.front().degree(); }
};

/// Primitive inward facet normals of a pointed full-dimensional cone, one per
/// facet, in facet-normal order. Throws NotFullDimensional / NotPointed.
std::vector<IntVector> facet_functionals(const Cone& sigma);

struct NontrivialConstruction {
  MultivaluedCPL function;
  std::size_t sigma = 0;
  std::vector<IntVector> facet_functionals;
  FunctionalMultiset odd;   // assigned to sigma
  FunctionalMultiset even;  // assigned elsewhere
};

/// Odd-parity subset sums of the facet functionals on σ, even-parity sums on
/// every other maximal cone. `sigma` defaults to the lexicographically first
/// full-dimensional maximal cone. Facet functionals are multiplied by
/// `scaling` (default 1). Throws HypothesisFailed / NotFullDimensional.
NontrivialConstruction construct_nontrivial(const Fan& fan, std::optional<std::size_t> sigma = std::nullopt,
                                            long scaling = 1);

struct Mismatch {
  std::size_t cone_a = 0;
  std::size_t cone_b = 0;
  RayIndices face;
};

struct ConsistencyReport {
  bool consistent = true;
  std::vector<Mismatch> mismatches;
};

ConsistencyReport check_consistency(const MultivaluedCPL& f);

struct TrivialityResult {
  bool trivial = false;
  std::size_t reference_cone = 0;
  std::optional<std::size_t> witness_cone;
};

/// Candidate global multiset is the one on the first full-dimensional cone.
/// Throws NoFullDimensionalCone / Inconsistent.
TrivialityResult is_trivial(const MultivaluedCPL& f);

/// Degree-1 multivalued function from a single-valued integral one.
MultivaluedCPL from_cpl(const Fan& fan, const CPLFunction& f);

/// Per maximal cone, the i-th elementary symmetric polynomial of its
/// multiset. Throws DegreeOutOfRange unless 1 ≤ i ≤ degree.
std::vector<Polynomial> elementary_symmetric(const MultivaluedCPL& f, std::size_t i);

}  // namespace toric
