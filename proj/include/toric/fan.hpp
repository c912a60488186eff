#pragma once

// Fans: rays (primitive vectors, input order) and maximal cones given by ray
// indices. The face closure is derived eagerly at construction; faces are
// identified by their sorted ray-index sets.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/cone.hpp"
#include "toric/linalg.hpp"

namespace toric {

using RayIndices = std::vector<std::size_t>;

struct FanCone {
  RayIndices rays;
  Cone cone;
};

class Fan {
 public:
  Fan() = default;

  /// Throws InvalidInput on structural problems (bad index, wrong vector
  /// length, zero ray, empty cone list). Geometric problems are left to
  /// validate(). Each maximal cone's index list is sorted and the list of
  /// maximal cones is sorted lexicographically.
  Fan(std::size_t rank, std::vector<IntVector> rays, std::vector<RayIndices> maximal_cones,
      std::map<std::string, RayIndices> labels = {});

  std::size_t rank() const { return rank_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<RayIndices>& maximal_cones() const { return maximal_; }
  const std::map<std::string, RayIndices>& labels() const { return labels_; }

  const Cone& maximal_cone(std::size_t i) const { return maximal_cones_geo_[i]; }
  std::size_t maximal_count() const { return maximal_.size(); }

  /// All cones of the given dimension (the face closure), sorted by ray indices.
  const std::vector<FanCone>& cones(std::size_t dim) const;

  /// Position of the cone with exactly these rays inside cones(dim), if any.
  std::optional<std::size_t> find_cone(const RayIndices& rays) const;
  const FanCone* cone_by_rays(const RayIndices& rays) const;

  /// Maximal cones containing the cone with these rays.
  std::vector<std::size_t> maximal_cones_containing(const RayIndices& rays) const;

  /// Index of a ray given its coordinates (primitivized first).
  std::optional<std::size_t> ray_index(const IntVector& v) const;

  /// Ray indices of a named cone.
  std::optional<RayIndices> label(const std::string& name) const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.rank_ == b.rank_ && a.rays_ == b.rays_ && a.maximal_ == b.maximal_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<IntVector> rays_;
  std::vector<RayIndices> maximal_;
  std::map<std::string, RayIndices> labels_;
  std::vector<Cone> maximal_cones_geo_;
  std::vector<std::vector<FanCone>> by_dim_;
};

struct Violation {
  std::string kind;
  std::vector<std::size_t> cones;  // maximal-cone or ray indices, per kind
  std::string message;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

ValidationReport validate(const Fan& fan);

/// Pure, every wall in exactly two maximal cones, connected wall graph, and
/// 100 deterministic pseudo-random directions covered. Throws InvalidFan.
bool is_complete(const Fan& fan);

struct FanStats {
  std::vector<std::size_t> f;        // f[i-1] = number of i-dimensional cones
  std::vector<std::size_t> m_rho;    // per ray: 2-cones containing it
  std::vector<std::size_t> n_sigma;  // per maximal cone: 2-dimensional faces
};

FanStats stats(const Fan& fan);

/// f₁ − f₂ + f₃ = 2. Throws NotComplete / WrongDimension.
bool euler_check(const Fan& fan);

/// Fan over the facets of conv(points); throws OriginNotInterior.
Fan build_face_fan(const std::vector<IntVector>& points);
Fan build_cube_fan();
Fan build_octahedron_fan();
/// Cube fan with (1,−1,1) ↦ (1,−1,2) and (1,1,1) ↦ (1,2,3); labels
/// "tau", "sigma1", "sigma2".
Fan build_payne_fan();
/// Fan of ℙ¹ (rays ±1).
Fan build_p1_fan();

/// Change of lattice to a full-rank N′ ⊆ ℚⁿ with basis B (rows):
/// points x ↦ x·B⁻¹, functionals u ↦ u·Bᵀ. Pairings are preserved.
class LatticeChange {
 public:
  explicit LatticeChange(const Sublattice& new_n);

  const Sublattice& new_n() const { return new_n_; }
  /// Dual of new_n in old coordinates.
  const Sublattice& new_m() const { return new_m_; }

  RatVector point_to_new(const RatVector& x) const;
  RatVector point_to_old(const RatVector& y) const;
  RatVector functional_to_new(const RatVector& u) const;
  RatVector functional_to_old(const RatVector& z) const;

  /// Row matrices of the maps, for transform_cone / Polyhedron::transformed.
  const std::vector<RatVector>& point_map() const { return to_new_; }
  const std::vector<RatVector>& functional_map() const { return m_to_new_; }

 private:
  Sublattice new_n_;
  Sublattice new_m_;
  std::vector<RatVector> basis_;     // B
  std::vector<RatVector> to_new_;    // B⁻¹
  std::vector<RatVector> m_to_new_;  // Bᵀ
  std::vector<RatVector> m_to_old_;  // (Bᵀ)⁻¹
};

/// Same geometric fan in coordinates of a basis of new_n; rays re-primitivized.
Fan reindex_lattice(const Fan& fan, const Sublattice& new_n);

}  // namespace toric
