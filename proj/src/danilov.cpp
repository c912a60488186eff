#include "toric/danilov.hpp"

#include <omp.h>

#include <exception>

#include "toric/error.hpp"

namespace toric {

namespace {

// Coordinates adapted to a working lattice M: functionals u ↦ z with z ∈ ℤⁿ
// iff u ∈ M, points transformed dually so pairings are unchanged.
class WorkingFrame {
 public:
  explicit WorkingFrame(const Sublattice& m) : standard_(m == Sublattice::standard(m.ambient_rank())) {
    if (!m.is_full_rank()) throw Error(ErrorKind::NotFullRank, "working lattice must have full rank");
    if (!standard_) change_.emplace(dual_lattice(m));
  }

  IntVector degree(const RatVector& m) const {
    RatVector z = standard_ ? m : change_->functional_to_new(m);
    if (!is_integral(z)) throw Error(ErrorKind::DegreeNotInLattice, "degree is not in the working lattice");
    return to_int(z);
  }

  Cone cone(const Cone& sigma) const { return standard_ ? sigma : transform_cone(sigma, change_->point_map()); }

  Polyhedron polyhedron(const Polyhedron& p) const {
    return standard_ ? p : p.transformed(change_->functional_map());
  }

  Sublattice to_ambient(const Sublattice& l) const {
    if (standard_) return l;
    std::vector<RatVector> gens;
    for (const auto& b : l.basis()) gens.push_back(change_->functional_to_old(b));
    return Sublattice::from_generators(gens, l.ambient_rank());
  }

 private:
  bool standard_;
  std::optional<LatticeChange> change_;
};

Polyhedron difference_body(const Cone& sigma, const IntVector& m) {
  // u ∈ σ^∨ and m − u ∈ σ^∨.
  std::vector<Halfspace> hs;
  for (const auto& g : sigma.generators()) {
    hs.push_back({g, Int(0)});
    IntVector neg = scaled(g, Int(-1));
    hs.push_back({std::move(neg), -dot(g, m)});
  }
  return Polyhedron(sigma.ambient_rank(), std::move(hs));
}

GradedPieceReport f_dim_standard(const Cone& sigma, const IntVector& m, Execution exec) {
  const std::size_t n = sigma.ambient_rank();
  GradedPieceReport r;
  r.degree_in_lattice = to_rat(m);
  r.image_lattice = Sublattice(n);
  Cone dual = sigma.dual();
  if (!dual.contains(m)) return r;
  r.in_dual_cone = true;
  Cone face = smallest_face_containing(dual, to_rat(m));
  r.face_dim = face.dim();
  r.dim_tilde = face.dim();
  Sublattice ceiling = span(face);
  r.image_lattice = search_lattice_span(difference_body(sigma, m), ceiling, exec).span;
  r.dim_f = r.dim_tilde - r.image_lattice.rank();
  return r;
}

}  // namespace

std::size_t tilde_omega_dim(const Cone& sigma, const RatVector& m, const Sublattice& lattice) {
  WorkingFrame frame(lattice);
  IntVector z = frame.degree(m);
  Cone dual = frame.cone(sigma).dual();
  if (!dual.contains(z)) return 0;
  return smallest_face_containing(dual, to_rat(z)).dim();
}

Sublattice image_lattice(const Cone& sigma, const RatVector& m, const Sublattice& lattice, Execution exec) {
  WorkingFrame frame(lattice);
  IntVector z = frame.degree(m);
  Cone local = frame.cone(sigma);
  if (!local.dual().contains(z)) throw Error(ErrorKind::DegreeNotInCone, "degree is not in the dual cone");
  return frame.to_ambient(f_dim_standard(local, z, exec).image_lattice);
}

Sublattice lattice_points_span(const Polyhedron& p, const Sublattice& lattice, Execution exec) {
  WorkingFrame frame(lattice);
  return frame.to_ambient(search_lattice_span(frame.polyhedron(p), std::nullopt, exec).span);
}

GradedPieceReport f_dim(const Cone& sigma, const RatVector& m, const Sublattice& lattice, Execution exec) {
  WorkingFrame frame(lattice);
  IntVector z = frame.degree(m);
  GradedPieceReport r = f_dim_standard(frame.cone(sigma), z, exec);
  r.degree = m;
  r.image_lattice = frame.to_ambient(r.image_lattice);
  return r;
}

WallIntersections wall_intersections(const Fan& fan) {
  WallIntersections out;
  const auto& walls = fan.cones(2);
  for (std::size_t i = 0; i < walls.size(); ++i)
    for (std::size_t j = i + 1; j < walls.size(); ++j) {
      Cone meet = intersect(walls[i].cone, walls[j].cone);
      out.max_dim = std::max(out.max_dim, meet.dim());
      if (!is_smooth(meet)) out.all_smooth = false;
    }
  return out;
}

H1Certificate h1_wall_certificate(const Fan& fan, const RayIndices& wall, const RatVector& m, const Sublattice& lattice,
                                  Execution exec) {
  if (fan.rank() != 3) throw Error(ErrorKind::WrongDimension, "certificate needs a rank-3 fan");
  if (!is_complete(fan)) throw Error(ErrorKind::NotComplete, "certificate needs a complete fan");
  return h1_wall_certificate(fan, wall, m, lattice, wall_intersections(fan), exec);
}

H1Certificate h1_wall_certificate(const Fan& fan, const RayIndices& wall, const RatVector& m, const Sublattice& lattice,
                                  const WallIntersections& intersections, Execution exec) {
  if (fan.rank() != 3) throw Error(ErrorKind::WrongDimension, "certificate needs a rank-3 fan");
  const FanCone* tau = fan.cone_by_rays(wall);
  if (!tau || tau->cone.dim() != 2) throw Error(ErrorKind::NotAWall, "not a 2-dimensional cone of the fan");
  auto owners = fan.maximal_cones_containing(tau->rays);
  if (owners.size() != 2) throw Error(ErrorKind::NotAWall, "cone is not contained in exactly two maximal cones");
  if (!lattice.contains(m)) throw Error(ErrorKind::DegreeNotInLattice, "degree is not in the working lattice");

  H1Certificate cert;
  cert.wall = tau->rays;
  cert.sigma1 = owners[0];
  cert.sigma2 = owners[1];
  cert.degree = m;
  cert.lattice = lattice;
  cert.wall_report = f_dim(tau->cone, m, lattice, exec);
  cert.sigma1_report = f_dim(fan.maximal_cone(owners[0]), m, lattice, exec);
  cert.sigma2_report = f_dim(fan.maximal_cone(owners[1]), m, lattice, exec);
  cert.intersections = intersections;
  cert.valid = cert.sigma1_report.dim_f == 0 && cert.sigma2_report.dim_f == 0 && cert.wall_report.dim_f >= 1 &&
               intersections.max_dim <= 1 && intersections.all_smooth;
  return cert;
}

std::vector<H1Certificate> find_h1_witness(const Fan& fan, const Sublattice& lattice, long radius, Execution exec) {
  if (fan.rank() != 3) throw Error(ErrorKind::WrongDimension, "search needs a rank-3 fan");
  if (!is_complete(fan)) throw Error(ErrorKind::NotComplete, "search needs a complete fan");
  if (!lattice.is_full_rank()) throw Error(ErrorKind::NotFullRank, "working lattice must have full rank");
  const WallIntersections meets = wall_intersections(fan);
  const std::vector<RatVector> lattice_basis = lattice.basis();

  struct Candidate {
    const FanCone* wall;
    RatVector degree;
  };
  std::vector<Candidate> candidates;
  std::vector<RatVector> degrees;
  for (long r = 0; r <= radius; ++r)
    for (const auto& z : sup_norm_shell(3, r)) degrees.push_back(row_times(to_rat(z), lattice_basis));
  for (const auto& wall : fan.cones(2)) {
    Cone dual = wall.cone.dual();
    for (const auto& m : degrees)
      if (dual.in_relative_interior(m)) candidates.push_back({&wall, m});
  }

  std::vector<std::optional<H1Certificate>> results(candidates.size());
  std::exception_ptr failure;
  auto evaluate = [&](std::size_t i, Execution inner) {
    try {
      H1Certificate c = h1_wall_certificate(fan, candidates[i].wall->rays, candidates[i].degree, lattice, meets, inner);
      if (c.valid) results[i] = std::move(c);
    } catch (...) {
#pragma omp critical(toric_search_failure)
      if (!failure) failure = std::current_exception();
    }
  };
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < candidates.size(); ++i) evaluate(i, Execution::serial);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < candidates.size(); ++i) evaluate(i, Execution::serial);
  }

  if (failure) std::rethrow_exception(failure);

  std::vector<H1Certificate> out;
  for (auto& r : results)
    if (r) out.push_back(std::move(*r));
  return out;
}

std::string certificate_commentary(const H1Certificate& cert) {
  if (!cert.valid) return "no conclusion: the degree-m data does not force H^1(X,F) != 0";
  return "degree m: H^0(U_sigma1,F)_m = H^0(U_sigma2,F)_m = 0, H^0(U_tau,F)_m != 0, "
         "other intersections are smooth rays; hence H^1(X,F)_m != 0. "
         "Statement about perfect complexes only; not a vector bundle.";
}

}  // namespace toric
