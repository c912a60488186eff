#include "toric/fan.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>

#include "toric/error.hpp"

namespace toric {

namespace {

bool is_subset(const RayIndices& small, const RayIndices& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<IntVector> ray_vectors(const std::vector<IntVector>& rays, const RayIndices& idx) {
  std::vector<IntVector> out;
  for (auto i : idx) out.push_back(rays[i]);
  return out;
}

}  // namespace

Fan::Fan(std::size_t rank, std::vector<IntVector> rays, std::vector<RayIndices> maximal_cones,
         std::map<std::string, RayIndices> labels)
    : rank_(rank), rays_(std::move(rays)), maximal_(std::move(maximal_cones)), labels_(std::move(labels)) {
  for (const auto& r : rays_) {
    if (r.size() != rank_) throw Error(ErrorKind::InvalidInput, "ray length does not match fan rank");
    if (is_zero(r)) throw Error(ErrorKind::InvalidInput, "zero ray");
  }
  if (maximal_.empty()) throw Error(ErrorKind::InvalidInput, "fan has no cones");
  auto check_indices = [&](RayIndices& idx, const std::string& what) {
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
      throw Error(ErrorKind::InvalidInput, "repeated ray index in " + what);
    }
    for (auto i : idx)
      if (i >= rays_.size()) throw Error(ErrorKind::InvalidInput, "ray index out of range in " + what);
  };
  for (auto& c : maximal_) check_indices(c, "maximal cone");
  for (auto& [name, idx] : labels_) check_indices(idx, "label '" + name + "'");
  std::sort(maximal_.begin(), maximal_.end());
  if (std::adjacent_find(maximal_.begin(), maximal_.end()) != maximal_.end()) {
    throw Error(ErrorKind::InvalidInput, "repeated maximal cone");
  }

  std::vector<std::map<RayIndices, Cone>> levels(rank_ + 1);
  for (const auto& idx : maximal_) {
    Cone c = Cone::from_generators(rank_, ray_vectors(rays_, idx));
    for (const auto& level : faces(c)) {
      for (const auto& f : level) {
        RayIndices sub;
        for (auto i : idx)
          if (f.contains(rays_[i])) sub.push_back(i);
        levels[f.dim()].try_emplace(std::move(sub), f);
      }
    }
    maximal_cones_geo_.push_back(std::move(c));
  }
  by_dim_.resize(rank_ + 1);
  for (std::size_t d = 0; d <= rank_; ++d)
    for (auto& [idx, cone] : levels[d]) by_dim_[d].push_back({idx, cone});
}

const std::vector<FanCone>& Fan::cones(std::size_t dim) const {
  static const std::vector<FanCone> empty;
  return dim < by_dim_.size() ? by_dim_[dim] : empty;
}

std::optional<std::size_t> Fan::find_cone(const RayIndices& rays) const {
  RayIndices key = rays;
  std::sort(key.begin(), key.end());
  for (const auto& level : by_dim_) {
    auto it = std::lower_bound(level.begin(), level.end(), key,
                               [](const FanCone& c, const RayIndices& k) { return c.rays < k; });
    if (it != level.end() && it->rays == key) return static_cast<std::size_t>(it - level.begin());
  }
  return std::nullopt;
}

const FanCone* Fan::cone_by_rays(const RayIndices& rays) const {
  RayIndices key = rays;
  std::sort(key.begin(), key.end());
  for (const auto& level : by_dim_)
    for (const auto& c : level)
      if (c.rays == key) return &c;
  return nullptr;
}

std::vector<std::size_t> Fan::maximal_cones_containing(const RayIndices& rays) const {
  RayIndices key = rays;
  std::sort(key.begin(), key.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < maximal_.size(); ++i)
    if (is_subset(key, maximal_[i])) out.push_back(i);
  return out;
}

std::optional<std::size_t> Fan::ray_index(const IntVector& v) const {
  IntVector p = primitive(v);
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (rays_[i] == p) return i;
  return std::nullopt;
}

std::optional<RayIndices> Fan::label(const std::string& name) const {
  auto it = labels_.find(name);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------- validation

ValidationReport validate(const Fan& fan) {
  ValidationReport report;
  auto flag = [&](std::string kind, std::vector<std::size_t> cones, std::string msg) {
    report.valid = false;
    report.violations.push_back({std::move(kind), std::move(cones), std::move(msg)});
  };

  const auto& rays = fan.rays();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (content(rays[i]) != 1) flag("non_primitive_ray", {i}, "ray is not primitive");
    for (std::size_t j = i + 1; j < rays.size(); ++j)
      if (primitive(rays[i]) == primitive(rays[j])) flag("duplicate_ray", {i, j}, "rays span the same half-line");
  }
  std::vector<bool> used(rays.size(), false);
  for (const auto& c : fan.maximal_cones())
    for (auto i : c) used[i] = true;
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (!used[i]) flag("unused_ray", {i}, "ray is not in any maximal cone");

  const std::size_t k = fan.maximal_count();
  for (std::size_t i = 0; i < k; ++i) {
    const Cone& c = fan.maximal_cone(i);
    if (!c.is_pointed()) {
      flag("not_pointed", {i}, "maximal cone contains a line");
      continue;
    }
    std::set<IntVector> extremal(c.rays().begin(), c.rays().end());
    for (auto r : fan.maximal_cones()[i])
      if (!extremal.count(primitive(rays[r]))) flag("non_extremal_ray", {i, r}, "listed ray is not extremal");
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Cone& a = fan.maximal_cone(i);
      const Cone& b = fan.maximal_cone(j);
      Cone meet = intersect(a, b);
      if (meet == a || meet == b) {
        flag("not_maximal", {i, j}, "one maximal cone contains the other");
      } else if (!is_face_of(meet, a) || !is_face_of(meet, b)) {
        flag("bad_intersection", {i, j}, "intersection is not a common face");
      }
    }
  }
  return report;
}

bool is_complete(const Fan& fan) {
  if (!validate(fan).valid) throw Error(ErrorKind::InvalidFan, "fan failed validation");
  const std::size_t n = fan.rank();
  const std::size_t k = fan.maximal_count();
  for (std::size_t i = 0; i < k; ++i)
    if (fan.maximal_cone(i).dim() != n) return false;
  if (n == 0) return true;

  std::vector<std::vector<std::size_t>> adj(k);
  for (const auto& wall : fan.cones(n - 1)) {
    auto owners = fan.maximal_cones_containing(wall.rays);
    if (owners.size() != 2) return false;
    adj[owners[0]].push_back(owners[1]);
    adj[owners[1]].push_back(owners[0]);
  }
  std::vector<bool> seen(k, false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        q.push(w);
      }
  }
  if (reached != k) return false;

  std::mt19937_64 rng(0x746f726963ULL);
  std::uniform_int_distribution<long> coord(-1000000, 1000000);
  for (int s = 0; s < 100; ++s) {
    IntVector dir(n);
    for (auto& x : dir) x = coord(rng);
    bool covered = false;
    for (std::size_t i = 0; i < k && !covered; ++i) covered = fan.maximal_cone(i).contains(dir);
    if (!covered) return false;
  }
  return true;
}

FanStats stats(const Fan& fan) {
  FanStats s;
  for (std::size_t d = 1; d <= fan.rank(); ++d) s.f.push_back(fan.cones(d).size());
  s.m_rho.assign(fan.rays().size(), 0);
  s.n_sigma.assign(fan.maximal_count(), 0);
  for (const auto& c : fan.cones(2)) {
    for (auto r : c.rays) ++s.m_rho[r];
    for (std::size_t i = 0; i < fan.maximal_count(); ++i)
      if (is_subset(c.rays, fan.maximal_cones()[i])) ++s.n_sigma[i];
  }
  return s;
}

bool euler_check(const Fan& fan) {
  if (fan.rank() != 3) throw Error(ErrorKind::WrongDimension, "Euler check needs a rank-3 fan");
  if (!is_complete(fan)) throw Error(ErrorKind::NotComplete, "Euler check needs a complete fan");
  FanStats s = stats(fan);
  return static_cast<long>(s.f[0]) - static_cast<long>(s.f[1]) + static_cast<long>(s.f[2]) == 2;
}

// ------------------------------------------------------------------ builders

Fan build_face_fan(const std::vector<IntVector>& points) {
  if (points.empty()) throw Error(ErrorKind::OriginNotInterior, "no points");
  const std::size_t n = points.front().size();
  std::vector<IntVector> lifted;
  for (const auto& p : points) {
    if (p.size() != n) throw Error(ErrorKind::InvalidInput, "point length mismatch");
    IntVector q = p;
    q.push_back(1);
    lifted.push_back(std::move(q));
  }
  Cone hom = Cone::from_generators(n + 1, lifted);
  if (hom.dim() != n + 1) throw Error(ErrorKind::OriginNotInterior, "points do not span a full-dimensional polytope");
  for (const auto& u : hom.inequalities())
    if (u.back() <= 0) throw Error(ErrorKind::OriginNotInterior, "origin is not in the interior of the hull");

  std::set<IntVector> extremal(hom.rays().begin(), hom.rays().end());
  std::vector<IntVector> rays;
  std::vector<long> ray_of_point(points.size(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!extremal.count(primitive(lifted[i]))) continue;
    IntVector r = primitive(points[i]);
    if (std::find(rays.begin(), rays.end(), r) != rays.end()) continue;
    ray_of_point[i] = static_cast<long>(rays.size());
    rays.push_back(std::move(r));
  }
  std::vector<RayIndices> cones;
  for (const auto& u : hom.inequalities()) {
    RayIndices idx;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (ray_of_point[i] >= 0 && dot(u, lifted[i]) == 0) idx.push_back(static_cast<std::size_t>(ray_of_point[i]));
    cones.push_back(std::move(idx));
  }
  return Fan(n, std::move(rays), std::move(cones));
}

namespace {

std::vector<IntVector> cube_vertices() {
  std::vector<IntVector> pts;
  for (long x : {-1, 1})
    for (long y : {-1, 1})
      for (long z : {-1, 1}) pts.push_back(make_int_vector({x, y, z}));
  return pts;
}

}  // namespace

Fan build_cube_fan() { return build_face_fan(cube_vertices()); }

Fan build_octahedron_fan() {
  return build_face_fan({make_int_vector({1, 0, 0}), make_int_vector({-1, 0, 0}), make_int_vector({0, 1, 0}),
                         make_int_vector({0, -1, 0}), make_int_vector({0, 0, 1}), make_int_vector({0, 0, -1})});
}

Fan build_p1_fan() { return Fan(1, {make_int_vector({1}), make_int_vector({-1})}, {{0}, {1}}); }

Fan build_payne_fan() {
  std::vector<IntVector> pts = cube_vertices();
  for (auto& p : pts) {
    if (p == make_int_vector({1, -1, 1})) p = make_int_vector({1, -1, 2});
    if (p == make_int_vector({1, 1, 1})) p = make_int_vector({1, 2, 3});
  }
  Fan hull = build_face_fan(pts);
  auto idx = [&](std::initializer_list<long> v) {
    auto i = hull.ray_index(make_int_vector(v));
    if (!i) throw Error(ErrorKind::CertificateInvalid, "Payne fan is missing an expected ray");
    return *i;
  };
  std::map<std::string, RayIndices> labels{
      {"tau", {idx({1, -1, -1}), idx({1, -1, 2})}},
      {"sigma1", {idx({1, -1, -1}), idx({1, -1, 2}), idx({1, 1, -1}), idx({1, 2, 3})}},
      {"sigma2", {idx({1, -1, -1}), idx({1, -1, 2}), idx({-1, -1, -1}), idx({-1, -1, 1})}},
  };
  Fan fan(hull.rank(), hull.rays(), hull.maximal_cones(), std::move(labels));
  for (const auto& [name, rays] : fan.labels()) {
    if (!fan.cone_by_rays(rays)) throw Error(ErrorKind::CertificateInvalid, "Payne fan lacks cone " + name);
  }
  return fan;
}

// ------------------------------------------------------------ lattice change

LatticeChange::LatticeChange(const Sublattice& new_n) : new_n_(new_n) {
  if (!new_n.is_full_rank()) throw Error(ErrorKind::NotFullRank, "new lattice must have full rank");
  const std::size_t n = new_n.ambient_rank();
  new_m_ = dual_lattice(new_n);
  basis_ = new_n.basis();
  to_new_ = rational_inverse(basis_);
  m_to_new_ = transpose(basis_, n);
  m_to_old_ = rational_inverse(m_to_new_);
}

RatVector LatticeChange::point_to_new(const RatVector& x) const { return row_times(x, to_new_); }
RatVector LatticeChange::point_to_old(const RatVector& y) const { return row_times(y, basis_); }
RatVector LatticeChange::functional_to_new(const RatVector& u) const { return row_times(u, m_to_new_); }
RatVector LatticeChange::functional_to_old(const RatVector& z) const { return row_times(z, m_to_old_); }

Fan reindex_lattice(const Fan& fan, const Sublattice& new_n) {
  if (new_n.ambient_rank() != fan.rank()) throw Error(ErrorKind::InvalidInput, "lattice rank mismatch");
  LatticeChange change(new_n);
  std::vector<IntVector> rays;
  for (const auto& r : fan.rays()) rays.push_back(primitive(change.point_to_new(to_rat(r))));
  return Fan(fan.rank(), std::move(rays), fan.maximal_cones(), fan.labels());
}

}  // namespace toric
