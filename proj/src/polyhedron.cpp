#include "toric/polyhedron.hpp"

#include "toric/error.hpp"

namespace toric {

Polyhedron::Polyhedron(std::size_t n, std::vector<Halfspace> halfspaces)
    : n_(n), halfspaces_(std::move(halfspaces)) {
  // Homogenize: (x, t) with ⟨u, x⟩ − c·t ≥ 0 and t ≥ 0.
  std::vector<IntVector> cone_ineqs;
  for (const auto& h : halfspaces_) {
    if (h.normal.size() != n_) throw Error(ErrorKind::InvalidInput, "halfspace length mismatch");
    IntVector row = h.normal;
    row.push_back(-h.offset);
    cone_ineqs.push_back(std::move(row));
  }
  IntVector t_ge_0(n_ + 1, Int(0));
  t_ge_0[n_] = 1;
  cone_ineqs.push_back(std::move(t_ge_0));

  Cone hom = Cone::from_inequalities(n_ + 1, cone_ineqs);
  for (const auto& r : hom.rays()) {
    IntVector x(r.begin(), r.end() - 1);
    const Int& t = r.back();
    if (t == 0) {
      rays_.push_back(std::move(x));
    } else {
      RatVector v(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        v[i] = Rat(x[i], t);
        v[i].canonicalize();
      }
      vertices_.push_back(std::move(v));
    }
  }
  for (const auto& l : hom.lineality()) lineality_.emplace_back(l.begin(), l.end() - 1);
  if (vertices_.empty()) throw Error(ErrorKind::EmptyPolyhedron, "polyhedron is empty");
}

Polyhedron Polyhedron::from_rational(std::size_t n, const std::vector<std::pair<RatVector, Rat>>& halfspaces) {
  std::vector<Halfspace> hs;
  for (const auto& [u, c] : halfspaces) {
    RatVector row = u;
    row.push_back(c);
    Int d = common_denominator(row);
    Halfspace h;
    h.normal.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rat x = u[i] * Rat(d);
      h.normal[i] = x.get_num();
    }
    Rat off = c * Rat(d);
    h.offset = off.get_num();
    hs.push_back(std::move(h));
  }
  return Polyhedron(n, std::move(hs));
}

bool Polyhedron::contains(const RatVector& x) const {
  for (const auto& h : halfspaces_)
    if (dot(x, h.normal) < Rat(h.offset)) return false;
  return true;
}

bool Polyhedron::contains(const IntVector& x) const {
  for (const auto& h : halfspaces_)
    if (dot(x, h.normal) < h.offset) return false;
  return true;
}

Polyhedron Polyhedron::transformed(const std::vector<RatVector>& point_map) const {
  // ⟨u, x⟩ with x = y·T⁻¹ becomes ⟨u·(T⁻¹)ᵀ, y⟩.
  std::vector<RatVector> inv = rational_inverse(point_map);
  std::vector<std::pair<RatVector, Rat>> hs;
  for (const auto& h : halfspaces_) {
    RatVector u(n_, Rat(0));
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) u[j] += inv[j][k] * Rat(h.normal[k]);
    hs.emplace_back(std::move(u), Rat(h.offset));
  }
  return from_rational(n_, hs);
}

}  // namespace toric
