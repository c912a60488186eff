#include "toric/lattice_points.hpp"

#include <omp.h>

#include <limits>
#include <set>

#include "toric/error.hpp"

namespace toric {

void LatticeAccumulator::add(const IntVector& v) {
  if (is_zero(v) || lattice_.contains(v)) return;
  std::vector<IntVector> gens = lattice_.integer_basis();
  gens.push_back(v);
  lattice_ = Sublattice::from_generators(gens, lattice_.ambient_rank());
}

void LatticeAccumulator::add(const Sublattice& other) {
  for (const auto& b : other.integer_basis()) add(b);
}

namespace {

using System = std::vector<Halfspace>;

// Drops trivially true rows and duplicates after dividing by the content of
// the normal (offsets rounded up, which is exact for integer points).
System tidy(const System& in) {
  std::set<std::pair<IntVector, Int>> seen;
  System out;
  for (const auto& h : in) {
    if (is_zero(h.normal)) continue;
    Int g = content(h.normal);
    Halfspace t{h.normal, h.offset};
    if (g != 1) {
      for (auto& x : t.normal) x /= g;
      mpz_cdiv_q(t.offset.get_mpz_t(), h.offset.get_mpz_t(), g.get_mpz_t());
    }
    if (seen.insert({t.normal, t.offset}).second) out.push_back(std::move(t));
  }
  return out;
}

// Fourier–Motzkin elimination of the last coordinate. Rows keep their full
// length; the eliminated coordinate is zero afterwards. Integer rounding is
// only applied in tidy(), so the projection stays a superset of the integer
// projection and prefixes are never wrongly discarded.
System eliminate_last(const System& s, std::size_t k) {
  System pos, neg, out;
  for (const auto& h : s) {
    if (h.normal[k] > 0)
      pos.push_back(h);
    else if (h.normal[k] < 0)
      neg.push_back(h);
    else
      out.push_back(h);
  }
  for (const auto& a : pos)
    for (const auto& b : neg) {
      Int ca = -b.normal[k];
      Int cb = a.normal[k];
      Halfspace c{IntVector(a.normal.size()), ca * a.offset + cb * b.offset};
      for (std::size_t i = 0; i < a.normal.size(); ++i) c.normal[i] = ca * a.normal[i] + cb * b.normal[i];
      out.push_back(std::move(c));
    }
  return tidy(out);
}

// levels[k] constrains coordinates 0..k only (k = 0 … n−1).
std::vector<System> projections(const Polyhedron& p) {
  const std::size_t n = p.ambient_rank();
  std::vector<System> levels(n);
  levels[n - 1] = tidy(p.halfspaces());
  for (std::size_t k = n - 1; k-- > 0;) levels[k] = eliminate_last(levels[k + 1], k + 1);
  return levels;
}

// Integer interval of coordinate k allowed by `s` given point[0..k-1]; false if empty.
bool coordinate_range(const System& s, const IntVector& point, std::size_t k, long radius, Int& lo, Int& hi) {
  lo = -radius;
  hi = radius;
  Int rhs;
  Int bound;
  for (const auto& h : s) {
    rhs = h.offset;
    for (std::size_t i = 0; i < k; ++i)
      if (h.normal[i] != 0 && point[i] != 0) rhs -= h.normal[i] * point[i];
    const Int& a = h.normal[k];
    if (a == 0) {
      if (rhs > 0) return false;
      continue;
    }
    if (a > 0) {
      mpz_cdiv_q(bound.get_mpz_t(), rhs.get_mpz_t(), a.get_mpz_t());
      if (bound > lo) lo = bound;
    } else {
      mpz_fdiv_q(bound.get_mpz_t(), rhs.get_mpz_t(), a.get_mpz_t());
      if (bound < hi) hi = bound;
    }
    if (lo > hi) return false;
  }
  return true;
}

// Enumerates coordinates k..n−1 below a fixed prefix. The last coordinate is
// an interval: its lowest point plus e_last (when longer than one point)
// spans the same lattice as all of its points.
void enumerate(const std::vector<System>& levels, IntVector& point, std::size_t k, long radius,
               LatticeAccumulator& acc) {
  const std::size_t n = point.size();
  Int lo, hi;
  if (!coordinate_range(levels[k], point, k, radius, lo, hi)) return;
  if (k + 1 == n) {
    point[k] = lo;
    acc.add(point);
    if (hi > lo) {
      IntVector e(n, Int(0));
      e[k] = 1;
      acc.add(e);
    }
    return;
  }
  for (Int x = lo; x <= hi; ++x) {
    point[k] = x;
    enumerate(levels, point, k + 1, radius, acc);
  }
  point[k] = 0;
}

}  // namespace

Sublattice box_points_span(const Polyhedron& p, long radius, Execution exec) {
  const std::size_t n = p.ambient_rank();
  if (n == 0) return Sublattice(0);
  const std::vector<System> levels = projections(p);

  if (exec == Execution::serial || n == 1) {
    LatticeAccumulator acc(n);
    IntVector point(n, Int(0));
    enumerate(levels, point, 0, radius, acc);
    return acc.lattice();
  }

  // Split on the first coordinate.
  Int lo, hi;
  IntVector origin(n, Int(0));
  if (!coordinate_range(levels[0], origin, 0, radius, lo, hi)) return Sublattice(n);
  const long first = lo.get_si();
  const long count = Int(hi - lo + 1).get_si();
  LatticeAccumulator merged(n);
#pragma omp parallel
  {
    LatticeAccumulator acc(n);
    IntVector point(n, Int(0));
#pragma omp for schedule(dynamic, 4)
    for (long i = 0; i < count; ++i) {
      point[0] = first + i;
      enumerate(levels, point, 1, radius, acc);
    }
#pragma omp critical(toric_span_merge)
    merged.add(acc.lattice());
  }
  return merged.lattice();
}

long initial_span_radius(const Polyhedron& p) {
  Rat vmax = 0;
  for (const auto& v : p.vertices()) {
    Rat s = sup_norm(v);
    if (s > vmax) vmax = s;
  }
  Int b = ceil(vmax);
  for (const auto& r : p.rays()) b += sup_norm(r);
  for (const auto& l : p.lineality()) b += sup_norm(l);
  if (b < 1) b = 1;
  if (!b.fits_slong_p()) throw Error(ErrorKind::InvalidInput, "enumeration radius overflow");
  return b.get_si();
}

namespace {

// ℤ-span of the integer points of the affine hull of P, or the zero lattice
// when that hull has no integer point. Always contains the answer.
Sublattice affine_hull_lattice(const Polyhedron& p) {
  const std::size_t n = p.ambient_rank();
  const RatVector& v0 = p.vertices().front();
  std::vector<RatVector> dirs;
  for (const auto& v : p.vertices()) dirs.push_back(sub(v, v0));
  for (const auto& r : p.rays()) dirs.push_back(to_rat(r));
  for (const auto& l : p.lineality()) dirs.push_back(to_rat(l));
  const Sublattice normals = annihilator(span_lattice(dirs, n));
  const Sublattice directions = annihilator(normals);
  if (normals.rank() == 0) return directions;

  // Integer x with a_j·x = a_j·v0 for the normal basis a_j: with U·Aᵀ = [H; 0]
  // write x = y·U and solve y_top·H = c by back substitution.
  const std::vector<IntVector> a = normals.integer_basis();
  const std::size_t k = a.size();
  RatVector c(k);
  for (std::size_t j = 0; j < k; ++j) {
    c[j] = dot(v0, a[j]);
    if (c[j].get_den() != 1) return Sublattice(n);
  }
  HermiteResult h = hermite_normal_form(IntMatrix(std::vector<IntVector>(a), n).transpose());
  RatVector y(n, Rat(0));
  for (std::size_t j = 0; j < k; ++j) {
    // H is k×k upper triangular with positive diagonal.
    Rat rest = c[j];
    for (std::size_t i = 0; i < j; ++i) rest -= y[i] * Rat(h.H(i, j));
    y[j] = rest / Rat(h.H(j, j));
    if (y[j].get_den() != 1) return Sublattice(n);
  }
  IntVector x = to_int(y) * h.U;
  std::vector<IntVector> gens = directions.integer_basis();
  gens.push_back(x);
  return Sublattice::from_generators(gens, n);
}

}  // namespace

SpanSearchResult search_lattice_span(const Polyhedron& p, const std::optional<Sublattice>& ceiling,
                                     Execution exec) {
  SpanSearchResult result;
  long radius = initial_span_radius(p);
  result.initial_radius = radius;
  result.final_radius = radius;
  const Sublattice hull = affine_hull_lattice(p);
  if (hull.rank() == 0) {
    result.span = hull;
    result.hit_ceiling = true;
    return result;
  }
  Sublattice current = box_points_span(p, radius, exec);
  // A bounded P lies inside the initial box, so one pass is exact.
  if (p.is_bounded()) {
    result.span = std::move(current);
    result.hit_ceiling = result.span == hull;
    return result;
  }
  int stable = 0;
  while (stable < 3) {
    if (current == hull || (ceiling && current == *ceiling)) {
      result.hit_ceiling = true;
      break;
    }
    if (radius > std::numeric_limits<long>::max() / 2) {
      throw Error(ErrorKind::InvalidInput, "enumeration radius overflow");
    }
    radius *= 2;
    Sublattice next = box_points_span(p, radius, exec);
    stable = next == current ? stable + 1 : 0;
    current = std::move(next);
  }
  result.span = std::move(current);
  result.final_radius = radius;
  return result;
}

}  // namespace toric
