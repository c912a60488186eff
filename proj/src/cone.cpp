#include "toric/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "toric/error.hpp"

namespace toric {

namespace {

std::vector<IntVector> with_both_signs(const std::vector<IntVector>& vs) {
  std::vector<IntVector> out;
  for (const auto& v : vs) {
    out.push_back(v);
    IntVector neg = v;
    for (auto& x : neg) x = -x;
    out.push_back(std::move(neg));
  }
  return out;
}

// Unimodular W (n×n, rows) whose first l rows span the saturated lattice L,
// together with W⁻¹.
struct AdaptedBasis {
  IntMatrix w;
  IntMatrix w_inv;
};

AdaptedBasis adapted_basis(const Sublattice& saturated) {
  const std::size_t n = saturated.ambient_rank();
  SmithResult s = smith_normal_form(saturated.scaled_basis());
  // B = U⁻¹·[I 0]·V⁻¹, so the first l rows of V⁻¹ span L.
  std::vector<RatVector> v_rat;
  for (const auto& r : s.V.row_vectors()) v_rat.push_back(to_rat(r));
  std::vector<RatVector> inv = rational_inverse(v_rat);
  std::vector<IntVector> w_rows;
  for (const auto& r : inv) w_rows.push_back(to_int(r));
  return {IntMatrix(std::move(w_rows), n), s.V};
}

}  // namespace

GeneratorSet canonicalize(std::size_t n, const std::vector<IntVector>& rays,
                          const std::vector<IntVector>& lineality) {
  GeneratorSet out;
  Sublattice lin = saturation(Sublattice::from_generators(lineality, n));
  out.lineality = lin.integer_basis();
  const std::size_t l = lin.rank();

  std::set<IntVector> seen;
  if (l == 0) {
    for (const auto& r : rays) {
      if (is_zero(r)) continue;
      seen.insert(primitive(r));
    }
  } else {
    AdaptedBasis ab = adapted_basis(lin);
    for (const auto& r : rays) {
      IntVector c = r * ab.w_inv;
      IntVector tail(c.begin() + static_cast<long>(l), c.end());
      if (is_zero(tail)) continue;  // inside the lineality space
      tail = primitive(tail);
      IntVector coords(n, Int(0));
      std::copy(tail.begin(), tail.end(), coords.begin() + static_cast<long>(l));
      seen.insert(lin.reduce(coords * ab.w));
    }
  }
  out.rays.assign(seen.begin(), seen.end());
  return out;
}

GeneratorSet double_description(std::size_t n, const std::vector<IntVector>& constraints) {
  std::vector<IntVector> lin = IntMatrix::identity(n).row_vectors();
  std::vector<IntVector> rays;
  std::vector<IntVector> processed;

  for (const auto& a : constraints) {
    if (a.size() != n) throw Error(ErrorKind::InvalidInput, "constraint length mismatch");
    if (is_zero(a)) continue;

    auto l0 = std::find_if(lin.begin(), lin.end(), [&](const IntVector& l) { return dot(a, l) != 0; });
    if (l0 != lin.end()) {
      IntVector pivot = *l0;
      Int ap = dot(a, pivot);
      if (ap < 0) {
        for (auto& x : pivot) x = -x;
        ap = -ap;
      }
      lin.erase(l0);
      for (auto& l : lin) l = primitive(sub(scaled(l, ap), scaled(pivot, dot(a, l))));
      for (auto& r : rays) r = primitive(sub(scaled(r, ap), scaled(pivot, dot(a, r))));
      rays.push_back(primitive(pivot));
      processed.push_back(a);
      continue;
    }

    processed.push_back(a);
    std::vector<IntVector> pos, zero, neg;
    std::vector<Int> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i]);
      if (val[i] > 0) pos.push_back(rays[i]);
      else if (val[i] == 0) zero.push_back(rays[i]);
      else neg.push_back(rays[i]);
    }
    if (neg.empty()) continue;

    // Tight sets over the constraints processed before `a`.
    const std::size_t prior = processed.size() - 1;
    auto tight = [&](const IntVector& r) {
      std::vector<std::size_t> t;
      for (std::size_t k = 0; k < prior; ++k)
        if (dot(processed[k], r) == 0) t.push_back(k);
      return t;
    };
    const std::size_t target_rank = n - lin.size() - 2;

    std::vector<IntVector> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    std::vector<std::vector<std::size_t>> tight_pos, tight_neg;
    for (const auto& p : pos) tight_pos.push_back(tight(p));
    for (const auto& q : neg) tight_neg.push_back(tight(q));

    for (std::size_t i = 0; i < pos.size(); ++i) {
      for (std::size_t j = 0; j < neg.size(); ++j) {
        std::vector<std::size_t> common;
        std::set_intersection(tight_pos[i].begin(), tight_pos[i].end(), tight_neg[j].begin(),
                              tight_neg[j].end(), std::back_inserter(common));
        if (common.size() < target_rank) continue;
        std::vector<IntVector> rows;
        for (auto k : common) rows.push_back(processed[k]);
        if (rational_rank(rows) != target_rank) continue;
        Int ap = dot(a, pos[i]);
        Int an = dot(a, neg[j]);
        next.push_back(primitive(sub(scaled(neg[j], ap), scaled(pos[i], an))));
      }
    }
    rays = std::move(next);
  }
  return canonicalize(n, rays, lin);
}

// --------------------------------------------------------------------- Cone

Cone::Cone() = default;

Cone Cone::from_generators(std::size_t n, const std::vector<IntVector>& generators,
                           const std::vector<IntVector>& lineality) {
  std::vector<IntVector> gens = generators;
  for (auto& v : with_both_signs(lineality)) gens.push_back(std::move(v));
  for (const auto& g : gens)
    if (g.size() != n) throw Error(ErrorKind::InvalidInput, "generator length mismatch");
  GeneratorSet dual = double_description(n, gens);
  std::vector<IntVector> dual_gens = dual.rays;
  for (auto& v : with_both_signs(dual.lineality)) dual_gens.push_back(std::move(v));
  GeneratorSet primal = double_description(n, dual_gens);
  return Cone(n, std::move(primal), std::move(dual));
}

Cone Cone::from_inequalities(std::size_t n, const std::vector<IntVector>& inequalities,
                             const std::vector<IntVector>& equations) {
  return from_generators(n, inequalities, equations).dual();
}

Cone Cone::zero(std::size_t n) { return from_generators(n, {}); }

Cone Cone::full_space(std::size_t n) { return zero(n).dual(); }

std::vector<IntVector> Cone::generators() const {
  std::vector<IntVector> out = primal_.rays;
  for (auto& v : with_both_signs(primal_.lineality)) out.push_back(std::move(v));
  return out;
}

bool Cone::contains(const RatVector& p) const {
  for (const auto& u : dual_.rays)
    if (dot(p, u) < 0) return false;
  for (const auto& e : dual_.lineality)
    if (dot(p, e) != 0) return false;
  return true;
}

bool Cone::contains(const IntVector& p) const { return contains(to_rat(p)); }

bool Cone::in_relative_interior(const RatVector& p) const {
  for (const auto& u : dual_.rays)
    if (dot(p, u) <= 0) return false;
  for (const auto& e : dual_.lineality)
    if (dot(p, e) != 0) return false;
  return true;
}

bool Cone::in_relative_interior(const IntVector& p) const { return in_relative_interior(to_rat(p)); }

IntVector Cone::interior_point() const {
  IntVector s(n_, Int(0));
  for (const auto& r : primal_.rays) s = add(s, r);
  return s;
}

bool operator<(const Cone& a, const Cone& b) {
  auto key = [](const Cone& c) {
    return std::tie(c.n_, c.primal_.rays, c.primal_.lineality);
  };
  return key(a) < key(b);
}

Cone dual_cone(const Cone& c) { return c.dual(); }

std::vector<std::vector<Cone>> faces(const Cone& c) {
  const auto& rays = c.rays();
  std::vector<std::vector<Cone>> out(c.dim() + 1);

  using RaySet = std::vector<std::size_t>;
  RaySet all(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) all[i] = i;
  std::set<RaySet> seen{all};
  std::vector<RaySet> queue{all};
  while (!queue.empty()) {
    RaySet cur = std::move(queue.back());
    queue.pop_back();
    for (const auto& u : c.inequalities()) {
      RaySet next;
      for (auto i : cur)
        if (dot(u, rays[i]) == 0) next.push_back(i);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  for (const auto& s : seen) {
    std::vector<IntVector> gens;
    for (auto i : s) gens.push_back(rays[i]);
    Cone f = Cone::from_generators(c.ambient_rank(), gens, c.lineality());
    out[f.dim()].push_back(std::move(f));
  }
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

std::vector<Cone> facets(const Cone& c) {
  if (c.dim() == c.lineality_dim()) return {};
  return faces(c)[c.dim() - 1];
}

Cone smallest_face_containing(const Cone& c, const RatVector& p) {
  if (!c.contains(p)) throw Error(ErrorKind::NotInCone, "point is not in the cone");
  std::vector<IntVector> tight;
  for (const auto& u : c.inequalities())
    if (dot(p, u) == 0) tight.push_back(u);
  std::vector<IntVector> gens;
  for (const auto& r : c.rays()) {
    bool ok = std::all_of(tight.begin(), tight.end(), [&](const IntVector& u) { return dot(u, r) == 0; });
    if (ok) gens.push_back(r);
  }
  return Cone::from_generators(c.ambient_rank(), gens, c.lineality());
}

bool is_smooth(const Cone& c) {
  if (!c.is_pointed() || c.rays().size() != c.dim()) return false;
  if (c.rays().empty()) return true;
  for (const auto& d : elementary_divisors(IntMatrix::from_rows(c.rays())))
    if (d != 1) return false;
  return true;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw Error(ErrorKind::InvalidInput, "ambient rank mismatch");
  std::vector<IntVector> ineq = a.inequalities();
  ineq.insert(ineq.end(), b.inequalities().begin(), b.inequalities().end());
  std::vector<IntVector> eq = a.equations();
  eq.insert(eq.end(), b.equations().begin(), b.equations().end());
  return Cone::from_inequalities(a.ambient_rank(), ineq, eq);
}

bool is_face_of(const Cone& f, const Cone& c) {
  if (f.ambient_rank() != c.ambient_rank()) return false;
  for (const auto& g : f.generators())
    if (!c.contains(g)) return false;
  return smallest_face_containing(c, to_rat(f.interior_point())) == f;
}

Sublattice span(const Cone& c) {
  return saturation(Sublattice::from_generators(c.generators(), c.ambient_rank()));
}

Cone transform_cone(const Cone& c, const std::vector<RatVector>& point_map) {
  const std::size_t n = c.ambient_rank();
  auto image = [&](const IntVector& x) {
    RatVector y(n, Rat(0));
    for (std::size_t k = 0; k < n; ++k)
      if (x[k] != 0)
        for (std::size_t j = 0; j < n; ++j) y[j] += Rat(x[k]) * point_map[k][j];
    return primitive(y);
  };
  std::vector<IntVector> gens, lin;
  for (const auto& r : c.rays()) gens.push_back(image(r));
  for (const auto& l : c.lineality()) lin.push_back(image(l));
  return Cone::from_generators(n, gens, lin);
}

}  // namespace toric
