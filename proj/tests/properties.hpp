#pragma once

// Randomized property checks shared by the unit tests and the acceptance
// runner. Each returns the number of failing instances and appends a short
// note for the first few failures.

#include <sstream>
#include <string>

#include "oracles.hpp"
#include "toric/danilov.hpp"
#include "toric/error.hpp"
#include "toric/fan.hpp"

namespace props {

using namespace toric;

struct Outcome {
  int instances = 0;
  int failures = 0;
  std::string notes;

  void check(bool ok, const std::string& what) {
    ++instances;
    if (ok) return;
    if (++failures <= 3) notes += what + "; ";
  }
};

inline Outcome dual_cone_involution(int count) {
  Outcome o;
  while (o.instances < count) {
    std::size_t n = oracle::uniform(1, 4);
    Cone c = Cone::from_generators(n, oracle::random_rows(oracle::uniform(0, 6), n, 3));
    Cone d = dual_cone(c);
    bool ok = dual_cone(d) == c;
    // Every dual generator is nonnegative on every primal generator.
    for (const auto& u : d.generators())
      for (const auto& g : c.generators()) ok = ok && dot(u, g) >= 0;
    o.check(ok, "dual involution, n=" + std::to_string(n));
  }
  return o;
}

inline Outcome hnf_contract(int count) {
  Outcome o;
  while (o.instances < count) {
    std::size_t r = oracle::uniform(1, 4), n = oracle::uniform(1, 4);
    auto a = oracle::random_rows(r, n, 9);
    IntMatrix A = IntMatrix::from_rows(a);
    HermiteResult h = hermite_normal_form(A);
    bool ok = abs(determinant(h.U)) == 1;
    IntMatrix ua = h.U * A;
    for (std::size_t i = 0; i < ua.rows(); ++i) ok = ok && ua.row(i) == (i < h.H.rows() ? h.H.row(i) : IntVector(n, Int(0)));
    ok = ok && h.H.row_vectors() == oracle::hnf(a, n);
    o.check(ok, "HNF contract");
  }
  return o;
}

inline Outcome snf_contract(int count) {
  Outcome o;
  while (o.instances < count) {
    std::size_t r = oracle::uniform(1, 3), n = oracle::uniform(1, 3);
    auto a = oracle::random_rows(r, n, 9);
    IntMatrix A = IntMatrix::from_rows(a);
    SmithResult s = smith_normal_form(A);
    bool ok = s.U * A * s.V == s.D && s.D.is_diagonal() && abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1;
    std::vector<Int> diag;
    for (std::size_t i = 0; i < std::min(r, n); ++i)
      if (s.D(i, i) != 0) diag.push_back(s.D(i, i));
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) ok = ok && diag[i] > 0 && diag[i + 1] % diag[i] == 0;
    ok = ok && diag == oracle::elementary_divisors(a, n);
    o.check(ok, "SNF contract");
  }
  return o;
}

inline Sublattice random_full_rank(std::size_t n) {
  while (true) {
    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < n; ++i) {
      RatVector v(n);
      long den = oracle::uniform(1, 3);
      for (auto& x : v) {
        x = Rat(oracle::uniform(-10, 10), den);
        x.canonicalize();
      }
      rows.push_back(v);
    }
    if (rational_rank(rows) == n) return Sublattice::from_generators(rows, n);
  }
}

inline Outcome dual_lattice_involution(int count) {
  Outcome o;
  while (o.instances < count) {
    std::size_t n = oracle::uniform(1, 3);
    Sublattice l = random_full_rank(n);
    Sublattice d = dual_lattice(l);
    bool ok = dual_lattice(d) == l;
    for (const auto& a : l.basis())
      for (const auto& b : d.basis()) ok = ok && dot(a, b).get_den() == 1;
    o.check(ok, "dual lattice involution");
  }
  return o;
}

inline Outcome saturation_idempotence(int count) {
  Outcome o;
  while (o.instances < count) {
    std::size_t n = oracle::uniform(1, 4);
    auto gens = oracle::random_rows(oracle::uniform(0, 3), n, 6);
    Sublattice l = span_lattice(gens, n);
    Sublattice s = saturation(l);
    bool ok = saturation(s) == s && s.rank() == l.rank();
    for (const auto& g : gens) ok = ok && s.contains(g);
    // A saturated lattice contains every integer point of its rational span in a small box.
    for (int k = 0; k < 10 && ok; ++k) {
      IntVector p = oracle::random_vector(n, 3);
      std::vector<RatVector> rows;
      for (const auto& b : s.basis()) rows.push_back(b);
      if (!rows.empty() && solve_left(rows, to_rat(p))) ok = s.contains(p);
    }
    o.check(ok, "saturation");
  }
  return o;
}

/// Same certificate after moving the fan and degree by a random lattice automorphism.
inline Outcome certificate_invariance(int count) {
  Outcome o;
  const Fan payne = build_payne_fan();
  const Fan cube = build_cube_fan();
  const Sublattice z3 = Sublattice::standard(3);
  struct Case {
    const Fan* fan;
    RayIndices wall;
    RatVector m;
  };
  std::vector<Case> cases{{&payne, *payne.label("tau"), to_rat(make_int_vector({1, -1, 0}))},
                          {&payne, *payne.label("tau"), to_rat(make_int_vector({0, 0, 1}))},
                          {&cube, cube.cones(2).front().rays, to_rat(make_int_vector({1, 0, 0}))}};
  std::vector<H1Certificate> base;
  for (const auto& c : cases) base.push_back(h1_wall_certificate(*c.fan, c.wall, c.m, z3));
  while (o.instances < count) {
    std::size_t k = o.instances % cases.size();
    const Case& c = cases[k];
    auto u = oracle::random_unimodular(3, 8);
    std::vector<IntVector> rays;
    for (const auto& r : c.fan->rays()) rays.push_back(oracle::times(r, u));
    Fan moved(3, rays, c.fan->maximal_cones(), c.fan->labels());
    // Functionals transform by the inverse transpose so pairings are preserved.
    std::vector<RatVector> ut;
    for (std::size_t i = 0; i < 3; ++i) {
      RatVector row(3);
      for (std::size_t j = 0; j < 3; ++j) row[j] = u[j][i];
      ut.push_back(row);
    }
    RatVector m = row_times(c.m, rational_inverse(ut));
    H1Certificate cert = h1_wall_certificate(moved, c.wall, m, z3);
    const H1Certificate& b = base[k];
    bool ok = cert.valid == b.valid && cert.wall_report.dim_f == b.wall_report.dim_f &&
              cert.sigma1_report.dim_f == b.sigma1_report.dim_f && cert.sigma2_report.dim_f == b.sigma2_report.dim_f &&
              cert.wall_report.dim_tilde == b.wall_report.dim_tilde && cert.sigma1 == b.sigma1 && cert.sigma2 == b.sigma2;
    o.check(ok, "certificate invariance, case " + std::to_string(k));
  }
  return o;
}

inline Polyhedron random_polyhedron() {
  while (true) {
    std::size_t n = oracle::uniform(1, 3);
    std::vector<Halfspace> hs;
    std::size_t count = oracle::uniform(1, 6);
    for (std::size_t i = 0; i < count; ++i) {
      IntVector u = oracle::random_vector(n, 8);
      if (is_zero(u)) continue;
      hs.push_back({u, Int(oracle::uniform(-8, 8))});
    }
    if (hs.empty()) continue;
    try {
      return Polyhedron(n, hs);
    } catch (const Error&) {
    }
  }
}

inline Outcome lattice_span_oracle(int count) {
  Outcome o;
  while (o.instances < count) {
    Polyhedron p = random_polyhedron();
    const std::size_t n = p.ambient_rank();
    Sublattice fast = lattice_points_span(p, Sublattice::standard(n));
    Sublattice brute = n == 3 ? span_lattice(oracle::stable_box_span(p, 12, 64), n)
                              : span_lattice(oracle::stable_box_span(p, 24, 400), n);
    std::ostringstream what;
    what << "span mismatch n=" << n << " ranks " << fast.rank() << " vs " << brute.rank();
    o.check(fast == brute, what.str());
  }
  return o;
}

inline std::vector<Cone> smooth_cones() {
  std::vector<Cone> out;
  const std::vector<std::vector<std::size_t>> supports{{}, {0}, {0, 1}, {0, 1, 2}};
  for (int rep = 0; rep < 3; ++rep)
    for (const auto& s : supports) {
      auto u = oracle::random_unimodular(3, rep == 0 ? 0 : 8);
      std::vector<IntVector> gens;
      for (auto i : s) gens.push_back(u[i]);
      out.push_back(Cone::from_generators(3, gens));
    }
  return out;
}

/// Every m ∈ σ^∨ ∩ ℤ³ with sup-norm ≤ 4 has dim_F = 0 on a smooth σ.
inline Outcome smooth_vanishing() {
  Outcome o;
  const Sublattice z3 = Sublattice::standard(3);
  for (const Cone& c : smooth_cones()) {
    if (!is_smooth(c)) {
      o.check(false, "generated cone not smooth");
      continue;
    }
    Cone d = c.dual();
    for (long x = -4; x <= 4; ++x)
      for (long y = -4; y <= 4; ++y)
        for (long z = -4; z <= 4; ++z) {
          IntVector m = make_int_vector({x, y, z});
          if (!d.contains(m)) continue;
          o.check(f_dim(c, to_rat(m), z3).dim_f == 0, "smooth vanishing");
        }
  }
  return o;
}

}  // namespace props
