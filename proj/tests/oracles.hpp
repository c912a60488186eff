#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's normal forms or lattice code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "toric/arith.hpp"
#include "toric/linalg.hpp"
#include "toric/polyhedron.hpp"

namespace oracle {

using toric::Int;
using toric::IntVector;
using toric::Rat;
using toric::RatVector;
using Rows = std::vector<IntVector>;

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline void axpy(IntVector& y, const Int& a, const IntVector& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

// Textbook row HNF by repeated Euclid on each column.
inline Rows hnf(Rows a, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i)
        if (a[i][c] != 0 && (best == a.size() || abs(a[i][c]) < abs(a[best][c]))) best = i;
      if (best == a.size()) break;
      std::swap(a[r], a[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        Int q = floor_div(a[i][c], a[r][c]);
        axpy(a[i], -q, a[r]);
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r >= a.size() || a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) axpy(a[i], -floor_div(a[i][c], a[r][c]), a[r]);
    ++r;
  }
  a.resize(r);
  return a;
}

// gcd of all k×k minors, by explicit enumeration (small matrices only).
inline Int rat_det(std::vector<RatVector> m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det.get_num();
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

inline Int determinantal_divisor(const Rows& a, std::size_t cols, std::size_t k) {
  Int g = 0;
  subsets(a.size(), k, [&](const std::vector<std::size_t>& ri) {
    subsets(cols, k, [&](const std::vector<std::size_t>& ci) {
      std::vector<RatVector> m(k, RatVector(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = a[ri[i]][ci[j]];
      Int d = rat_det(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  return g;
}

/// Elementary divisors d_k = D_k / D_{k-1}, nonzero ones only.
inline std::vector<Int> elementary_divisors(const Rows& a, std::size_t cols) {
  std::vector<Int> out;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(a.size(), cols); ++k) {
    Int d = determinantal_divisor(a, cols, k);
    if (d == 0) break;
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

inline bool satisfies(const toric::Polyhedron& p, const IntVector& x) {
  for (const auto& h : p.halfspaces()) {
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += h.normal[i] * x[i];
    if (s < h.offset) return false;
  }
  return true;
}

/// HNF of the span of every lattice point of p in [-radius, radius]^n.
inline Rows box_span(const toric::Polyhedron& p, long radius) {
  const std::size_t n = p.ambient_rank();
  Rows acc;
  IntVector x(n, Int(-radius));
  while (true) {
    if (satisfies(p, x)) {
      acc.push_back(x);
      if (acc.size() > 2 * n + 2) acc = hnf(acc, n);
    }
    std::size_t i = 0;
    while (i < n && x[i] == radius) x[i++] = -radius;
    if (i == n) break;
    ++x[i];
  }
  return hnf(acc, n);
}

// Box brute force, widened until two consecutive doublings agree. The first box
// clears every vertex by `base` so unbounded directions get room to show up.
inline Rows stable_box_span(const toric::Polyhedron& p, long base, long cap) {
  long far = 0;
  for (const auto& v : p.vertices())
    for (const auto& c : v) {
      mpz_class f = abs(c.get_num()) / c.get_den() + 1;
      far = std::max(far, f.get_si());
    }
  long radius = std::min(cap, base + far);
  Rows prev = box_span(p, radius);
  while (radius < cap) {
    radius = std::min(cap, 2 * radius);
    Rows next = box_span(p, radius);
    if (next == prev) break;
    prev = std::move(next);
  }
  return prev;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline IntVector random_vector(std::size_t n, long bound) {
  IntVector v(n);
  for (auto& x : v) x = uniform(-bound, bound);
  return v;
}

inline Rows random_rows(std::size_t r, std::size_t n, long bound) {
  Rows a;
  for (std::size_t i = 0; i < r; ++i) a.push_back(random_vector(n, bound));
  return a;
}

/// Random unimodular matrix as a product of elementary row operations.
inline Rows random_unimodular(std::size_t n, int steps = 6) {
  Rows u(n, IntVector(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  for (int s = 0; s < steps; ++s) {
    std::size_t i = uniform(0, n - 1), j = uniform(0, n - 1);
    if (i == j) {
      if (uniform(0, 1))
        for (auto& x : u[i]) x = -x;
      else if (n > 1)
        std::swap(u[i], u[(i + 1) % n]);
      continue;
    }
    axpy(u[i], Int(uniform(-2, 2)), u[j]);
  }
  return u;
}

inline IntVector times(const IntVector& x, const Rows& m) {
  IntVector y(m.empty() ? 0 : m[0].size(), Int(0));
  for (std::size_t i = 0; i < x.size(); ++i) axpy(y, x[i], m[i]);
  return y;
}

}  // namespace oracle
