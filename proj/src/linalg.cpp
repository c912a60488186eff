#include "toric/linalg.hpp"

#include <algorithm>
#include <utility>

#include "toric/error.hpp"

namespace toric {

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : data_(rows, IntVector(cols, Int(0))), cols_(cols) {}

IntMatrix::IntMatrix(std::vector<IntVector> rows, std::size_t cols)
    : data_(std::move(rows)), cols_(cols) {
  for (const auto& r : data_) {
    if (r.size() != cols_) {
      throw Error(ErrorKind::InvalidInput, "ragged matrix rows");
    }
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::vector<IntVector> rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return IntMatrix(std::move(rows), cols);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = data_[i][j];
  return t;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && data_[i][j] != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidInput, "matrix shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(const IntVector& v, const IntMatrix& a) {
  IntVector out(a.cols(), Int(0));
  for (std::size_t k = 0; k < a.rows(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += v[k] * a(k, j);
  }
  return out;
}

// ---------------------------------------------------------------- HNF / SNF

namespace {

// rows[i] <- a*rows[i] + b*rows[j]; rows[j] <- c*rows[i] + d*rows[j] (old values)
void combine_rows(std::vector<IntVector>& rows, std::size_t i, std::size_t j,
                  const Int& a, const Int& b, const Int& c, const Int& d) {
  IntVector& ri = rows[i];
  IntVector& rj = rows[j];
  for (std::size_t k = 0; k < ri.size(); ++k) {
    Int x = ri[k];
    Int y = rj[k];
    ri[k] = a * x + b * y;
    rj[k] = c * x + d * y;
  }
}

void axpy_row(std::vector<IntVector>& rows, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < rows[dst].size(); ++k) rows[dst][k] -= q * rows[src][k];
}

void negate_row(std::vector<IntVector>& rows, std::size_t i) {
  for (auto& x : rows[i]) x = -x;
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<IntVector> w = a.row_vectors();
  std::vector<IntVector> u = IntMatrix::identity(m).row_vectors();

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < m; ++col) {
    // Bring the gcd of the column (rows >= pivot_row) into pivot_row.
    for (std::size_t i = pivot_row + 1; i < m; ++i) {
      if (w[i][col] == 0) continue;
      if (w[pivot_row][col] == 0) {
        std::swap(w[i], w[pivot_row]);
        std::swap(u[i], u[pivot_row]);
        continue;
      }
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                 w[pivot_row][col].get_mpz_t(), w[i][col].get_mpz_t());
      Int p = w[pivot_row][col] / g;
      Int q = w[i][col] / g;
      combine_rows(w, pivot_row, i, s, t, -q, p);
      combine_rows(u, pivot_row, i, s, t, -q, p);
    }
    if (w[pivot_row][col] == 0) continue;
    if (w[pivot_row][col] < 0) {
      negate_row(w, pivot_row);
      negate_row(u, pivot_row);
    }
    const Int& piv = w[pivot_row][col];
    for (std::size_t k = 0; k < pivot_row; ++k) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), w[k][col].get_mpz_t(), piv.get_mpz_t());
      axpy_row(w, k, pivot_row, q);
      axpy_row(u, k, pivot_row, q);
    }
    ++pivot_row;
  }
  w.resize(pivot_row);
  return {IntMatrix(std::move(w), n), IntMatrix(std::move(u), m)};
}

SmithResult smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<IntVector> d = a.row_vectors();
  std::vector<IntVector> u = IntMatrix::identity(m).row_vectors();
  // V is tracked through its transpose so column operations become row ones.
  std::vector<IntVector> vt = IntMatrix::identity(n).row_vectors();

  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& r : d) std::swap(r[i], r[j]);
    std::swap(vt[i], vt[j]);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (auto& r : d) r[dst] -= q * r[src];
    axpy_row(vt, dst, src, q);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d[i][j] != 0 && (bi == m || abs(d[i][j]) < abs(d[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == m) goto done;
      if (bi != t) {
        std::swap(d[bi], d[t]);
        std::swap(u[bi], u[t]);
      }
      if (bj != t) swap_cols(bj, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d[i][t] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d[i][t].get_mpz_t(), d[t][t].get_mpz_t());
        axpy_row(d, i, t, q);
        axpy_row(u, i, t, q);
        if (d[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d[t][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d[t][j].get_mpz_t(), d[t][t].get_mpz_t());
        col_axpy(j, t, q);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d[i][j] % d[t][t] != 0) {
            axpy_row(d, t, i, Int(-1));
            axpy_row(u, t, i, Int(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d[t][t] < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
done:
  IntMatrix V = IntMatrix(std::move(vt), n).transpose();
  return {IntMatrix(std::move(d), n), IntMatrix(std::move(u), m), std::move(V)};
}

std::vector<Int> elementary_divisors(const IntMatrix& a) {
  SmithResult s = smith_normal_form(a);
  std::vector<Int> out;
  for (std::size_t i = 0; i < std::min(s.D.rows(), s.D.cols()); ++i)
    if (s.D(i, i) != 0) out.push_back(s.D(i, i));
  return out;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::InvalidInput, "determinant of non-square matrix");
  // Bareiss fraction-free elimination.
  std::vector<IntVector> m = a.row_vectors();
  const std::size_t n = a.rows();
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return n == 0 ? Int(1) : Int(sign * m[n - 1][n - 1]);
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  HermiteResult h = hermite_normal_form(a.transpose());
  std::vector<IntVector> kernel;
  for (std::size_t i = h.H.rows(); i < n; ++i) kernel.push_back(h.U.row(i));
  return hermite_normal_form(IntMatrix(std::move(kernel), n)).H;
}

// --------------------------------------------------------------- Sublattice

Sublattice::Sublattice(std::size_t ambient_rank) : ambient_(ambient_rank), hnf_(0, ambient_rank) {}

Sublattice Sublattice::standard(std::size_t n) {
  Sublattice s(n);
  s.hnf_ = IntMatrix::identity(n);
  return s;
}

Sublattice Sublattice::from_generators(const std::vector<IntVector>& gens, std::size_t ambient_rank) {
  Sublattice s(ambient_rank);
  std::vector<IntVector> rows;
  for (const auto& g : gens) {
    if (g.size() != ambient_rank) throw Error(ErrorKind::InvalidInput, "generator length mismatch");
    if (!is_zero(g)) rows.push_back(g);
  }
  s.hnf_ = hermite_normal_form(IntMatrix(std::move(rows), ambient_rank)).H;
  return s;
}

Sublattice Sublattice::from_generators(const std::vector<RatVector>& gens, std::size_t ambient_rank) {
  Int d = 1;
  for (const auto& g : gens) {
    if (g.size() != ambient_rank) throw Error(ErrorKind::InvalidInput, "generator length mismatch");
    Int gd = common_denominator(g);
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), gd.get_mpz_t());
  }
  std::vector<IntVector> rows;
  for (const auto& g : gens) {
    IntVector r(ambient_rank);
    for (std::size_t i = 0; i < ambient_rank; ++i) {
      Rat x = g[i] * Rat(d);
      r[i] = x.get_num();
    }
    if (!is_zero(r)) rows.push_back(std::move(r));
  }
  Sublattice s(ambient_rank);
  s.denominator_ = d;
  s.hnf_ = hermite_normal_form(IntMatrix(std::move(rows), ambient_rank)).H;
  return s;
}

std::vector<RatVector> Sublattice::basis() const {
  std::vector<RatVector> out;
  for (const auto& r : hnf_.row_vectors()) {
    RatVector v(ambient_);
    for (std::size_t i = 0; i < ambient_; ++i) {
      v[i] = Rat(r[i], denominator_);
      v[i].canonicalize();
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<IntVector> Sublattice::integer_basis() const {
  if (!is_integral()) throw Error(ErrorKind::InvalidInput, "lattice has rational basis");
  return hnf_.row_vectors();
}

std::optional<IntVector> Sublattice::coordinates(const RatVector& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::InvalidInput, "vector length mismatch");
  IntVector r(ambient_);
  for (std::size_t i = 0; i < ambient_; ++i) {
    Rat x = v[i] * Rat(denominator_);
    if (x.get_den() != 1) return std::nullopt;
    r[i] = x.get_num();
  }
  IntVector coeffs(rank(), Int(0));
  std::size_t col = 0;
  for (std::size_t k = 0; k < rank(); ++k) {
    const IntVector& row = hnf_.row(k);
    while (row[col] == 0) {
      if (r[col] != 0) return std::nullopt;
      ++col;
    }
    if (r[col] % row[col] != 0) return std::nullopt;
    Int c = r[col] / row[col];
    coeffs[k] = c;
    for (std::size_t j = col; j < ambient_; ++j) r[j] -= c * row[j];
  }
  if (!is_zero(r)) return std::nullopt;
  return coeffs;
}

bool Sublattice::contains(const RatVector& v) const { return coordinates(v).has_value(); }

bool Sublattice::contains(const IntVector& v) const { return contains(to_rat(v)); }

IntVector Sublattice::reduce(const IntVector& v) const {
  if (!is_integral()) throw Error(ErrorKind::InvalidInput, "reduce needs an integral lattice");
  IntVector r = v;
  std::size_t col = 0;
  for (std::size_t k = 0; k < rank(); ++k) {
    const IntVector& row = hnf_.row(k);
    while (row[col] == 0) ++col;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r[col].get_mpz_t(), row[col].get_mpz_t());
    if (q != 0)
      for (std::size_t j = col; j < ambient_; ++j) r[j] -= q * row[j];
  }
  return r;
}

Sublattice span_lattice(const std::vector<IntVector>& points, std::size_t ambient_rank) {
  return Sublattice::from_generators(points, ambient_rank);
}

Sublattice span_lattice(const std::vector<RatVector>& points, std::size_t ambient_rank) {
  return Sublattice::from_generators(points, ambient_rank);
}

Sublattice lattice_sum(const Sublattice& a, const Sublattice& b) {
  std::vector<RatVector> gens = a.basis();
  for (auto& v : b.basis()) gens.push_back(std::move(v));
  return Sublattice::from_generators(gens, a.ambient_rank());
}

bool membership(const Sublattice& lattice, const RatVector& v) { return lattice.contains(v); }

std::size_t quotient_rank(const Sublattice& outer, const Sublattice& inner) {
  if (outer.ambient_rank() != inner.ambient_rank()) {
    throw Error(ErrorKind::NotASublattice, "ambient ranks differ");
  }
  for (const auto& b : inner.basis()) {
    if (!outer.contains(b)) throw Error(ErrorKind::NotASublattice, "inner basis vector not in outer lattice");
  }
  return outer.rank() - inner.rank();
}

Sublattice dual_lattice(const Sublattice& lattice) {
  if (!lattice.is_full_rank()) throw Error(ErrorKind::NotFullRank, "dual_lattice needs a full-rank lattice");
  const std::size_t n = lattice.ambient_rank();
  std::vector<RatVector> inv = rational_inverse(lattice.basis());
  return Sublattice::from_generators(transpose(inv, n), n);
}

Sublattice annihilator(const Sublattice& lattice) {
  const std::size_t n = lattice.ambient_rank();
  if (lattice.rank() == 0) return Sublattice::standard(n);
  IntMatrix k = integer_kernel(lattice.scaled_basis());
  return Sublattice::from_generators(k.row_vectors(), n);
}

Sublattice saturation(const Sublattice& lattice) { return annihilator(annihilator(lattice)); }

Int index_in_standard(const Sublattice& lattice) {
  if (!lattice.is_full_rank() || !lattice.is_integral()) {
    throw Error(ErrorKind::NotFullRank, "index needs a full-rank integral lattice");
  }
  Int d = 1;
  for (std::size_t i = 0; i < lattice.rank(); ++i) d *= lattice.scaled_basis()(i, i);
  return d;
}

// -------------------------------------------------------- rational helpers

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rat inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rational_rank(const std::vector<RatVector>& rows) {
  if (rows.empty()) return 0;
  std::vector<RatVector> m = rows;
  return rref(m, rows.front().size()).size();
}

std::size_t rational_rank(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  // Fraction-free elimination keeps this in integers.
  std::vector<IntVector> m = rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Int a = m[r][c];
      Int b = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = a * m[i][j] - b * m[r][j];
      m[i] = primitive(m[i]);
    }
    ++r;
  }
  return r;
}

std::vector<RatVector> rational_nullspace(const std::vector<RatVector>& rows, std::size_t cols) {
  std::vector<RatVector> m = rows;
  std::vector<std::size_t> pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(cols, Rat(0));
    x[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -m[k][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<RatVector> transpose(const std::vector<RatVector>& rows, std::size_t cols) {
  std::vector<RatVector> t(cols, RatVector(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = rows[i][j];
  return t;
}

RatVector row_times(const RatVector& x, const std::vector<RatVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatVector y(cols, Rat(0));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (x[k] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) y[j] += x[k] * rows[k][j];
  }
  return y;
}

std::optional<RatVector> solve_left(const std::vector<RatVector>& rows, const RatVector& b) {
  // x·A = b  <=>  Aᵀ·xᵀ = bᵀ; solve via RREF of the augmented system.
  const std::size_t k = rows.size();
  const std::size_t n = b.size();
  std::vector<RatVector> aug(n, RatVector(k + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) aug[j][i] = rows[i][j];
    aug[j][k] = b[j];
  }
  std::vector<std::size_t> pivots = rref(aug, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  RatVector x(k, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][k];
  return x;
}

std::vector<RatVector> rational_inverse(const std::vector<RatVector>& rows) {
  const std::size_t n = rows.size();
  std::vector<RatVector> aug(n, RatVector(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(ErrorKind::NotFullRank, "inverse of non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = rows[i][j];
    aug[i][n + i] = 1;
  }
  std::vector<std::size_t> pivots = rref(aug, n);
  if (pivots.size() != n) throw Error(ErrorKind::NotFullRank, "singular matrix");
  std::vector<RatVector> inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace toric
