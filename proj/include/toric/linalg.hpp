#pragma once

// Exact integer/rational linear algebra: normal forms, lattices, duals.
//
// A Sublattice is stored as (denominator d, integer HNF basis H) with the
// lattice equal to the row span of H / d and d the smallest positive integer
// making d·L integral. Both parts are canonical, so lattice equality is a
// plain comparison.

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/arith.hpp"

namespace toric {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::vector<IntVector> rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  /// Column count taken from the first row; empty input gives 0x0.
  static IntMatrix from_rows(std::vector<IntVector> rows);

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i][j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i][j]; }

  IntVector& row(std::size_t i) { return data_[i]; }
  const IntVector& row(std::size_t i) const { return data_[i]; }
  const std::vector<IntVector>& row_vectors() const { return data_; }

  IntMatrix transpose() const;
  bool is_diagonal() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::vector<IntVector> data_;
  std::size_t cols_ = 0;
};

/// Row vector times matrix.
IntVector operator*(const IntVector& v, const IntMatrix& a);

struct HermiteResult {
  IntMatrix H;  // rank rows, canonical row HNF
  IntMatrix U;  // unimodular, U·A = H stacked over zero rows
};

/// Row-style HNF: pivots positive, entries above a pivot in [0, pivot).
HermiteResult hermite_normal_form(const IntMatrix& a);

struct SmithResult {
  IntMatrix D;  // diagonal, d1 | d2 | ...
  IntMatrix U;
  IntMatrix V;  // U·A·V = D, both unimodular
};

SmithResult smith_normal_form(const IntMatrix& a);

/// Nonzero diagonal entries of the Smith form.
std::vector<Int> elementary_divisors(const IntMatrix& a);

Int determinant(const IntMatrix& a);

/// Basis of {x ∈ ℤⁿ : A·xᵀ = 0}, canonical HNF.
IntMatrix integer_kernel(const IntMatrix& a);

class Sublattice {
 public:
  /// Rank-0 lattice in ℤⁿ.
  explicit Sublattice(std::size_t ambient_rank = 0);

  static Sublattice standard(std::size_t n);
  static Sublattice from_generators(const std::vector<IntVector>& gens, std::size_t ambient_rank);
  static Sublattice from_generators(const std::vector<RatVector>& gens, std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return hnf_.rows(); }
  bool is_full_rank() const { return rank() == ambient_; }
  bool is_integral() const { return denominator_ == 1; }

  const Int& denominator() const { return denominator_; }
  /// HNF of denominator()·L.
  const IntMatrix& scaled_basis() const { return hnf_; }
  std::vector<RatVector> basis() const;
  /// Throws InvalidInput unless the lattice is integral.
  std::vector<IntVector> integer_basis() const;

  bool contains(const RatVector& v) const;
  bool contains(const IntVector& v) const;

  /// Coefficients c with v = Σ cᵢ·basisᵢ, if v is in the lattice.
  std::optional<IntVector> coordinates(const RatVector& v) const;

  /// Canonical representative of v modulo this lattice: reduced at the HNF pivots.
  IntVector reduce(const IntVector& v) const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) = default;

 private:
  std::size_t ambient_ = 0;
  Int denominator_ = 1;
  IntMatrix hnf_;
};

Sublattice span_lattice(const std::vector<IntVector>& points, std::size_t ambient_rank);
Sublattice span_lattice(const std::vector<RatVector>& points, std::size_t ambient_rank);

/// Sum of two lattices in the same ambient space.
Sublattice lattice_sum(const Sublattice& a, const Sublattice& b);

bool membership(const Sublattice& lattice, const RatVector& v);

/// rank(outer) − rank(inner); throws NotASublattice unless inner ⊆ outer.
std::size_t quotient_rank(const Sublattice& outer, const Sublattice& inner);

/// {u : ⟨u, v⟩ ∈ ℤ for all v ∈ L}; throws NotFullRank.
Sublattice dual_lattice(const Sublattice& lattice);

/// Span_ℚ(L) ∩ ℤⁿ.
Sublattice saturation(const Sublattice& lattice);

/// {u ∈ ℤⁿ : ⟨u, v⟩ = 0 for all v ∈ L}.
Sublattice annihilator(const Sublattice& lattice);

/// Index of a full-rank integral lattice in ℤⁿ.
Int index_in_standard(const Sublattice& lattice);

// Rational Gaussian elimination helpers.
std::size_t rational_rank(const std::vector<RatVector>& rows);
std::size_t rational_rank(const std::vector<IntVector>& rows);

/// Basis of {x : row·x = 0 for every row}, one vector per free column in
/// increasing column order, with that free coordinate equal to 1.
std::vector<RatVector> rational_nullspace(const std::vector<RatVector>& rows, std::size_t cols);

/// Solves x·A = b for a row vector x (A given by rows), if solvable.
std::optional<RatVector> solve_left(const std::vector<RatVector>& rows, const RatVector& b);

/// Inverse of a square rational matrix given by rows; throws NotFullRank.
std::vector<RatVector> rational_inverse(const std::vector<RatVector>& rows);

std::vector<RatVector> transpose(const std::vector<RatVector>& rows, std::size_t cols);

/// Row vector times a matrix given by rows.
RatVector row_times(const RatVector& x, const std::vector<RatVector>& rows);

}  // namespace toric
