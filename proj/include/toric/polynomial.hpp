#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "toric/arith.hpp"

namespace toric {

/// Sparse integer polynomial in a fixed number of variables.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  explicit Polynomial(std::size_t variables = 0) : vars_(variables) {}

  static Polynomial constant(std::size_t variables, const Int& c);
  /// The linear form Σ uᵢ·xᵢ.
  static Polynomial linear(const IntVector& u);

  std::size_t variables() const { return vars_; }
  const std::map<Exponents, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Substitutes x = Σ tⱼ·basisⱼ, giving a polynomial in basis.size() variables.
  Polynomial substitute(const std::vector<IntVector>& basis) const;

 private:
  void add_term(const Exponents& e, const Int& c);

  std::size_t vars_;
  std::map<Exponents, Int> terms_;
};

/// i-th elementary symmetric polynomial of the given linear forms.
Polynomial elementary_symmetric(const std::vector<IntVector>& forms, std::size_t i, std::size_t variables);

}  // namespace toric
