#include "toric/polynomial.hpp"

#include "toric/error.hpp"

namespace toric {

void Polynomial::add_term(const Exponents& e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::constant(std::size_t variables, const Int& c) {
  Polynomial p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

Polynomial Polynomial::linear(const IntVector& u) {
  Polynomial p(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    Exponents e(u.size(), 0);
    e[i] = 1;
    p.add_term(e, u[i]);
  }
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.vars_ != vars_) throw Error(ErrorKind::InvalidInput, "polynomial variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) throw Error(ErrorKind::InvalidInput, "polynomial variable count mismatch");
  Polynomial out(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(a.vars_);
      for (std::size_t i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::substitute(const std::vector<IntVector>& basis) const {
  const std::size_t m = basis.size();
  // xᵢ ↦ Σⱼ basisⱼ[i]·tⱼ
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < vars_; ++i) {
    IntVector coeffs(m);
    for (std::size_t j = 0; j < m; ++j) coeffs[j] = basis[j][i];
    images.push_back(m == 0 ? Polynomial(0) : Polynomial::linear(coeffs));
  }
  Polynomial out(m);
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(m, c);
    for (std::size_t i = 0; i < vars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term = term * images[i];
    out += term;
  }
  return out;
}

Polynomial elementary_symmetric(const std::vector<IntVector>& forms, std::size_t i, std::size_t variables) {
  // Coefficient of tⁱ in Π (1 + t·L).
  std::vector<Polynomial> e(i + 1, Polynomial(variables));
  e[0] = Polynomial::constant(variables, 1);
  for (const auto& f : forms) {
    Polynomial lin = Polynomial::linear(f);
    for (std::size_t k = i; k >= 1; --k) e[k] += lin * e[k - 1];
  }
  return e[i];
}

}  // namespace toric
