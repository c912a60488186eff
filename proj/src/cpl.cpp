#include "toric/cpl.hpp"

#include <algorithm>

#include "toric/error.hpp"

namespace toric {

namespace {

void require_valid(const Fan& fan) {
  if (!validate(fan).valid) throw Error(ErrorKind::InvalidFan, "fan failed validation");
}

RayIndices common_rays(const RayIndices& a, const RayIndices& b) {
  RayIndices out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Rat CPLFunction::value_at_ray(const Fan& fan, std::size_t ray) const {
  auto owners = fan.maximal_cones_containing({ray});
  if (owners.empty()) throw Error(ErrorKind::InvalidInput, "ray is in no maximal cone");
  return dot(pieces[owners.front()], fan.rays()[ray]);
}

bool CPLFunction::is_integral() const {
  return std::all_of(pieces.begin(), pieces.end(), [](const RatVector& v) { return toric::is_integral(v); });
}

CPLSpace cpl_space(const Fan& fan) {
  require_valid(fan);
  const std::size_t n = fan.rank();
  const std::size_t k = fan.maximal_count();
  const std::size_t unknowns = n * k;
  std::vector<RatVector> rows;

  auto constraint = [&](std::size_t i, std::size_t j, const IntVector& g) {
    RatVector row(unknowns, Rat(0));
    for (std::size_t c = 0; c < n; ++c) {
      row[i * n + c] += Rat(g[c]);
      row[j * n + c] -= Rat(g[c]);
    }
    rows.push_back(std::move(row));
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (auto r : common_rays(fan.maximal_cones()[i], fan.maximal_cones()[j])) constraint(i, j, fan.rays()[r]);
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& e : fan.maximal_cone(i).equations()) {
      RatVector row(unknowns, Rat(0));
      for (std::size_t c = 0; c < n; ++c) row[i * n + c] = Rat(e[c]);
      rows.push_back(std::move(row));
    }
  }

  CPLSpace space;
  for (auto& x : rational_nullspace(rows, unknowns)) {
    CPLFunction f;
    for (std::size_t i = 0; i < k; ++i)
      f.pieces.emplace_back(x.begin() + static_cast<long>(i * n), x.begin() + static_cast<long>((i + 1) * n));
    space.basis.push_back(std::move(f));
  }
  space.dim = space.basis.size();
  std::vector<IntVector> all_rays = fan.rays();
  space.trivial_dim = rational_rank(all_rays);
  return space;
}

bool satisfies_agreement(const Fan& fan, const CPLFunction& f) {
  const std::size_t k = fan.maximal_count();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (auto r : common_rays(fan.maximal_cones()[i], fan.maximal_cones()[j]))
        if (dot(f.pieces[i], fan.rays()[r]) != dot(f.pieces[j], fan.rays()[r])) return false;
  return true;
}

std::optional<RatVector> global_representative(const Fan& fan, const CPLFunction& f) {
  // u must reproduce f on every ray of every maximal cone: ⟨u, ρ⟩ = f(ρ).
  std::vector<RatVector> cols;
  RatVector rhs;
  for (std::size_t i = 0; i < fan.maximal_count(); ++i)
    for (auto r : fan.maximal_cones()[i]) {
      cols.push_back(to_rat(fan.rays()[r]));
      rhs.push_back(dot(f.pieces[i], fan.rays()[r]));
    }
  if (cols.empty()) return RatVector(fan.rank(), Rat(0));
  // x·A = b with A rows = ray coordinates transposed: solve u·Rᵀ = rhs.
  std::vector<RatVector> a = transpose(cols, fan.rank());
  return solve_left(a, rhs);
}

std::optional<NontrivialCPL> nontrivial_cpl(const Fan& fan) {
  CPLSpace space = cpl_space(fan);
  if (space.dim <= space.trivial_dim) return std::nullopt;
  for (const auto& b : space.basis) {
    if (global_representative(fan, b)) continue;
    NontrivialCPL out;
    Int d = 1;
    for (const auto& piece : b.pieces) {
      Int pd = common_denominator(piece);
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), pd.get_mpz_t());
    }
    for (const auto& piece : b.pieces) out.function.pieces.push_back(scaled(piece, Rat(d)));

    std::size_t ref = 0;
    while (ref < fan.maximal_count() && !fan.maximal_cone(ref).is_full_dimensional()) ++ref;
    if (ref == fan.maximal_count()) ref = 0;
    out.compared_against = out.function.pieces[ref];
    bool found = false;
    for (std::size_t r = 0; r < fan.rays().size() && !found; ++r) {
      if (out.function.value_at_ray(fan, r) != dot(out.compared_against, fan.rays()[r])) {
        out.witness_ray = r;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::CertificateInvalid, "nontrivial function agrees with a global functional on all rays");
    return out;
  }
  throw Error(ErrorKind::CertificateInvalid, "dim exceeds trivial_dim but every basis vector is global");
}

CountReport counting_certificate(const Fan& fan) {
  if (fan.rank() != 3) throw Error(ErrorKind::WrongDimension, "counting certificate needs a rank-3 fan");
  if (!is_complete(fan)) throw Error(ErrorKind::NotComplete, "counting certificate needs a complete fan");
  FanStats s = stats(fan);
  CountReport r;
  r.f1 = static_cast<long>(s.f[0]);
  r.f2 = static_cast<long>(s.f[1]);
  r.f3 = static_cast<long>(s.f[2]);
  r.min_m_rho = static_cast<long>(*std::min_element(s.m_rho.begin(), s.m_rho.end()));
  r.all_m_rho_at_least_4 = r.min_m_rho >= 4;
  r.four_f1 = 4 * r.f1;
  r.two_f2 = 2 * r.f2;
  r.four_f1_le_two_f2 = r.four_f1 <= r.two_f2;
  r.two_f1_minus_3 = 2 * r.f1 - 3;
  r.f2_gt_two_f1_minus_3 = r.f2 > r.two_f1_minus_3;
  r.relations = 2 * r.f2 - 3 * r.f3;
  r.excess_variables = r.f1 > r.relations + 3;
  r.hypothesis_holds = r.all_m_rho_at_least_4;
  r.cpl_dim = static_cast<long>(cpl_space(fan).dim);
  if (r.hypothesis_holds && !(r.four_f1_le_two_f2 && r.f2_gt_two_f1_minus_3 && r.excess_variables && r.cpl_dim > 3)) {
    throw Error(ErrorKind::CertificateInvalid, "counting chain fails although every ray has four neighbours");
  }
  return r;
}

}  // namespace toric
