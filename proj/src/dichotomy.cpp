#include "toric/dichotomy.hpp"

#include <algorithm>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

namespace {

std::string describe(const Cone& c) {
  std::ostringstream os;
  os << "{rays:";
  for (const auto& r : c.rays()) {
    os << " (";
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << ")";
  }
  os << "; lineality:";
  for (const auto& r : c.lineality()) {
    os << " (";
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << ")";
  }
  os << "}";
  return os.str();
}

IntVector to_int_checked(const RatVector& v, const char* what) {
  if (!is_integral(v)) throw Error(ErrorKind::InvalidInput, std::string(what) + " is not integral");
  return to_int(v);
}

SublatticeConstruction build_standard(const Cone& tau, const IntVector& l) {
  const std::size_t n = tau.ambient_rank();
  if (tau.dim() != 2 || !tau.is_pointed()) throw Error(ErrorKind::InvalidInput, "tau must be a pointed 2-dimensional cone");
  if (!tau.dual().in_relative_interior(l)) {
    throw Error(ErrorKind::LNotInRelativeInterior, "l is not in the relative interior of the dual of tau");
  }
  SublatticeConstruction s;
  s.n2 = span(tau);
  Sublattice ann = annihilator(s.n2);
  auto outside = [&](const IntVector& x) {
    for (const auto& a : ann.integer_basis())
      if (dot(a, x) != 0) return true;
    return false;
  };
  for (long r = 1; s.n_vec.empty(); ++r)
    for (const auto& x : sup_norm_shell(n, r))
      if (outside(x)) {
        s.n_vec = x;
        break;
      }
  s.n1 = saturation(span_lattice(std::vector<IntVector>{s.n_vec}, n));

  s.w1 = tau.rays()[0];
  s.w2 = tau.rays()[1];
  s.c1 = dot(l, s.w1);
  s.c2 = dot(l, s.w2);
  s.q = s.c1 * s.c2;
  s.v1 = scaled(s.w1, s.c2);
  s.v2 = scaled(s.w2, s.c1);
  s.n2_refined = span_lattice(std::vector<IntVector>{s.v1, s.v2}, n);
  s.n_double_prime = lattice_sum(s.n1, s.n2_refined);

  s.l_scaled = scaled(to_rat(l), Rat(1) / Rat(s.q));
  s.m = scaled(s.l_scaled, Rat(1, 2));
  s.m_double_prime = dual_lattice(s.n_double_prime);
  s.m_prime = lattice_sum(s.m_double_prime, span_lattice(std::vector<RatVector>{s.m}, n));
  s.n_prime = dual_lattice(s.m_prime);

  LatticeChange to_double_prime(s.n_double_prime);
  Cone tau_dp = transform_cone(tau, to_double_prime.point_map());
  std::vector<IntVector> expected{to_int_checked(to_double_prime.point_to_new(to_rat(s.v1)), "v1"),
                                  to_int_checked(to_double_prime.point_to_new(to_rat(s.v2)), "v2")};
  std::sort(expected.begin(), expected.end());
  s.tau_smooth_in_n_double_prime = is_smooth(tau_dp) && tau_dp.rays() == expected;
  s.l_scaled_is_one_on_v = dot(s.l_scaled, s.v1) == 1 && dot(s.l_scaled, s.v2) == 1;
  s.m_in_m_prime = s.m_prime.contains(s.m);
  s.n_prime_in_n = s.n_prime.is_integral() && s.n_prime.is_full_rank();
  s.index_in_n = s.n_prime_in_n ? index_in_standard(s.n_prime) : Int(0);
  s.tau_smooth_in_n_prime = is_smooth(transform_cone(tau, LatticeChange(s.n_prime).point_map()));
  return s;
}

}  // namespace

std::vector<std::size_t> classify_rays(const Fan& fan) {
  if (!is_complete(fan)) throw Error(ErrorKind::NotComplete, "ray classification needs a complete fan");
  return stats(fan).m_rho;
}

IntVector choose_l(const Cone& tau, const Cone& tau1, const Cone& tau2, const Sublattice& lattice, long radius) {
  const std::size_t n = tau.ambient_rank();
  const Cone d = tau.dual();
  const Cone d1 = tau1.dual();
  const Cone d2 = tau2.dual();
  const std::vector<RatVector> basis = lattice.basis();
  for (long r = 1; r <= radius; ++r) {
    for (const auto& z : sup_norm_shell(n, r)) {
      RatVector u = row_times(to_rat(z), basis);
      if (d.in_relative_interior(u) && !d1.contains(u) && !d2.contains(u)) {
        return to_int_checked(u, "l");
      }
    }
  }
  throw Error(ErrorKind::SearchExhausted, "no l within radius " + std::to_string(radius) +
                                              "; tau^v = " + describe(d) + ", tau1^v = " + describe(d1) +
                                              ", tau2^v = " + describe(d2));
}

SublatticeConstruction build_sublattice(const Cone& tau, const IntVector& l, const Sublattice& lattice_n) {
  const std::size_t n = tau.ambient_rank();
  if (!lattice_n.is_full_rank() || !lattice_n.is_integral()) {
    throw Error(ErrorKind::NotFullRank, "N must be a full-rank sublattice of the standard lattice");
  }
  if (lattice_n == Sublattice::standard(n)) return build_standard(tau, l);

  // Work in coordinates of a basis of N and map every lattice back.
  LatticeChange change(lattice_n);
  IntVector l_local = to_int_checked(change.functional_to_new(to_rat(l)), "l in N-dual coordinates");
  SublatticeConstruction s = build_standard(transform_cone(tau, change.point_map()), l_local);
  auto point_back = [&](const IntVector& x) { return to_int_checked(change.point_to_old(to_rat(x)), "point"); };
  auto n_side = [&](const Sublattice& L) {
    std::vector<RatVector> gens;
    for (const auto& b : L.basis()) gens.push_back(change.point_to_old(b));
    return Sublattice::from_generators(gens, n);
  };
  auto m_side = [&](const Sublattice& L) {
    std::vector<RatVector> gens;
    for (const auto& b : L.basis()) gens.push_back(change.functional_to_old(b));
    return Sublattice::from_generators(gens, n);
  };
  s.n_vec = point_back(s.n_vec);
  s.w1 = point_back(s.w1);
  s.w2 = point_back(s.w2);
  s.v1 = point_back(s.v1);
  s.v2 = point_back(s.v2);
  s.n1 = n_side(s.n1);
  s.n2 = n_side(s.n2);
  s.n2_refined = n_side(s.n2_refined);
  s.n_double_prime = n_side(s.n_double_prime);
  s.n_prime = n_side(s.n_prime);
  s.m_double_prime = m_side(s.m_double_prime);
  s.m_prime = m_side(s.m_prime);
  s.l_scaled = change.functional_to_old(s.l_scaled);
  s.m = change.functional_to_old(s.m);
  s.index_in_n = index_in_standard(s.n_prime) / index_in_standard(lattice_n);
  return s;
}

DichotomyResult run_dichotomy(const Fan& fan, long radius, Execution exec) {
  if (!validate(fan).valid) throw Error(ErrorKind::InvalidFan, "fan failed validation");
  if (fan.rank() != 3) throw Error(ErrorKind::WrongDimension, "dichotomy needs a rank-3 fan");
  std::vector<std::size_t> m_rho = classify_rays(fan);
  for (std::size_t r = 0; r < m_rho.size(); ++r)
    if (m_rho[r] < 3) throw Error(ErrorKind::InvalidFan, "ray " + std::to_string(r) + " has fewer than three 2-cones");

  DichotomyResult result;
  if (*std::min_element(m_rho.begin(), m_rho.end()) >= 4) {
    result.branch = Branch::LineBundle;
    result.counts = counting_certificate(fan);
    result.line_bundle_witness = nontrivial_cpl(fan);
    if (!result.line_bundle_witness) {
      throw Error(ErrorKind::CertificateInvalid, "no nontrivial conewise linear function despite four neighbours everywhere");
    }
    return result;
  }

  result.branch = Branch::KGroup;
  KGroupWitness w;
  w.ray = static_cast<std::size_t>(std::find(m_rho.begin(), m_rho.end(), 3) - m_rho.begin());
  std::vector<const FanCone*> walls;
  for (const auto& c : fan.cones(2))
    if (std::binary_search(c.rays.begin(), c.rays.end(), w.ray)) walls.push_back(&c);

  const Sublattice standard = Sublattice::standard(3);
  std::optional<std::size_t> chosen;
  for (std::size_t t = 0; t < walls.size() && !chosen; ++t) {
    const FanCone* a = walls[(t + 1) % 3];
    const FanCone* b = walls[(t + 2) % 3];
    if (a->rays > b->rays) std::swap(a, b);
    LabelingAttempt attempt{walls[t]->rays, false, {}};
    try {
      w.l = choose_l(walls[t]->cone, a->cone, b->cone, standard, radius);
      attempt.succeeded = true;
      chosen = t;
      w.tau = walls[t]->rays;
      w.tau1 = a->rays;
      w.tau2 = b->rays;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SearchExhausted) throw;
      attempt.diagnostics = e.what();
    }
    w.attempts.push_back(std::move(attempt));
  }
  if (!chosen) {
    std::string msg = "choose_l failed for every labeling of the walls at ray " + std::to_string(w.ray);
    for (const auto& a : w.attempts) msg += "; " + a.diagnostics;
    throw Error(ErrorKind::SearchExhausted, msg);
  }

  const Cone& tau = fan.cone_by_rays(w.tau)->cone;
  w.sublattice = build_sublattice(tau, w.l, standard);
  const SublatticeConstruction& s = w.sublattice;

  LatticeChange change(s.n_prime);
  w.reindexed_fan = reindex_lattice(fan, s.n_prime);
  w.m_in_m_prime_coords = change.functional_to_new(s.m);
  w.certificate = h1_wall_certificate(w.reindexed_fan, w.tau, w.m_in_m_prime_coords, standard, exec);
  w.certificate_original_coords = h1_wall_certificate(fan, w.tau, s.m, s.m_prime, exec);

  const Cone& s1 = fan.maximal_cone(w.certificate.sigma1);
  const Cone& s2 = fan.maximal_cone(w.certificate.sigma2);
  w.m_outside_sigma_duals = !s1.dual().contains(s.m) && !s2.dual().contains(s.m);
  const Cone& t1 = fan.cone_by_rays(w.tau1)->cone;
  const Cone& t2 = fan.cone_by_rays(w.tau2)->cone;
  w.sigmas_contain_side_walls = (is_face_of(t1, s1) && is_face_of(t2, s2)) || (is_face_of(t1, s2) && is_face_of(t2, s1));

  const bool ok = w.certificate.valid && w.certificate.wall_report.dim_f == 1 &&
                  w.certificate.sigma1_report.dim_f == 0 && w.certificate.sigma2_report.dim_f == 0 &&
                  w.certificate_original_coords.valid && s.tau_smooth_in_n_double_prime && s.l_scaled_is_one_on_v &&
                  s.m_in_m_prime && s.n_prime_in_n && w.m_outside_sigma_duals && w.sigmas_contain_side_walls &&
                  is_integral(w.m_in_m_prime_coords);
  if (!ok) throw Error(ErrorKind::CertificateInvalid, "sublattice construction did not produce a valid certificate");
  result.kgroup_witness = std::move(w);
  return result;
}

}  // namespace toric
