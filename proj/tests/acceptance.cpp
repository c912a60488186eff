// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli_runner.hpp"
#include "properties.hpp"
#include "toric/dichotomy.hpp"
#include "toric/error.hpp"
#include "toric/io.hpp"
#include "toric/multival.hpp"

using namespace toric;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Result {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

IntVector V(std::initializer_list<long> c) { return make_int_vector(c); }

std::vector<std::pair<std::string, Fan>> fixtures() {
  return {{"cube", build_cube_fan()}, {"octahedron", build_octahedron_fan()}, {"payne", build_payne_fan()}};
}

void payne_certificate(Result& r) {
  const std::string fan = tmp_path("acc_payne.json");
  r.require(run_cli("builders payne -o \"" + fan + "\"").code == 0, "builders payne");
  auto t = Clock::now();
  CliRun c = run_cli("certify - --wall \"(1,-1,-1),(1,-1,2)\" --degree 1,-1,0", fan);
  double elapsed = seconds_since(t);
  r.require(c.code == 0, "certify exit code " + std::to_string(c.code) + " " + c.err);
  if (c.code != 0) return;
  Json j = parse_json(c.out);
  r.require(j["valid"].get<bool>(), "valid");
  r.require(j["wall_report"]["dim_f"] == 1, "dim_F(tau) = 1");
  r.require(j["wall_report"]["dim_tilde"] == 3, "Span tau^v_m = R^3");
  r.require(j["wall_report"]["image_rank"] == 2, "image spans a plane");
  r.require(j["sigma1_report"]["dim_f"] == 0 && j["sigma2_report"]["dim_f"] == 0, "dim_F(sigma_i) = 0");
  // One neighbour misses m entirely, the other meets it in a 1-dimensional face.
  const Fan payne = build_payne_fan();
  const auto s1 = *payne.label("sigma1");
  const auto s2 = *payne.label("sigma2");
  auto report_for = [&](const RayIndices& rays) {
    for (const char* key : {"sigma1", "sigma2"})
      if (j[key] == Json(rays)) return j[std::string(key) + "_report"];
    return Json();
  };
  Json r1 = report_for(s1), r2 = report_for(s2);
  r.require(!r1.is_null() && !r2.is_null(), "neighbours are the labelled sigma1, sigma2");
  if (!r1.is_null() && !r2.is_null()) {
    r.require(!r1["in_dual_cone"].get<bool>(), "m not in sigma1^v");
    r.require(r2["face_dim"] == 1, "(sigma2)^v_m has dimension 1");
  }
  r.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  r.detail << "dim_F = (1, 0, 0), " << std::fixed;
  r.detail.precision(3);
  r.detail << elapsed << " s";
}

void dual_fixture(Result& r) {
  Cone tau = Cone::from_generators(3, {V({1, -1, -1}), V({1, -1, 2})});
  Cone expected = Cone::from_generators(3, {V({0, -1, 1}), V({0, -2, -1}), V({1, 1, 0}), V({-1, -1, 0})});
  Cone d = dual_cone(tau);
  r.require(d == expected, "canonical forms equal");
  r.require(d.rays() == std::vector<IntVector>{V({0, -2, -1}), V({0, -1, 1})}, "extremal rays");
  r.require(d.lineality() == std::vector<IntVector>{V({1, 1, 0})}, "lineality +-(1,1,0)");
  r.detail << "rays (0,-2,-1), (0,-1,1); lineality (1,1,0)";
}

void constructor(Result& r) {
  for (const auto& [name, fan] : fixtures()) {
    auto t = Clock::now();
    NontrivialConstruction c = construct_nontrivial(fan);
    ConsistencyReport cr = check_consistency(c.function);
    TrivialityResult tr = is_trivial(c.function);
    double elapsed = seconds_since(t);
    const std::size_t k = c.facet_functionals.size();
    IntVector zero(3, Int(0));
    r.require(cr.consistent && cr.mismatches.empty(), name + " consistency");
    r.require(!tr.trivial && tr.witness_cone.has_value(), name + " nontrivial with witness");
    r.require(c.function.degree() == (std::size_t{1} << (k - 1)), name + " degree 2^(k-1)");
    r.require(c.even.contains(zero) && !c.odd.contains(zero), name + " 0 in A2 \\ A1");
    r.require(elapsed < 1.0, name + " runtime");
    r.detail << name << ": k=" << k << " degree=" << c.function.degree() << "; ";
  }
}

void counting(Result& r) {
  Fan oct = build_octahedron_fan();
  FanStats s = stats(oct);
  r.require(s.f == std::vector<std::size_t>{6, 12, 8}, "f = (6,12,8)");
  for (auto m : s.m_rho) r.require(m == 4, "m_rho = 4");
  CountReport c = counting_certificate(oct);
  r.require(c.four_f1_le_two_f2 && c.four_f1 == 24 && c.two_f2 == 24, "4 f1 <= 2 f2");
  r.require(c.f2_gt_two_f1_minus_3, "f2 > 2 f1 - 3");
  CPLSpace space = cpl_space(oct);
  r.require(space.dim == 6 && space.dim > 3, "cpl dim 6");
  auto w = nontrivial_cpl(oct);
  r.require(w && w->function.is_integral() && !global_representative(oct, w->function), "integral nontrivial function");
  for (const auto& [name, fan] : fixtures()) {
    FanStats st = stats(fan);
    long euler = long(st.f[0]) - long(st.f[1]) + long(st.f[2]);
    r.require(euler == 2 && euler_check(fan), name + " Euler");
    r.detail << name << " f=(" << st.f[0] << "," << st.f[1] << "," << st.f[2] << "); ";
  }
  r.detail << "octahedron cpl dim " << space.dim;
}

void dichotomy(Result& r) {
  for (const auto& [name, fan] : fixtures()) {
    auto t = Clock::now();
    DichotomyResult d;
    try {
      d = run_dichotomy(fan);
    } catch (const Error& e) {
      r.require(false, name + ": " + e.what());
      continue;
    }
    double elapsed = seconds_since(t);
    r.require(elapsed < 5.0, name + " runtime");
    if (name == "octahedron") {
      r.require(d.branch == Branch::LineBundle && d.line_bundle_witness.has_value(), "octahedron branch A");
      r.detail << "octahedron: line bundle; ";
      continue;
    }
    r.require(d.branch == Branch::KGroup && d.kgroup_witness.has_value(), name + " branch B");
    if (!d.kgroup_witness) continue;
    const KGroupWitness& w = *d.kgroup_witness;
    const SublatticeConstruction& s = w.sublattice;
    r.require(s.tau_smooth_in_n_double_prime, name + " tau smooth on v1, v2");
    r.require(!s.tau_smooth_in_n_prime, name + " tau an A1 wall of N'");
    r.require(s.l_scaled_is_one_on_v, name + " <l, v_i> = 1");
    r.require(s.m_in_m_prime && is_integral(w.m_in_m_prime_coords), name + " m in M'");
    r.require(s.n_prime_in_n && s.index_in_n > 0, name + " N' finite index");
    r.require(w.certificate.valid && w.certificate.wall_report.dim_f == 1, name + " dim_F(tau, m) = 1");
    r.require(w.certificate.sigma1_report.dim_f == 0 && w.certificate.sigma2_report.dim_f == 0, name + " dim_F(sigma_i, m) = 0");
    r.require(w.m_outside_sigma_duals, name + " m outside sigma_i^v");
    r.detail << name << ": K-group, q=" << s.q << " [N:N']=" << s.index_in_n << "; ";
  }
}

void oracle_equivalence(Result& r) {
  props::Outcome span = props::lattice_span_oracle(200);
  props::Outcome smooth = props::smooth_vanishing();
  r.require(span.instances >= 200 && span.failures == 0, "lattice span oracle: " + span.notes);
  r.require(smooth.failures == 0, "smooth vanishing: " + smooth.notes);
  r.detail << span.instances << " polyhedra, " << smooth.instances << " smooth (cone, degree) pairs";
}

void property_suite(Result& r) {
  const std::vector<std::pair<std::string, std::function<props::Outcome()>>> suites{
      {"dual cone", [] { return props::dual_cone_involution(100); }},
      {"HNF", [] { return props::hnf_contract(100); }},
      {"SNF", [] { return props::snf_contract(100); }},
      {"dual lattice", [] { return props::dual_lattice_involution(100); }},
      {"saturation", [] { return props::saturation_idempotence(100); }},
      {"certificate reindexing", [] { return props::certificate_invariance(100); }},
  };
  for (const auto& [name, run] : suites) {
    props::Outcome o = run();
    r.require(o.instances >= 100 && o.failures == 0, name + ": " + o.notes);
    r.detail << name << " " << o.instances - o.failures << "/" << o.instances << "; ";
  }
}

void determinism(Result& r) {
  std::vector<std::string> commands;
  for (const auto& [name, fan] : fixtures()) {
    const std::string path = tmp_path("det_" + name + ".json");
    const RayIndices wall = fan.cones(2).front().rays;
    const std::string w = std::to_string(wall[0]) + "," + std::to_string(wall[1]);
    commands.push_back("builders " + name);
    commands.push_back("builders " + name + " -o \"" + path + "\"");
    for (const std::string& c : {std::string("validate"), std::string("stats"), std::string("cpl"), std::string("multival"),
                                 "fdim --cone " + w + " --degree 1,-1,0", "certify --wall " + w + " --degree 1,-1,0",
                                 std::string("search --radius 1"), std::string("dichotomy")}) {
      const std::string head = c.substr(0, c.find(' '));
      const std::string rest = c.find(' ') == std::string::npos ? "" : c.substr(c.find(' '));
      commands.push_back(head + " \"" + path + "\"" + rest);
    }
  }
  std::size_t runs = 0;
  for (const auto& c : commands) {
    const bool writes = c.find(" -o ") != std::string::npos;
    std::string first, second;
    for (int rep = 0; rep < 2; ++rep) {
      CliRun out = run_cli(c);
      r.require(out.code == 0, c + " exit " + std::to_string(out.code));
      std::string text = out.out;
      if (writes) text += read_file(tmp_path(c.substr(c.find("det_"), c.rfind('"') - c.find("det_"))));
      (rep == 0 ? first : second) = text;
      ++runs;
    }
    r.require(!first.empty() && first == second, c + " differs");
  }
  // Serial and parallel kernels agree byte for byte.
  for (const auto& [name, fan] : fixtures()) {
    const std::string path = "\"" + tmp_path("det_" + name + ".json") + "\"";
    r.require(run_cli("search " + path + " --radius 1").out == run_cli("search " + path + " --radius 1 --serial").out,
              name + " serial/parallel search");
    r.require(run_cli("dichotomy " + path).out == run_cli("dichotomy " + path + " --serial").out,
              name + " serial/parallel dichotomy");
  }
  r.detail << commands.size() << " commands x 2 runs";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Result&)>>> criteria{
      {"Payne wall certificate via CLI", payne_certificate},
      {"dual of tau", dual_fixture},
      {"nontrivial multivalued constructor", constructor},
      {"counting lemma and Euler identity", counting},
      {"dichotomy end to end", dichotomy},
      {"oracle equivalence", oracle_equivalence},
      {"property suite", property_suite},
      {"CLI determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      criteria[i].second(r);
    } catch (const std::exception& e) {
      r.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "CRITERION " << i + 1 << " " << (r.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
              << r.detail.str() << std::endl;
    failed += !r.pass;
  }
  return failed == 0 ? 0 : 1;
}
