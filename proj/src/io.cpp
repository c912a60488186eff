#include "toric/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <limits>

#include "toric/error.hpp"

namespace toric {

namespace {

Error bad(const std::string& what) { return Error(ErrorKind::InvalidInput, what); }

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

Json index_list(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (std::size_t i : v) a.push_back(i);
  return a;
}

Json vectors(const std::vector<IntVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

RayIndices index_list_from_json(const Json& j) {
  if (!j.is_array()) throw bad("expected an array of ray indices");
  RayIndices out;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) throw bad("ray index must be a non-negative integer");
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

}  // namespace

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw bad(std::string("malformed JSON: ") + e.what());
  }
}

Json int_json(const Int& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Json rat_json(const Rat& q) { return to_string(q); }

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_json(x));
  return a;
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Rat q = rat_from_json(j);
    if (q.get_den() != 1) throw bad("expected an integer, got " + j.get<std::string>());
    return q.get_num();
  }
  throw bad("expected an integer, got " + j.dump());
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(int_from_json(j));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      throw bad(e.what());
    }
  }
  throw bad("expected an exact rational, got " + j.dump());
}

IntVector int_vector_from_json(const Json& j) {
  if (!j.is_array()) throw bad("expected an integer vector");
  IntVector v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

RatVector rat_vector_from_json(const Json& j) {
  if (!j.is_array()) throw bad("expected a rational vector");
  RatVector v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

Json to_json(const Fan& fan) {
  Json j;
  j["rank"] = fan.rank();
  j["rays"] = vectors(fan.rays());
  Json cones = Json::array();
  for (const auto& c : fan.maximal_cones()) cones.push_back(index_list(c));
  j["maximal_cones"] = cones;
  Json labels = Json::object();
  for (const auto& [name, rays] : fan.labels()) labels[name] = index_list(rays);
  j["labels"] = labels;
  return j;
}

Fan fan_from_json(const Json& j) {
  if (!j.is_object()) throw bad("fan must be a JSON object");
  for (const char* key : {"rank", "rays", "maximal_cones"})
    if (!j.contains(key)) throw bad(std::string("fan is missing \"") + key + "\"");
  if (!j["rank"].is_number_unsigned()) throw bad("rank must be a non-negative integer");
  const auto rank = j["rank"].get<std::size_t>();
  if (!j["rays"].is_array() || !j["maximal_cones"].is_array()) throw bad("rays and maximal_cones must be arrays");
  std::vector<IntVector> rays;
  for (const auto& r : j["rays"]) rays.push_back(int_vector_from_json(r));
  std::vector<RayIndices> cones;
  for (const auto& c : j["maximal_cones"]) cones.push_back(index_list_from_json(c));
  std::map<std::string, RayIndices> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_object()) throw bad("labels must be an object");
    for (const auto& [name, v] : j["labels"].items()) labels[name] = index_list_from_json(v);
  }
  return Fan(rank, std::move(rays), std::move(cones), std::move(labels));
}

std::string fan_hash(const Fan& fan) {
  const std::string text = dump(to_json(fan));
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

Json to_json(const Sublattice& lattice) {
  Json j;
  j["rank"] = lattice.ambient_rank();
  Json rows = Json::array();
  for (const auto& b : lattice.basis()) rows.push_back(to_json(b));
  j["basis"] = rows;
  return j;
}

Sublattice sublattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("basis")) throw bad("lattice needs \"rank\" and \"basis\"");
  if (!j["rank"].is_number_unsigned() || !j["basis"].is_array()) throw bad("malformed lattice");
  const auto n = j["rank"].get<std::size_t>();
  std::vector<RatVector> rows;
  for (const auto& r : j["basis"]) {
    rows.push_back(rat_vector_from_json(r));
    if (rows.back().size() != n) throw bad("lattice basis row has the wrong length");
  }
  return Sublattice::from_generators(rows, n);
}

Json to_json(const ValidationReport& report) {
  Json j;
  j["valid"] = report.valid;
  Json v = Json::array();
  for (const auto& x : report.violations) {
    Json e;
    e["kind"] = x.kind;
    e["cones"] = index_list(x.cones);
    e["message"] = x.message;
    v.push_back(e);
  }
  j["violations"] = v;
  return j;
}

Json to_json(const FanStats& stats) {
  Json j;
  j["f"] = index_list(stats.f);
  j["m_rho"] = index_list(stats.m_rho);
  j["n_sigma"] = index_list(stats.n_sigma);
  return j;
}

Json to_json(const CPLFunction& f) {
  Json a = Json::array();
  for (const auto& p : f.pieces) a.push_back(to_json(p));
  return a;
}

Json to_json(const CPLSpace& space) {
  Json j;
  j["dim"] = space.dim;
  j["trivial_dim"] = space.trivial_dim;
  Json b = Json::array();
  for (const auto& f : space.basis) b.push_back(to_json(f));
  j["basis"] = b;
  return j;
}

Json to_json(const NontrivialCPL& w) {
  Json j;
  j["pieces"] = to_json(w.function);
  j["integral"] = w.function.is_integral();
  j["witness_ray"] = w.witness_ray;
  j["compared_against"] = to_json(w.compared_against);
  return j;
}

Json to_json(const CountReport& r) {
  Json j;
  j["f1"] = r.f1;
  j["f2"] = r.f2;
  j["f3"] = r.f3;
  j["min_m_rho"] = r.min_m_rho;
  j["all_m_rho_at_least_4"] = r.all_m_rho_at_least_4;
  j["four_f1"] = r.four_f1;
  j["two_f2"] = r.two_f2;
  j["four_f1_le_two_f2"] = r.four_f1_le_two_f2;
  j["two_f1_minus_3"] = r.two_f1_minus_3;
  j["f2_gt_two_f1_minus_3"] = r.f2_gt_two_f1_minus_3;
  j["relations"] = r.relations;
  j["excess_variables"] = r.excess_variables;
  j["hypothesis_holds"] = r.hypothesis_holds;
  j["cpl_dim"] = r.cpl_dim;
  return j;
}

Json to_json(const FunctionalMultiset& s) { return vectors(s.elements()); }

Json to_json(const MultivaluedCPL& f) {
  Json j;
  j["fan"] = to_json(f.fan);
  j["degree"] = f.degree();
  Json m = Json::array();
  for (const auto& s : f.multisets) m.push_back(to_json(s));
  j["multisets"] = m;
  return j;
}

Json to_json(const ConsistencyReport& report) {
  Json j;
  j["consistent"] = report.consistent;
  Json m = Json::array();
  for (const auto& x : report.mismatches) {
    Json e;
    e["cone_a"] = x.cone_a;
    e["cone_b"] = x.cone_b;
    e["face"] = index_list(x.face);
    m.push_back(e);
  }
  j["mismatches"] = m;
  return j;
}

Json to_json(const TrivialityResult& r) {
  Json j;
  j["trivial"] = r.trivial;
  j["reference_cone"] = r.reference_cone;
  j["witness_cone"] = r.witness_cone ? Json(*r.witness_cone) : Json(nullptr);
  return j;
}

Json to_json(const GradedPieceReport& r) {
  Json j;
  j["degree"] = to_json(r.degree);
  j["degree_in_lattice"] = to_json(r.degree_in_lattice);
  j["in_dual_cone"] = r.in_dual_cone;
  j["face_dim"] = r.face_dim;
  j["dim_tilde"] = r.dim_tilde;
  j["image_lattice"] = to_json(r.image_lattice);
  j["image_rank"] = r.image_lattice.rank();
  j["dim_f"] = r.dim_f;
  return j;
}

Json to_json(const WallIntersections& w) {
  Json j;
  j["max_dim"] = w.max_dim;
  j["all_smooth"] = w.all_smooth;
  return j;
}

Json to_json(const H1Certificate& c, const Fan& fan) {
  Json j;
  j["fan_hash"] = fan_hash(fan);
  j["wall"] = index_list(c.wall);
  j["sigma1"] = index_list(fan.maximal_cones()[c.sigma1]);
  j["sigma2"] = index_list(fan.maximal_cones()[c.sigma2]);
  j["degree"] = to_json(c.degree);
  j["lattice"] = to_json(c.lattice);
  j["wall_report"] = to_json(c.wall_report);
  j["sigma1_report"] = to_json(c.sigma1_report);
  j["sigma2_report"] = to_json(c.sigma2_report);
  j["wall_intersections"] = to_json(c.intersections);
  j["valid"] = c.valid;
  j["commentary"] = certificate_commentary(c);
  return j;
}

Json to_json(const SublatticeConstruction& s) {
  Json j;
  j["n"] = to_json(s.n_vec);
  j["n1"] = to_json(s.n1);
  j["n2"] = to_json(s.n2);
  j["w1"] = to_json(s.w1);
  j["w2"] = to_json(s.w2);
  j["c1"] = int_json(s.c1);
  j["c2"] = int_json(s.c2);
  j["q"] = int_json(s.q);
  j["v1"] = to_json(s.v1);
  j["v2"] = to_json(s.v2);
  j["n2_refined"] = to_json(s.n2_refined);
  j["n_double_prime"] = to_json(s.n_double_prime);
  j["l_scaled"] = to_json(s.l_scaled);
  j["m"] = to_json(s.m);
  j["m_double_prime"] = to_json(s.m_double_prime);
  j["m_prime"] = to_json(s.m_prime);
  j["n_prime"] = to_json(s.n_prime);
  j["index_in_n"] = int_json(s.index_in_n);
  Json checks;
  checks["tau_smooth_in_n_double_prime"] = s.tau_smooth_in_n_double_prime;
  checks["l_scaled_is_one_on_v"] = s.l_scaled_is_one_on_v;
  checks["m_in_m_prime"] = s.m_in_m_prime;
  checks["n_prime_in_n"] = s.n_prime_in_n;
  checks["tau_smooth_in_n_prime"] = s.tau_smooth_in_n_prime;
  j["checks"] = checks;
  return j;
}

Json to_json(const DichotomyResult& r, const Fan& fan) {
  Json j;
  j["fan_hash"] = fan_hash(fan);
  j["branch"] = r.branch == Branch::LineBundle ? "LineBundle" : "KGroup";
  if (r.counts) j["counts"] = to_json(*r.counts);
  if (r.line_bundle_witness) j["line_bundle_witness"] = to_json(*r.line_bundle_witness);
  if (r.kgroup_witness) {
    const KGroupWitness& w = *r.kgroup_witness;
    Json k;
    k["ray"] = w.ray;
    k["tau"] = index_list(w.tau);
    k["tau1"] = index_list(w.tau1);
    k["tau2"] = index_list(w.tau2);
    Json attempts = Json::array();
    for (const auto& a : w.attempts) {
      Json e;
      e["tau"] = index_list(a.tau);
      e["succeeded"] = a.succeeded;
      e["diagnostics"] = a.diagnostics;
      attempts.push_back(e);
    }
    k["attempts"] = attempts;
    k["l"] = to_json(w.l);
    k["sublattice"] = to_json(w.sublattice);
    k["reindexed_fan"] = to_json(w.reindexed_fan);
    k["m_in_m_prime_coords"] = to_json(w.m_in_m_prime_coords);
    k["m_outside_sigma_duals"] = w.m_outside_sigma_duals;
    k["sigmas_contain_side_walls"] = w.sigmas_contain_side_walls;
    k["certificate"] = to_json(w.certificate, w.reindexed_fan);
    k["certificate_original_coords"] = to_json(w.certificate_original_coords, fan);
    j["kgroup_witness"] = k;
  }
  return j;
}

RatVector parse_degree(std::string_view text) {
  RatVector v;
  for (const auto& part : split(text, ',')) {
    if (part.empty()) throw bad("empty entry in degree \"" + std::string(text) + "\"");
    try {
      v.push_back(parse_rational(part));
    } catch (const Error&) {
      throw bad("bad degree entry \"" + part + "\"");
    }
  }
  return v;
}

RayIndices parse_ray_list(const Fan& fan, std::string_view text) {
  const std::string s = trim(text);
  RayIndices out;
  if (s.find('(') == std::string::npos) {
    for (const auto& part : split(s, ',')) {
      std::size_t pos = 0;
      unsigned long idx = 0;
      try {
        idx = std::stoul(part, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (part.empty() || pos != part.size() || part[0] == '-') throw bad("bad ray index \"" + part + "\"");
      if (idx >= fan.rays().size()) throw bad("ray index " + part + " out of range");
      out.push_back(idx);
    }
  } else {
    std::size_t i = 0;
    while (i < s.size()) {
      std::size_t open = s.find('(', i);
      if (open == std::string::npos) {
        if (!trim(s.substr(i)).empty()) throw bad("trailing text in ray list");
        break;
      }
      std::size_t close = s.find(')', open);
      if (close == std::string::npos) throw bad("unbalanced parenthesis in ray list");
      IntVector v;
      for (const auto& part : split(std::string_view(s).substr(open + 1, close - open - 1), ',')) {
        try {
          Rat q = parse_rational(part);
          if (q.get_den() != 1) throw bad("");
          v.push_back(q.get_num());
        } catch (const Error&) {
          throw bad("bad ray coordinate \"" + part + "\"");
        }
      }
      if (v.size() != fan.rank()) throw bad("ray tuple has the wrong length");
      auto idx = fan.ray_index(v);
      if (!idx) throw bad("no ray matches " + s.substr(open, close - open + 1));
      out.push_back(*idx);
      i = close + 1;
      while (i < s.size() && (s[i] == ',' || std::isspace(static_cast<unsigned char>(s[i])))) ++i;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace toric
