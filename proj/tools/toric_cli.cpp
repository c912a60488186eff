// toric: command-line front end. Every command writes one canonical JSON
// document; errors go to stderr as {"error": kind, "message": text}.

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "toric/error.hpp"
#include "toric/io.hpp"

using namespace toric;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Options {
  std::string input;
  std::string output;
  std::string builder;
  std::string cone;
  std::string wall;
  std::string degree;
  std::string lattice;
  long radius = 10;
  long sigma = -1;
  bool serial = false;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << "0123456789abcdef"[md[i] >> 4] << "0123456789abcdef"[md[i] & 15];
  return os.str();
}

Execution exec_of(const Options& o) { return o.serial ? Execution::serial : Execution::parallel; }

Sublattice lattice_of(const Options& o, std::size_t n) {
  if (o.lattice.empty()) return Sublattice::standard(n);
  Sublattice l = sublattice_from_json(parse_json(read_all(o.lattice)));
  if (l.ambient_rank() != n) throw Error(ErrorKind::InvalidInput, "lattice rank does not match the fan");
  return l;
}

RayIndices cone_of(const Fan& fan, const std::string& spec) {
  if (auto l = fan.label(spec)) return *l;
  return parse_ray_list(fan, spec);
}

Json run(const std::string& command, const Options& o, std::string& input_text) {
  if (command == "builders") {
    if (o.builder == "cube") return to_json(build_cube_fan());
    if (o.builder == "octahedron") return to_json(build_octahedron_fan());
    if (o.builder == "payne") return to_json(build_payne_fan());
    throw Error(ErrorKind::InvalidInput, "unknown builder " + o.builder);
  }

  input_text = read_all(o.input);
  const Fan fan = fan_from_json(parse_json(input_text));

  if (command == "validate") {
    ValidationReport report = validate(fan);
    Json j = to_json(report);
    if (report.valid) {
      try {
        j["complete"] = is_complete(fan);
      } catch (const Error&) {
        j["complete"] = false;
      }
    }
    return j;
  }
  if (command == "stats") {
    Json j = to_json(stats(fan));
    if (fan.rank() == 3) {
      try {
        j["euler"] = euler_check(fan);
      } catch (const Error&) {
        j["euler"] = nullptr;
      }
    }
    return j;
  }
  if (command == "cpl") {
    Json j;
    j["space"] = to_json(cpl_space(fan));
    auto w = nontrivial_cpl(fan);
    j["nontrivial"] = w ? to_json(*w) : Json(nullptr);
    if (fan.rank() == 3 && is_complete(fan)) j["counts"] = to_json(counting_certificate(fan));
    return j;
  }
  if (command == "multival") {
    std::optional<std::size_t> sigma;
    if (o.sigma >= 0) sigma = static_cast<std::size_t>(o.sigma);
    if (sigma && *sigma >= fan.maximal_count()) throw Error(ErrorKind::InvalidInput, "--sigma out of range");
    NontrivialConstruction c = construct_nontrivial(fan, sigma);
    Json j = to_json(c.function);
    Json r;
    r["sigma"] = c.sigma;
    Json facets = Json::array();
    for (const auto& u : c.facet_functionals) facets.push_back(to_json(u));
    r["facet_functionals"] = facets;
    r["consistency"] = to_json(check_consistency(c.function));
    r["triviality"] = to_json(is_trivial(c.function));
    r["zero_in_even_not_odd"] = c.even.contains(IntVector(fan.rank(), Int(0))) && !c.odd.contains(IntVector(fan.rank(), Int(0)));
    j["report"] = r;
    return j;
  }
  if (command == "fdim") {
    RayIndices rays = cone_of(fan, o.cone);
    const FanCone* c = fan.cone_by_rays(rays);
    if (!c) throw Error(ErrorKind::InvalidInput, "--cone is not a cone of the fan");
    RatVector m = parse_degree(o.degree);
    if (m.size() != fan.rank()) throw Error(ErrorKind::InvalidInput, "degree has the wrong length");
    Json j;
    j["cone"] = Json::array();
    for (std::size_t r : c->rays) j["cone"].push_back(r);
    j["report"] = to_json(f_dim(c->cone, m, lattice_of(o, fan.rank()), exec_of(o)));
    return j;
  }
  if (command == "certify") {
    RatVector m = parse_degree(o.degree);
    if (m.size() != fan.rank()) throw Error(ErrorKind::InvalidInput, "degree has the wrong length");
    return to_json(h1_wall_certificate(fan, cone_of(fan, o.wall), m, lattice_of(o, fan.rank()), exec_of(o)), fan);
  }
  if (command == "search") {
    Json j;
    j["radius"] = o.radius;
    Json certs = Json::array();
    for (const auto& c : find_h1_witness(fan, lattice_of(o, fan.rank()), o.radius, exec_of(o))) certs.push_back(to_json(c, fan));
    j["certificates"] = certs;
    return j;
  }
  if (command == "dichotomy") {
    ValidationReport report = validate(fan);
    if (!report.valid) throw Error(ErrorKind::InvalidFan, "fan failed validation: " + report.violations.front().message);
    return to_json(run_dichotomy(fan, o.radius, exec_of(o)), fan);
  }
  throw Error(ErrorKind::InvalidInput, "unknown command " + command);
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::SearchExhausted:
      return 2;
    case ErrorKind::CertificateInvalid:
      return 3;
    default:
      return 1;
  }
}

void report_error(std::string_view kind, const std::string& message) {
  Json e;
  e["error"] = kind;
  e["message"] = message;
  std::cerr << dump(e);
}

Json manifest(const std::string& command, const Options& o, const std::string& input_text, long long ms) {
  Json j;
  j["tool"] = "toric";
  j["version"] = kVersion;
  j["command"] = command;
  Json p;
  if (!o.input.empty()) p["input"] = o.input;
  if (!o.builder.empty()) p["builder"] = o.builder;
  if (!o.cone.empty()) p["cone"] = o.cone;
  if (!o.wall.empty()) p["wall"] = o.wall;
  if (!o.degree.empty()) p["degree"] = o.degree;
  if (!o.lattice.empty()) p["lattice"] = o.lattice;
  if (command == "search" || command == "dichotomy") p["radius"] = o.radius;
  if (o.sigma >= 0) p["sigma"] = o.sigma;
  p["serial"] = o.serial;
  j["parameters"] = p;
  j["input_sha256"] = o.input.empty() ? Json(nullptr) : Json(sha256_hex(input_text));
  j["outputs"] = Json::array({o.output});
  j["wall_clock_ms"] = ms;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toric geometry: fans, conewise linear functions, Danilov cokernel certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("fan", o.input, "Fan JSON file, '-' for stdin")->required();
    sub->add_option("-o,--output", o.output, "Write to this file (plus a .manifest.json sidecar)");
    sub->add_flag("--serial", o.serial, "Use the serial kernels");
  };

  add_common(app.add_subcommand("validate", "Check fan axioms"), true);
  add_common(app.add_subcommand("stats", "f-vector and neighbour counts"), true);
  auto* builders = app.add_subcommand("builders", "Emit a fixture fan");
  builders->add_option("name", o.builder, "cube, octahedron or payne")->required()->check(CLI::IsMember({"cube", "octahedron", "payne"}));
  add_common(builders, false);
  add_common(app.add_subcommand("cpl", "Conewise linear functions"), true);
  auto* multival = app.add_subcommand("multival", "Nontrivial multivalued conewise linear function");
  multival->add_option("--sigma", o.sigma, "Index of the distinguished maximal cone");
  add_common(multival, true);
  auto* fdim = app.add_subcommand("fdim", "Graded piece of the cokernel sheaf on one cone");
  fdim->add_option("--cone", o.cone, "Label, ray indices, or ray tuples")->required();
  fdim->add_option("--degree", o.degree, "a,b,c (integers or p/q)")->required();
  fdim->add_option("--lattice", o.lattice, "Lattice JSON for M");
  add_common(fdim, true);
  auto* certify = app.add_subcommand("certify", "H1 wall certificate");
  certify->add_option("--wall", o.wall, "Ray indices or ray tuples")->required();
  certify->add_option("--degree", o.degree, "a,b,c (integers or p/q)")->required();
  certify->add_option("--lattice", o.lattice, "Lattice JSON for M");
  add_common(certify, true);
  auto* search = app.add_subcommand("search", "All wall certificates up to a radius");
  search->add_option("--radius", o.radius, "Sup-norm bound on degrees")->check(CLI::NonNegativeNumber);
  search->add_option("--lattice", o.lattice, "Lattice JSON for M");
  add_common(search, true);
  auto* dichotomy = app.add_subcommand("dichotomy", "Line bundle or K-group witness for a complete 3-fan");
  dichotomy->add_option("--radius", o.radius, "Search radius for l")->check(CLI::NonNegativeNumber);
  add_common(dichotomy, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("InvalidInput", e.what());
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  std::string input_text;
  std::string out;
  try {
    out = dump(run(command, o, input_text));
  } catch (const Error& e) {
    report_error(to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    report_error("InvalidInput", e.what());
    return 1;
  }

  if (o.output.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
      report_error("InvalidInput", "cannot write " + o.output);
      return 1;
    }
    f << out;
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::ofstream(o.output + ".manifest.json", std::ios::binary) << dump(manifest(command, o, input_text, ms));
  }

  if (command == "validate" && !validate(fan_from_json(parse_json(input_text))).valid) return 1;
  return 0;
}
