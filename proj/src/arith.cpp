#include "toric/arith.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "toric/error.hpp"

namespace toric {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotASublattice: return "NotASublattice";
    case ErrorKind::NotFullRank: return "NotFullRank";
    case ErrorKind::NotInCone: return "NotInCone";
    case ErrorKind::InvalidFan: return "InvalidFan";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::OriginNotInterior: return "OriginNotInterior";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::NoFullDimensionalCone: return "NoFullDimensionalCone";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::DegreeNotInLattice: return "DegreeNotInLattice";
    case ErrorKind::DegreeNotInCone: return "DegreeNotInCone";
    case ErrorKind::EmptyPolyhedron: return "EmptyPolyhedron";
    case ErrorKind::NotAWall: return "NotAWall";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::LNotInRelativeInterior: return "LNotInRelativeInterior";
    case ErrorKind::CertificateInvalid: return "CertificateInvalid";
  }
  return "Unknown";
}

IntVector make_int_vector(std::initializer_list<long> coords) {
  IntVector v;
  v.reserve(coords.size());
  for (long c : coords) v.emplace_back(c);
  return v;
}

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVector& a, const RatVector& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVector& a, const IntVector& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

Int content(const IntVector& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntVector primitive(const IntVector& v) {
  Int g = content(v);
  if (g == 0 || g == 1) return v;
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

IntVector primitive(const RatVector& v) {
  Int d = common_denominator(v);
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat scaled_coord = v[i] * Rat(d);
    out[i] = scaled_coord.get_num();
  }
  return primitive(out);
}

RatVector to_rat(const IntVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

bool is_integral(const RatVector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rat& x) { return x.get_den() == 1; });
}

IntVector to_int(const RatVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) {
      throw Error(ErrorKind::InvalidInput,
                  "non-integral coordinate " + to_string(v[i]));
    }
    out[i] = v[i].get_num();
  }
  return out;
}

Int common_denominator(const RatVector& v) {
  Int d = 1;
  for (const Rat& x : v) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  }
  return d;
}

Int sup_norm(const IntVector& v) {
  Int m = 0;
  for (const Int& x : v) {
    Int a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

Rat sup_norm(const RatVector& v) {
  Rat m = 0;
  for (const Rat& x : v) {
    Rat a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

IntVector scaled(const IntVector& v, const Int& s) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVector scaled(const RatVector& v, const Rat& s) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

RatVector add(const RatVector& a, const RatVector& b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVector sub(const RatVector& a, const RatVector& b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Int ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool parse_integer(std::string_view s, Int& out) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  Int num;
  Int den = 1;
  bool ok = slash == std::string_view::npos
                ? parse_integer(s, num)
                : parse_integer(trim(s.substr(0, slash)), num) &&
                      parse_integer(trim(s.substr(slash + 1)), den);
  if (!ok || den == 0) {
    throw Error(ErrorKind::InvalidInput,
                "cannot parse rational '" + std::string(text) + "'");
  }
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::vector<IntVector> sup_norm_shell(std::size_t n, long r) {
  std::vector<IntVector> out;
  IntVector cur(n);
  std::function<void(std::size_t, bool)> rec = [&](std::size_t i, bool hit) {
    if (i == n) {
      if (hit) out.push_back(cur);
      return;
    }
    for (long c = -r; c <= r; ++c) {
      cur[i] = c;
      rec(i + 1, hit || c == r || c == -r);
    }
  };
  if (r == 0) {
    out.push_back(IntVector(n, Int(0)));
    return out;
  }
  rec(0, false);
  return out;
}

}  // namespace toric
