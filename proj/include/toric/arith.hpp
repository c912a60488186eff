#pragma once

// Exact scalar and vector arithmetic shared by every module.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

IntVector make_int_vector(std::initializer_list<long> coords);

Int dot(const IntVector& a, const IntVector& b);
Rat dot(const RatVector& a, const RatVector& b);
Rat dot(const RatVector& a, const IntVector& b);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

/// gcd of the coordinates; zero for the zero vector.
Int content(const IntVector& v);

/// Divides by the content. The zero vector is returned unchanged.
IntVector primitive(const IntVector& v);

/// Smallest positive multiple of `v` that is integral and primitive.
IntVector primitive(const RatVector& v);

RatVector to_rat(const IntVector& v);
bool is_integral(const RatVector& v);
IntVector to_int(const RatVector& v);  // throws InvalidInput if not integral

/// lcm of the coordinate denominators (1 for the empty vector).
Int common_denominator(const RatVector& v);

Int sup_norm(const IntVector& v);
Rat sup_norm(const RatVector& v);

IntVector scaled(const IntVector& v, const Int& s);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
RatVector scaled(const RatVector& v, const Rat& s);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);

Int ceil(const Rat& q);
Int floor(const Rat& q);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& q);
std::string to_string(const Int& z);

/// Accepts "p", "-p" or "p/q". Throws InvalidInput on anything else.
Rat parse_rational(std::string_view text);

/// Lattice points with sup-norm exactly `r`, in lexicographic order.
std::vector<IntVector> sup_norm_shell(std::size_t n, long r);

}  // namespace toric
