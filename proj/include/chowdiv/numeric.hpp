#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace chowdiv {

// All kernel arithmetic is exact. Int is arbitrary precision; Rat is used
// internally by the linear algebra and never leaks into public results.
using Int = mpz_class;
using Rat = mpq_class;

inline Int abs_int(const Int& n) { return n < 0 ? Int(-n) : n; }

bool is_zero_vec(const std::vector<Int>& v);

// gcd of absolute values; content of the zero vector is 0.
Int content(const std::vector<Int>& v);

// Divide by the content and flip signs so the first nonzero coordinate is
// positive. The zero vector is returned unchanged.
std::vector<Int> normalize_primitive(std::vector<Int> v);

// Entrywise lexicographic order.
bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b);

// Prime factorization of |n| (n != 0), primes ascending.
std::vector<std::pair<Int, unsigned>> factorize(Int n);

// All positive divisors of |n| (n != 0), ascending.
std::vector<Int> divisors(const Int& n);

std::string to_string(const Int& n);

}  // namespace chowdiv
