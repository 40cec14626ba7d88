#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace csf {

using Int = boost::multiprecision::cpp_int;

// Polynomial in t with exact integer coefficients; coefficient of t^k is
// stored at index k and trailing zeros are trimmed (so the zero polynomial
// is the empty vector).
using TPoly = std::vector<Int>;

inline void tpoly_trim(TPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void tpoly_add(TPoly& a, const TPoly& b, const Int& scale = 1) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
  tpoly_trim(a);
}

inline TPoly tpoly_const(const Int& v) {
  if (v == 0) return {};
  return {v};
}

inline bool tpoly_is_zero(const TPoly& p) { return p.empty(); }

// Evaluates at t = 1.
inline Int tpoly_at_one(const TPoly& p) {
  Int s = 0;
  for (const Int& c : p) s += c;
  return s;
}

// Exact division by a positive integer; returns false when any coefficient
// is not divisible.
inline bool tpoly_divide_exact(TPoly& p, const Int& d) {
  for (Int& c : p) {
    if (c % d != 0) return false;
    c /= d;
  }
  return true;
}

std::string tpoly_to_string(const TPoly& p);

}  // namespace csf
