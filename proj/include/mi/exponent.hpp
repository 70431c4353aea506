#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "mi/rational.hpp"

namespace mi {

/// Exponent of a monomial x^v: a point of the non-negative integer lattice.
/// The ambient dimension is carried by the containers that own these.
using ExponentVector = std::vector<Int>;

/// Componentwise u <= v, i.e. x^u divides x^v.
inline bool divides(const ExponentVector& u, const ExponentVector& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

inline ExponentVector exp_add(const ExponentVector& u, const ExponentVector& v) {
  ExponentVector w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
  return w;
}

inline bool lex_less(const ExponentVector& u, const ExponentVector& v) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return u[i] < v[i];
  }
  return false;
}

inline Int dot(const std::vector<Int>& w, const ExponentVector& v) {
  Int s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * v[i];
  return s;
}

inline bool is_zero_vector(const ExponentVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Divide out the gcd of the entries (sign-preserving).
inline void primitive_reduce(std::vector<Int>& v) {
  Int g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs(x));
  if (g > 1)
    for (auto& x : v) x /= g;
}

/// Componentwise-minimal elements of a point set, sorted lexicographically.
/// A proper divisor sorts before its multiples, so one forward pass over the
/// sorted list yields the antichain.
inline std::vector<ExponentVector> antichain_min(std::vector<ExponentVector> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<ExponentVector> kept;
  for (auto& p : pts) {
    bool dominated = false;
    for (const auto& k : kept) {
      if (divides(k, p)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(p));
  }
  return kept;
}

} // namespace mi
