#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "mi/errors.hpp"

namespace mi {

/// Arbitrary-precision integer. All lattice data (exponents, facet normals,
/// dot products) lives here; nothing in a decision procedure ever rounds.
/// Expression templates are off so operators yield plain values.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

/// Arbitrary-precision rational, stored reduced with positive denominator
/// (the backend maintains canonical form).
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// floor(p/q) with sign-correct behaviour for negative p.
inline Int floor_div(const Int& p, const Int& q) {
  Int d = p / q; // truncates toward zero
  if (p % q != 0 && ((p < 0) != (q < 0))) --d;
  return d;
}

inline Int floor_rat(const Rat& r) { return floor_div(rat_num(r), rat_den(r)); }

inline Int ceil_rat(const Rat& r) {
  Int f = floor_rat(r);
  return (Rat(f) == r) ? f : f + 1;
}

/// Parses "p/q" or "p". Denominator must be positive after reduction.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw InputError("rational with zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw InputError("cannot parse rational: " + s);
  }
}

/// Canonical wire form "p/q" (always carries the denominator).
inline std::string format_rat(const Rat& r) {
  return rat_num(r).str() + "/" + rat_den(r).str();
}

/// A rational extended with a single point at +infinity. Covolumes,
/// colengths, multiplicities and thresholds of non-primary data are infinite.
class ExtRat {
public:
  static ExtRat infinite() { return ExtRat(true, Rat(0)); }
  static ExtRat finite(Rat v) { return ExtRat(false, std::move(v)); }

  bool is_infinite() const { return infinite_; }
  /// Finite value; calling this on an infinite value is a logic error.
  const Rat& value() const {
    if (infinite_) throw Error("value() on infinite quantity");
    return value_;
  }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }

private:
  ExtRat(bool inf, Rat v) : infinite_(inf), value_(std::move(v)) {}
  bool infinite_;
  Rat value_;
};

inline std::string format_ext(const ExtRat& e) {
  return e.is_infinite() ? std::string("inf") : format_rat(e.value());
}

} // namespace mi
