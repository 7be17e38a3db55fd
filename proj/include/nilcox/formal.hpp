#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "nilcox/cyclotomic.hpp"

namespace nilcox {

/// Rational-coefficient Laurent polynomial in the half-power variable p,
/// with z = p^2 and q = p^(-n). This is the scalar ring before specializing
/// to a root of unity. No zero coefficients are stored.
class FormalScalar {
 public:
  FormalScalar() = default;

  static FormalScalar p_pow(long e, const mpq_class& c = 1) {
    FormalScalar r;
    if (c != 0) r.c_[e] = c;
    return r;
  }
  static FormalScalar rational(const mpq_class& c) { return p_pow(0, c); }
  static FormalScalar integer(long v) { return rational(mpq_class(v)); }

  bool is_zero() const { return c_.empty(); }

  FormalScalar operator-() const;
  FormalScalar operator+(const FormalScalar& o) const;
  FormalScalar operator-(const FormalScalar& o) const;
  FormalScalar operator*(const FormalScalar& o) const;
  FormalScalar& operator+=(const FormalScalar& o) { return *this = *this + o; }
  FormalScalar& operator-=(const FormalScalar& o) { return *this = *this - o; }
  FormalScalar& operator*=(const FormalScalar& o) { return *this = *this * o; }
  bool operator==(const FormalScalar& o) const { return c_ == o.c_; }
  bool operator!=(const FormalScalar& o) const { return !(*this == o); }

  /// p -> p^(-1) (the scalar action of the diagram reflection tau).
  FormalScalar conj() const;

  /// Exact quotient, or nullopt when o does not divide this in Q[p, p^-1].
  std::optional<FormalScalar> divide_exact(const FormalScalar& o) const;

  /// If the value is c * p^e, returns (c, e).
  std::optional<std::pair<mpq_class, long>> as_monomial() const;

  mpq_class eval_at_one() const;

  /// p -> xi, the primitive 2nm-th root of unity in the given field.
  Cyclotomic specialize(const CycloField& F) const;

  const std::map<long, mpq_class>& coeffs() const { return c_; }

  std::string str() const;

 private:
  std::map<long, mpq_class> c_;
};

}  // namespace nilcox
