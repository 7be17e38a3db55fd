#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilcox {

class Cyclotomic;

/// Arithmetic context for Q(xi_N) = Q[t]/(Phi_N(t)), xi a primitive N-th
/// root of unity. Fields are interned: get(N) always returns the same
/// instance, so pointer equality means same conductor.
class CycloField {
 public:
  static const CycloField& get(int N);

  int conductor() const { return N_; }
  int degree() const { return phi_; }

  Cyclotomic zero() const;
  Cyclotomic one() const;
  Cyclotomic integer(long v) const;
  Cyclotomic rational(const mpq_class& q) const;
  /// xi^k, any integer k (reduced mod N).
  Cyclotomic xi_pow(long k) const;

  /// Cyclotomic polynomial Phi_N as integer coefficients, degree phi(N), monic.
  const std::vector<mpz_class>& modulus() const { return phi_poly_; }

  /// Reduce an integer coefficient vector (any length) modulo Phi_N in place;
  /// result has length degree().
  void reduce(std::vector<mpz_class>& c) const;

 private:
  explicit CycloField(int N);

  int N_;
  int phi_;
  std::vector<mpz_class> phi_poly_;
  // xi^k mod Phi for k = 0..N-1
  std::vector<std::vector<mpz_class>> xi_;

  friend class Cyclotomic;
};

/// Element of Q(xi_N), stored as an integer coefficient vector over the power
/// basis 1, xi, ..., xi^(phi-1) with a common positive denominator, kept in
/// lowest terms. A default-constructed value is the ring-agnostic zero and
/// combines with elements of any conductor.
class Cyclotomic {
 public:
  Cyclotomic() : F_(nullptr), den_(1) {}

  static Cyclotomic zero() { return Cyclotomic(); }

  const CycloField* field() const { return F_; }
  int conductor() const { return F_ ? F_->conductor() : 0; }

  bool is_zero() const;
  bool is_rational() const;
  /// The value as a rational if is_rational(), else throws.
  mpq_class rational_value() const;

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic mul_rational(const mpq_class& q) const;

  /// Multiplicative inverse; throws std::domain_error on zero.
  Cyclotomic inv() const;
  Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inv(); }

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// Galois conjugation xi -> xi^(-1) (complex conjugation).
  Cyclotomic conj() const;
  /// x * conj(x); rational and non-negative for the embeddings we use.
  mpq_class norm_sq() const;

  /// Coefficient over the power basis as a reduced rational.
  mpq_class coeff(int j) const;

  /// Common positive denominator of the stored representation.
  const mpz_class& denominator() const { return den_; }
  /// gcd of the numerator vector (0 for the zero element).
  mpz_class content() const;

  std::string str() const;

  size_t hash() const;

 private:
  friend class CycloField;

  const CycloField* F_;
  std::vector<mpz_class> num_;
  mpz_class den_;

  void normalize();
  static const CycloField* common_field(const Cyclotomic& a, const Cyclotomic& b);
};

}  // namespace nilcox
