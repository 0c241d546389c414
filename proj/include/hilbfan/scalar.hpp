#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace hilbfan {

/// An element of Q (characteristic 0) or of the prime field F_p.
///
/// Rationals are kept reduced by GMP; residues live in [0,p). Mixing two
/// characteristics in one operation throws.
class Scalar {
public:
  Scalar() = default;
  Scalar(long value, unsigned characteristic = 0);
  Scalar(const mpz_class& value, unsigned characteristic = 0);
  explicit Scalar(const mpq_class& value);

  static Scalar zero(unsigned characteristic) { return Scalar(0L, characteristic); }
  static Scalar one(unsigned characteristic) { return Scalar(1L, characteristic); }

  unsigned characteristic() const noexcept { return p_; }
  bool is_zero() const noexcept { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const noexcept { return p_ == 0 ? q_ == 1 : r_ == 1; }
  bool is_integer() const noexcept { return p_ != 0 || q_.get_den() == 1; }

  /// Rational value; only meaningful in characteristic 0.
  const mpq_class& rational() const;
  /// Residue in [0,p); only meaningful in positive characteristic.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Multiply-subtract in place: *this -= a*b. Hot loop of every elimination.
  void submul(const Scalar& a, const Scalar& b);

  std::string to_string() const;

private:
  void check_same(const Scalar& o) const;

  unsigned p_ = 0;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

/// True when p is 0 or a prime.
bool valid_characteristic(unsigned p);

}  // namespace hilbfan
