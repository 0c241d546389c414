#pragma once

#include <array>
#include <climits>
#include <cstdint>
#include <map>
#include <string>

#include "hilbfan/scalar.hpp"

namespace hilbfan {

/// Variables a polynomial may use. The enumeration order is the canonical
/// lexicographic term order.
enum Var : int { T = 0, A, B, C, X, Y };
inline constexpr int kNumVars = 6;

using Exponents = std::array<int, kNumVars>;

struct LexGreater {
  bool operator()(const Exponents& l, const Exponents& r) const { return l > r; }
};

/// Sparse polynomial in t, a, b, c, x, y over a Scalar field. Only t may carry
/// negative exponents. Terms are stored in decreasing lex order with no zero
/// coefficients, so structural equality is polynomial equality.
class MultiPoly {
public:
  using Terms = std::map<Exponents, Scalar, LexGreater>;

  explicit MultiPoly(unsigned characteristic = 0) : p_(characteristic) {}

  static MultiPoly constant(const Scalar& c);
  static MultiPoly constant(long c, unsigned characteristic) {
    return constant(Scalar(c, characteristic));
  }
  static MultiPoly term(const Exponents& e, const Scalar& c);
  static MultiPoly variable(Var v, unsigned characteristic, int power = 1);

  unsigned characteristic() const noexcept { return p_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  bool uses(Var v) const;
  std::size_t size() const noexcept { return terms_.size(); }

  /// Largest (smallest) exponent of v; INT_MIN (INT_MAX) for the zero polynomial.
  int degree(Var v) const;
  int min_degree(Var v) const;

  /// Coefficient of v^k, with v removed.
  MultiPoly coefficient(Var v, int k) const;
  MultiPoly evaluate(Var v, const Scalar& value) const;
  /// Replace v by q. v must appear with non-negative exponents only.
  MultiPoly substitute(Var v, const MultiPoly& q) const;
  /// Multiply by the monomial v^k.
  MultiPoly shift(Var v, int k) const;
  /// Map onto characteristic p (char 0 with integral or p-integral coefficients).
  MultiPoly reduce_mod(unsigned p) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& c);
  void add_term(const Exponents& e, const Scalar& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.p_ == b.p_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned e) const;

  /// Exact quotient f/g; throws ErrorCode::domain when g does not divide f.
  static MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g);

  std::string to_string() const;

private:
  unsigned p_;
  Terms terms_;
};

inline Exponents exps(int t, int a, int b, int c, int x, int y) { return {t, a, b, c, x, y}; }
inline Exponents exps_t(int t) { return {t, 0, 0, 0, 0, 0}; }

}  // namespace hilbfan
