#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hilbfan/linalg.hpp"
#include "hilbfan/orbit.hpp"
#include "hilbfan/staircase.hpp"

namespace hilbfan {

/// The total order on non-negative integers used by p-shifts: larger p-adic
/// order first, then the usual order. For p = 0 it is the usual order.
bool pshift_precedes(unsigned long a, unsigned long b, unsigned p);

using ShiftSet = std::set<unsigned long>;

/// Walk T in the order above and send each element to the smallest unused
/// integer divisible by p^ord_p(element).
ShiftSet pshift(const ShiftSet& T, unsigned p);

/// Exponent set of the limit of span{(x+t)^e : e in T} as t -> infinity:
/// the greedy (smallest first) column basis of the matrix of binomial
/// coefficients C(e,s) mod p. Agrees with pshift for p = 0 and on many, but
/// not all, sets in positive characteristic; e.g. T = {1,3}, p = 2 gives
/// {0,2} where pshift gives {0,1}.
ShiftSet binomial_shift(const ShiftSet& T, unsigned p);

/// Rule applied on each line by elementary_limit.
enum class LineRule { binomial, pshift };

/// Monomial ideal of finite colength in n variables, stored by its complement.
class BoxIdeal {
public:
  using Exp = std::vector<int>;

  BoxIdeal(int num_vars, std::set<Exp> complement);
  static BoxIdeal from_staircase(const Staircase& s);
  Staircase to_staircase() const;

  int num_vars() const noexcept { return n_; }
  const std::set<Exp>& complement() const noexcept { return complement_; }
  bool contains(const Exp& m) const { return !complement_.count(m); }
  long colength() const { return static_cast<long>(complement_.size()); }

  friend bool operator==(const BoxIdeal&, const BoxIdeal&) = default;

private:
  int n_;
  std::set<Exp> complement_;
};

/// Flat limit as t -> infinity of the ideal under x_var -> x_var + t*h,
/// computed line by line. LineRule::pshift applies pshift literally; it can
/// return a non-ideal in positive characteristic, which is reported as a
/// domain error.
BoxIdeal elementary_limit(const BoxIdeal& I, int var, const BoxIdeal::Exp& h, unsigned p,
                          LineRule rule = LineRule::binomial);
/// Two-variable form: var 0 is x, 1 is y; h is the other variable to the
/// given power.
Staircase elementary_limit(const Staircase& I, int var, int h_power, unsigned p,
                           LineRule rule = LineRule::binomial);

/// Limit of a two-parameter family along a -> a t^u1, b -> b t^u2.
struct LimitIdeal {
  std::array<long, 2> direction{};
  unsigned characteristic = 0;
  Staircase high;
  std::vector<Mono2> basis;
  ScalarMatrix span;  // reduced echelon rows at a = b = 1
  std::optional<Staircase> monomial;
  /// Rows with the parameters restored; one-dimensional orbit when the
  /// limit is not monomial.
  PolyMatrix representative;
  /// The orbit modulus a^e0 / b^e1 (meaningful when not monomial).
  std::array<long, 2> modulus{};

  long colength() const { return high.colength() - static_cast<long>(span.rows()); }
  /// Generators: the polynomial rows followed by the monomial generators of high.
  std::vector<std::string> generator_strings() const;
  std::string modulus_string() const;
};

LimitIdeal directional_limit(const ParamIdeal& P, std::array<long, 2> u);

struct RayLimits {
  LimitIdeal point;
  Staircase plus;   // cone just clockwise of the ray
  Staircase minus;  // cone just counterclockwise
};

RayLimits ray_limits(const ParamIdeal& P, std::array<long, 2> ray);

/// Ideal generated by the monomial rows of an echelon span together with
/// high; throws if some row is not a monomial.
Staircase monomial_from_span(const ScalarMatrix& span, const std::vector<Mono2>& basis, const Staircase& high);

/// Staircase limit for a direction in the interior of a cone.
Staircase generic_limit(const ParamIdeal& P, std::array<long, 2> u);

}  // namespace hilbfan
