#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hilbfan {

/// A monomial x^x y^y, also used as a box of a staircase.
struct Mono2 {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Mono2&, const Mono2&) = default;
};

/// Step-sequence notation I(n_1,...,n_r) = (x^r, x^{r-1}y^{n_1}, ..., y^{n_1+...+n_r}).
struct StepSeq {
  std::vector<int> steps;
  friend bool operator==(const StepSeq&, const StepSeq&) = default;
};

/// Finite-colength monomial ideal of K[[x,y]], stored as the weakly
/// decreasing heights of the columns of its staircase. The empty list is the
/// unit ideal.
class Staircase {
public:
  Staircase() = default;
  /// Throws ErrorCode::domain unless heights are weakly decreasing and positive.
  explicit Staircase(std::vector<int> heights);

  static Staircase unit() { return Staircase(); }
  /// The d-th power of the maximal ideal.
  static Staircase maximal_power(int d);
  /// Monomial ideal generated by the given monomials; throws if the
  /// colength would be infinite.
  static Staircase from_generators(std::span<const Mono2> gens);

  const std::vector<int>& heights() const noexcept { return heights_; }
  int columns() const noexcept { return static_cast<int>(heights_.size()); }
  int height(int column) const {
    return column >= 0 && column < columns() ? heights_[static_cast<std::size_t>(column)] : 0;
  }
  bool is_unit() const noexcept { return heights_.empty(); }
  bool contains(Mono2 m) const { return m.y >= height(m.x); }
  long colength() const;

  /// Boxes (monomials outside the ideal), column by column.
  std::vector<Mono2> boxes() const;
  /// Row widths of the staircase (the transposed heights).
  std::vector<int> row_widths() const;
  /// Minimal monomial generators, by increasing x exponent.
  std::vector<Mono2> generators() const;
  /// Ideal with x and y exchanged.
  Staircase transpose() const;

  friend auto operator<=>(const Staircase&, const Staircase&) = default;

private:
  std::vector<int> heights_;
};

Staircase from_steps(const StepSeq& s);
StepSeq to_steps(const Staircase& s);
inline Staircase I(std::initializer_list<int> steps) { return from_steps(StepSeq{steps}); }

Staircase multiply(const Staircase& a, const Staircase& b);
Staircase power(const Staircase& a, unsigned e);
Staircase add(const Staircase& a, const Staircase& b);
/// Ideal containment a ⊆ b.
bool leq(const Staircase& a, const Staircase& b);

struct MeasuringSequence {
  int a = 1;
  int b = 1;
  friend bool operator==(const MeasuringSequence&, const MeasuringSequence&) = default;
  /// Componentwise partial order.
  bool leq(const MeasuringSequence& o) const { return a <= o.a && b <= o.b; }
};

/// Characteristic-0 measuring sequence m(a,b): a is the largest drop between
/// consecutive column heights, b the same for row widths, over all ideals.
MeasuringSequence measuring_sequence(std::span<const Staircase> ideals);
inline MeasuringSequence measuring_sequence(const Staircase& s) {
  return measuring_sequence(std::span<const Staircase>(&s, 1));
}

/// Dimensions of the graded pieces of R/I for deg x = wt_x, deg y = wt_y.
std::map<long, long> graded_dims(const Staircase& s, long wt_x, long wt_y);

/// All staircases M with high ⊆ M ⊆ low and colength d.
std::vector<Staircase> enumerate_between(const Staircase& low, const Staircase& high, long d);

/// Exponent of the product of all monomials outside the ideal.
Mono2 complement_product(const Staircase& s);

std::string to_string(const StepSeq& s);
/// "I(1,2)" style notation.
std::string to_string(const Staircase& s);
/// Generator notation, e.g. "(x^2,x*y,y^3)".
std::string generators_string(const Staircase& s);
/// ASCII picture of the staircase, top row first.
std::string ascii_art(const Staircase& s);

}  // namespace hilbfan
