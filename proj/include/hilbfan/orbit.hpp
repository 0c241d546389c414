#pragma once

#include <array>
#include <string>
#include <vector>

#include "hilbfan/linalg.hpp"
#include "hilbfan/multipoly.hpp"
#include "hilbfan/staircase.hpp"

namespace hilbfan {

/// Coset families of automorphisms fixing (x,y^2).
///   G41: x -> x + a y^2 + b y^3,          y -> y
///   G32: x -> x + a y^2,                  y -> y + b x
///   G51: x -> x + a y^2 + b y^3 + c y^4,  y -> y
enum class Family { G41, G32, G51 };

std::string to_string(Family f);
Family parse_family(const std::string& name);
int num_parameters(Family f);

/// Images of x and y under the family, with coefficients in characteristic p.
std::array<MultiPoly, 2> family_images(Family f, unsigned p = 0);

/// f(g(x), g(y)) for a polynomial f in x, y.
MultiPoly substitute_family(const MultiPoly& f, Family fam, unsigned p = 0);

/// The family applied to a monomial ideal, presented as a subspace of
/// low/high: one row per monomial of source outside high, holding the image
/// of that monomial reduced modulo high in the basis of low/high monomials.
struct ParamIdeal {
  Family family = Family::G41;
  unsigned characteristic = 0;
  Staircase source;
  std::vector<MultiPoly> generators;  // images of the minimal generators
  Staircase low;
  Staircase high;
  std::vector<Mono2> basis;
  std::vector<Mono2> row_weights;  // bidegree of each row
  PolyMatrix rows;

  std::size_t rank() const { return rows.entries.rows(); }
  bool is_constant() const;
  /// Index of a basis monomial, or -1.
  long column_of(Mono2 m) const;
  /// Rows with a, b, c replaced by the given values.
  ScalarMatrix specialize(const std::array<Scalar, 3>& values) const;
  /// Rows at a = b = c = 1.
  ScalarMatrix generic_point() const;
};

/// Order used for basis columns: descending weight with wt x = 2, wt y = 1,
/// ties broken by descending power of y.
bool column_before(Mono2 l, Mono2 r);

/// Sandwich chosen automatically: low is generated by the supports of the
/// images of the generators, high is the smaller of a power of the maximal
/// ideal and a power of (x,y^2) that lies inside the source.
ParamIdeal apply_family(const Staircase& source, Family f, unsigned p = 0);
/// Explicit sandwich; high must be invariant under the family and contained
/// in the source, low must contain the image.
ParamIdeal apply_family(const Staircase& source, Family f, const Staircase& low, const Staircase& high,
                        unsigned p = 0);

/// The rows g(a,b)(x^c) x^d y^e with 4c+2d+e in {4m, 4m+1}, c > 0, over the
/// monomials of I(2)^m / I(2)^{2m}.
PolyMatrix spanning_matrix_m41(int m);
/// Same rows packaged as the family of (x,y^4)^m with sandwich
/// (I(2)^m, I(2)^{2m}).
ParamIdeal spanning_family_m41(int m);

/// Torus weights that make a family homogeneous. In the bigrading with
/// x = (1,0), y = (0,1) every parameter has a fixed bidegree; along a ray
/// (u1,u2) the parameters get weights -u1, -u2 and x, y the integers below.
struct WeightData {
  long wt_x = 0;
  long wt_y = 0;
  std::vector<long> parameter_weights;
  std::vector<Mono2> parameter_bidegrees;
};
WeightData weight_data(Family f, std::array<long, 2> ray);
std::vector<Mono2> parameter_bidegrees(Family f);

/// Exponents (of a, b) of the maximal minor on the given columns, from
/// bidegree bookkeeping. Throws if the weights admit no monomial solution.
std::array<long, 2> minor_exponent(const ParamIdeal& P, const std::vector<Mono2>& columns);
/// Exponents of the Pluecker coordinate of the monomial ideal M
/// (high ⊆ M ⊆ low).
std::array<long, 2> monomial_exponent(const ParamIdeal& P, const Staircase& M);

std::string monomial_string(Mono2 m);

}  // namespace hilbfan
