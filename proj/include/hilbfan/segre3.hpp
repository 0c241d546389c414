#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hilbfan/multipoly.hpp"
#include "hilbfan/orbit.hpp"
#include "hilbfan/staircase.hpp"

namespace hilbfan {

using Point3 = std::array<long, 3>;

/// Echelon basis of a space of polynomials, keyed by leading term.
class PolySpan {
public:
  explicit PolySpan(unsigned characteristic = 0) : p_(characteristic) {}

  /// Adds f; returns false when f was already in the span.
  bool add(MultiPoly f);
  bool contains(MultiPoly f) const;
  MultiPoly reduce(MultiPoly f) const;
  std::size_t dimension() const { return basis_.size(); }
  /// Fully reduced basis, each element made primitive with a positive
  /// leading coefficient (characteristic 0) or monic (characteristic p).
  std::vector<MultiPoly> basis() const;

private:
  unsigned p_;
  std::map<Exponents, MultiPoly, LexGreater> basis_;  // monic in the leading term
};

/// Scales f to a primitive integer polynomial with positive leading
/// coefficient (characteristic 0) or to a monic one (characteristic p).
MultiPoly normalize_content(const MultiPoly& f);

/// Nonzero maximal minors of the rows, one per column subset, as polynomials
/// in the parameters.
std::vector<MultiPoly> coordinate_functions(const ParamIdeal& P);

/// Span of the orbit coordinate functions of the product of the
/// Grassmannians: all products with one minor per factor.
std::vector<MultiPoly> coordinate_span(const std::vector<Staircase>& ideals, Family f = Family::G51,
                                       unsigned p = 0);

struct SupportPicture {
  std::set<Point3> points;
  /// Whether the pure monomial at each point lies in the span.
  std::map<Point3, bool> monomial_flags;
  /// Basis of the span modulo the span of its monomials.
  std::vector<MultiPoly> sporadic;

  std::vector<Point3> open_points() const;
};

SupportPicture support_picture(const std::vector<MultiPoly>& span);

struct Facet {
  Point3 normal{};  // primitive outward normal
  long offset = 0;  // normal . x <= offset on the hull
  std::vector<Point3> points;  // input points on the facet
};

/// Facets of the 3-D convex hull, coplanar triangles merged.
std::vector<Facet> hull3_faces(const std::vector<Point3>& points);

}  // namespace hilbfan
