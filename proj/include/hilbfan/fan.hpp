#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hilbfan/limits.hpp"
#include "hilbfan/orbit.hpp"
#include "hilbfan/staircase.hpp"

namespace hilbfan {

using Point = std::array<long, 2>;

/// Exponent vectors (of a, b) of the nonzero Pluecker coordinates.
struct ExponentSupport {
  enum class Method { probing, enumeration };
  Method method = Method::probing;
  std::set<Point> points;
  /// Hull vertex -> the monomial ideal whose coordinate sits there.
  std::map<Point, Staircase> vertex_map;
  /// Hull vertices in counterclockwise order.
  std::vector<Point> hull;
};

/// Every monomial ideal between the sandwich bounds, kept when its minor is
/// nonzero.
ExponentSupport exponent_support_enumerate(const ParamIdeal& P);
/// Hull vertices only, found by directional limits along edge normals.
ExponentSupport exponent_support_probe(const ParamIdeal& P);

/// Vertices of the convex hull, counterclockwise, collinear points dropped.
/// Starts at the lowest (then leftmost) point.
std::vector<Point> convex_hull(std::vector<Point> pts);

/// Counterclockwise angular order of nonzero vectors starting at angle 0.
bool angle_less(const Point& a, const Point& b);
Point primitive(Point v);

struct Cone {
  Point ray_cw{};   // clockwise bounding ray (absent for a one-cone fan)
  Point ray_ccw{};
  Point vertex{};   // Minkowski vertex
  std::vector<Point> factor_vertices;
  std::vector<Staircase> labels;  // one per source ideal
};

/// Normal fan of the hull of the support, with rays in counterclockwise
/// order and cone k between rays[k] and rays[k+1].
struct Fan2D {
  Family family = Family::G41;
  unsigned characteristic = 0;
  std::vector<Staircase> sources;
  std::vector<Point> rays;
  std::vector<Cone> cones;
  std::vector<ExponentSupport> supports;

  bool is_complete() const;
  /// Cone containing a direction in its interior, or -1 if on a ray.
  long cone_containing(Point u) const;
  long ray_index(Point u) const;
};

struct FanOptions {
  std::optional<Family> family;  // chosen from the measuring sequence if absent
  unsigned characteristic = 0;
  ExponentSupport::Method method = ExponentSupport::Method::probing;
};

Family select_family(const std::vector<Staircase>& ideals);
Fan2D standard_fan(const std::vector<Staircase>& ideals, const FanOptions& opts = {});
Fan2D fan_from_supports(Family f, unsigned p, const std::vector<Staircase>& sources,
                        std::vector<ExponentSupport> supports);

struct Adjacent {
  std::vector<Staircase> plus;   // cone just clockwise
  std::vector<Staircase> minus;  // cone just counterclockwise
};
Adjacent adjacent(const Fan2D& F, Point direction);

/// Figure-2 style walk: from the (0,1) side clockwise down to (1,2).
struct BoundaryDiagram {
  struct Item {
    bool is_ray = false;
    Point ray{};
    Staircase ideal;
  };
  std::vector<Item> items;
  /// Cone counterclockwise of (0,1) when (0,1) is a ray; not part of the
  /// drawn diagram.
  std::optional<Staircase> beyond_top;
};
BoundaryDiagram boundary_diagram(const Fan2D& F);
std::string to_string(const BoundaryDiagram& d);

/// The point on the median line of two cone ideals: (2c-d, 3c-d) for G41
/// and (2c-d, d-c) for G32, where the complement products differ by x^c/y^d.
Point median_point(Family f, const Staircase& I1, const Staircase& I2);
bool median_check(const Fan2D& F, const Staircase& I1, const Staircase& I2);

/// Products of directional limits lie in the limit of the product, for
/// every direction.
bool multiplicativity_check(const Staircase& I1, const Staircase& I2, const std::vector<Point>& directions,
                            Family f = Family::G41, unsigned p = 0);
/// Primitive directions with max(|u1|,|u2|) <= bound.
std::vector<Point> primitive_directions(long bound);

/// Self-intersection of each ray's divisor: u + w = k v gives -k.
std::map<Point, long> self_intersections(const Fan2D& F);
bool is_smooth(const Fan2D& F);

}  // namespace hilbfan
