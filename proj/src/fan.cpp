#include "hilbfan/fan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hilbfan/error.hpp"

namespace hilbfan {

namespace {

long cross(const Point& a, const Point& b) { return a[0] * b[1] - a[1] * b[0]; }
long dot(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1]; }
Point operator+(const Point& a, const Point& b) { return {a[0] + b[0], a[1] + b[1]}; }
Point operator-(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1]}; }

std::string point_string(const Point& p) {
  return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")";
}

// 0 for angles in [0, pi) measured from s, 1 for [pi, 2pi).
int half_from(const Point& s, const Point& v) {
  const long c = cross(s, v);
  return c > 0 || (c == 0 && dot(s, v) > 0) ? 0 : 1;
}

// Counterclockwise angle from s: a before b.
bool rel_less(const Point& s, const Point& a, const Point& b) {
  const int ha = half_from(s, a), hb = half_from(s, b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

bool same_direction(const Point& a, const Point& b) { return cross(a, b) == 0 && dot(a, b) > 0; }

// u strictly inside the counterclockwise sector from s to e.
bool strictly_between(const Point& s, const Point& u, const Point& e) {
  if (same_direction(s, u) || same_direction(e, u)) return false;
  if (same_direction(s, e)) return true;  // full turn
  return rel_less(s, u, e);
}

// u in the closed counterclockwise sector from s to e.
bool closed_between(const Point& s, const Point& u, const Point& e) {
  return same_direction(s, u) || same_direction(e, u) || strictly_between(s, u, e);
}

// Interior direction of the counterclockwise sector from s to e.
Point interior_direction(const Point& s, const Point& e) {
  const long c = cross(s, e);
  if (c > 0) return s + e;
  if (c == 0 && dot(s, e) < 0) return {-s[1], s[0]};
  if (c == 0) return {-s[0], -s[1]};  // single ray: opposite side
  return {-(s[0] + e[0]), -(s[1] + e[1])};  // reflex sector
}

Point to_point(const std::array<long, 2>& e) { return {e[0], e[1]}; }

// Bound on the total a,b degree of any maximal minor.
long degree_bound(const ParamIdeal& P) {
  long total = 0;
  for (std::size_t i = 0; i < P.rows.entries.rows(); ++i) {
    long row_max = 0;
    for (const auto& e : P.rows.entries.row(i))
      for (const auto& [ex, c] : e.terms())
        row_max = std::max<long>(row_max, std::abs(ex[A]) + std::abs(ex[B]));
    total += row_max;
  }
  return total;
}

std::vector<Point> hull_of(const std::map<Point, Staircase>& m) {
  std::vector<Point> pts;
  for (const auto& kv : m) pts.push_back(kv.first);
  return convex_hull(pts);
}

void check_two_parameter(const ParamIdeal& P) {
  if (num_parameters(P.family) != 2)
    throw Error(ErrorCode::unsupported, "exponent supports are planar only for two-parameter families");
}

}  // namespace

Point primitive(Point v) {
  const long g = std::gcd(v[0], v[1]);
  if (g == 0) throw Error(ErrorCode::domain, "zero vector has no direction");
  return {v[0] / g, v[1] / g};
}

bool angle_less(const Point& a, const Point& b) { return rel_less({1, 0}, a, b); }

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& l, const Point& r) {
    return l[1] != r[1] ? l[1] < r[1] : l[0] < r[0];
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  // Monotone chain on (y, x) order, then rotate to start at the lowest point.
  auto less_xy = [](const Point& l, const Point& r) { return l[0] != r[0] ? l[0] < r[0] : l[1] < r[1]; };
  std::sort(pts.begin(), pts.end(), less_xy);
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], p - h[k - 2]) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() == 2 || h.empty()) return h;  // collinear input
  auto start = std::min_element(h.begin(), h.end(), [](const Point& l, const Point& r) {
    return l[1] != r[1] ? l[1] < r[1] : l[0] < r[0];
  });
  std::rotate(h.begin(), start, h.end());
  return h;
}

ExponentSupport exponent_support_enumerate(const ParamIdeal& P) {
  check_two_parameter(P);
  ExponentSupport S;
  S.method = ExponentSupport::Method::enumeration;
  const ScalarMatrix G = P.generic_point();
  std::map<Point, std::vector<Staircase>> at;
  for (const Staircase& M : enumerate_between(P.low, P.high, P.source.colength())) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < P.basis.size(); ++j)
      if (M.contains(P.basis[j])) cols.push_back(j);
    if (cols.size() != G.rows()) continue;
    ScalarMatrix sub(G.rows(), cols.size());
    for (std::size_t i = 0; i < G.rows(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = G(i, cols[j]);
    // Every minor is a constant times a monomial, so a = b = 1 decides.
    if (det_fraction_free(sub).is_zero()) continue;
    const Point e = to_point(monomial_exponent(P, M));
    S.points.insert(e);
    at[e].push_back(M);
  }
  S.hull = convex_hull(std::vector<Point>(S.points.begin(), S.points.end()));
  for (const auto& v : S.hull) {
    if (at[v].size() != 1)
      throw Error(ErrorCode::internal, "several monomial ideals share the hull vertex " + point_string(v));
    S.vertex_map.emplace(v, at[v].front());
  }
  return S;
}

ExponentSupport exponent_support_probe(const ParamIdeal& P) {
  check_two_parameter(P);
  ExponentSupport S;
  S.method = ExponentSupport::Method::probing;
  std::map<Point, Staircase> found;
  bool grew = false;
  auto add = [&](const Staircase& M) {
    Point e;
    try {
      e = to_point(monomial_exponent(P, M));
    } catch (const Error& err) {
      throw Error(ErrorCode::internal, std::string("limit left the sandwich: ") + err.what());
    }
    auto [it, inserted] = found.emplace(e, M);
    if (!inserted && it->second != M)
      throw Error(ErrorCode::internal, "two limits share the exponent " + point_string(e));
    grew = grew || inserted;
  };
  // (N+1, N) separates all exponent vectors of norm below N.
  const long N = degree_bound(P) + 1;
  for (const Point& u : {Point{N + 1, N}, Point{-N, N + 1}, Point{-N - 1, -N}, Point{N, -N - 1}})
    add(generic_limit(P, {u[0], u[1]}));
  std::set<std::pair<Point, Point>> confirmed;
  for (;;) {
    grew = false;
    const std::vector<Point> h = hull_of(found);
    if (h.size() < 2) break;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const Point& v = h[i];
      const Point& w = h[(i + 1) % h.size()];
      if (confirmed.count({v, w})) continue;
      const Point n = primitive({w[1] - v[1], v[0] - w[0]});
      const RayLimits r = ray_limits(P, {n[0], n[1]});
      const std::size_t before = found.size();
      add(r.plus);
      add(r.minus);
      if (found.size() == before) confirmed.insert({v, w});
    }
    if (!grew) break;
  }
  S.vertex_map = std::move(found);
  S.hull = hull_of(S.vertex_map);
  // Interior points found along the way are not vertices.
  for (auto it = S.vertex_map.begin(); it != S.vertex_map.end();)
    it = std::find(S.hull.begin(), S.hull.end(), it->first) == S.hull.end() ? S.vertex_map.erase(it) : std::next(it);
  for (const auto& kv : S.vertex_map) S.points.insert(kv.first);
  return S;
}

bool Fan2D::is_complete() const {
  if (rays.empty()) return true;
  if (rays.size() == 1) return false;
  for (std::size_t k = 0; k < rays.size(); ++k) {
    const Point& s = rays[k];
    const Point& e = rays[(k + 1) % rays.size()];
    if (cross(s, e) < 0) return false;
  }
  return true;
}

long Fan2D::ray_index(Point u) const {
  const Point v = primitive(u);
  for (std::size_t k = 0; k < rays.size(); ++k)
    if (rays[k] == v) return static_cast<long>(k);
  return -1;
}

long Fan2D::cone_containing(Point u) const {
  if (rays.empty()) return 0;
  for (std::size_t k = 0; k < cones.size(); ++k)
    if (strictly_between(cones[k].ray_cw, u, cones[k].ray_ccw)) return static_cast<long>(k);
  return -1;
}

Family select_family(const std::vector<Staircase>& ideals) {
  const MeasuringSequence m = measuring_sequence(std::span<const Staircase>(ideals));
  if (m.leq({4, 1})) return Family::G41;
  if (m.leq({3, 2})) return Family::G32;
  const std::string ms = "m(" + std::to_string(m.a) + "," + std::to_string(m.b) + ")";
  if (m.leq({5, 1}))
    throw Error(ErrorCode::unsupported,
                "measuring sequence " + ms + " needs the three-parameter family; use the 3D support");
  throw Error(ErrorCode::unsupported, "measuring sequence " + ms + " is beyond m(4,1) and m(3,2)");
}

Fan2D fan_from_supports(Family f, unsigned p, const std::vector<Staircase>& sources,
                        std::vector<ExponentSupport> supports) {
  Fan2D F;
  F.family = f;
  F.characteristic = p;
  F.sources = sources;
  std::vector<Point> rays;
  for (const auto& S : supports) {
    const auto& h = S.hull;
    if (h.size() < 2) continue;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const Point& v = h[i];
      const Point& w = h[(i + 1) % h.size()];
      rays.push_back(primitive({w[1] - v[1], v[0] - w[0]}));
    }
  }
  std::sort(rays.begin(), rays.end(), angle_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  F.rays = rays;
  const std::size_t R = rays.size();
  const std::size_t ncones = R == 0 ? 1 : R;
  for (std::size_t k = 0; k < ncones; ++k) {
    Cone c;
    Point u{1, 0};
    if (R > 0) {
      c.ray_cw = rays[k];
      c.ray_ccw = rays[(k + 1) % R];
      u = interior_direction(c.ray_cw, c.ray_ccw);
    }
    for (const auto& S : supports) {
      const Point* best = nullptr;
      for (const auto& v : S.hull)
        if (!best || dot(u, v) > dot(u, *best)) best = &v;
      if (!best) throw Error(ErrorCode::internal, "empty exponent support");
      c.factor_vertices.push_back(*best);
      c.vertex = c.vertex + *best;
      c.labels.push_back(S.vertex_map.at(*best));
    }
    F.cones.push_back(std::move(c));
  }
  F.supports = std::move(supports);
  return F;
}

Fan2D standard_fan(const std::vector<Staircase>& ideals, const FanOptions& opts) {
  if (ideals.empty()) throw Error(ErrorCode::domain, "standard fan of an empty list");
  const Family f = opts.family ? *opts.family : select_family(ideals);
  if (num_parameters(f) != 2)
    throw Error(ErrorCode::unsupported, "the standard fan needs a two-parameter family");
  std::vector<ExponentSupport> supports;
  for (const auto& I : ideals) {
    const ParamIdeal P = apply_family(I, f, opts.characteristic);
    supports.push_back(opts.method == ExponentSupport::Method::enumeration ? exponent_support_enumerate(P)
                                                                             : exponent_support_probe(P));
  }
  return fan_from_supports(f, opts.characteristic, ideals, std::move(supports));
}

Adjacent adjacent(const Fan2D& F, Point direction) {
  const long r = F.rays.empty() ? -1 : F.ray_index(direction);
  if (r >= 0) {
    const std::size_t R = F.rays.size();
    const std::size_t k = static_cast<std::size_t>(r);
    return {F.cones[(k + R - 1) % R].labels, F.cones[k].labels};
  }
  const long c = F.cone_containing(direction);
  if (c < 0) throw Error(ErrorCode::internal, "direction " + point_string(direction) + " is in no cone");
  return {F.cones[static_cast<std::size_t>(c)].labels, F.cones[static_cast<std::size_t>(c)].labels};
}

BoundaryDiagram boundary_diagram(const Fan2D& F) {
  if (F.sources.size() != 1) throw Error(ErrorCode::precondition, "boundary diagrams are drawn for one ideal");
  BoundaryDiagram D;
  const std::size_t R = F.rays.size();
  const Point top{0, 1}, bottom{1, 2};
  if (R == 0) {
    D.items.push_back({false, {}, F.cones[0].labels[0]});
    return D;
  }
  auto cone_item = [&](std::size_t k) { return BoundaryDiagram::Item{false, {}, F.cones[k].labels[0]}; };
  auto ray_item = [&](std::size_t k) { return BoundaryDiagram::Item{true, F.rays[k], {}}; };
  // Next ray clockwise from the current position.
  std::size_t k;
  const long t = F.ray_index(top);
  if (t >= 0) {
    k = static_cast<std::size_t>(t);
    D.beyond_top = F.cones[k].labels[0];
  } else {
    const long c = F.cone_containing(top);
    if (c < 0) throw Error(ErrorCode::internal, "the direction (0,1) is in no cone");
    D.items.push_back(cone_item(static_cast<std::size_t>(c)));
    if (strictly_between(F.cones[static_cast<std::size_t>(c)].ray_cw, bottom, F.cones[static_cast<std::size_t>(c)].ray_ccw))
      return D;
    k = static_cast<std::size_t>(c);
  }
  for (std::size_t step = 0; step <= R; ++step) {
    D.items.push_back(ray_item(k));
    if (F.rays[k] == bottom) return D;
    k = (k + R - 1) % R;
    D.items.push_back(cone_item(k));
    if (strictly_between(F.cones[k].ray_cw, bottom, F.cones[k].ray_ccw)) return D;
  }
  throw Error(ErrorCode::internal, "boundary walk did not reach (1,2)");
}

std::string to_string(const BoundaryDiagram& d) {
  std::ostringstream out;
  bool first = true;
  for (const auto& it : d.items) {
    if (!first) out << " / ";
    first = false;
    if (it.is_ray)
      out << point_string(it.ray);
    else
      out << to_string(to_steps(it.ideal));
  }
  return out.str();
}

Point median_point(Family f, const Staircase& I1, const Staircase& I2) {
  const Mono2 c1 = complement_product(I1), c2 = complement_product(I2);
  const long c = static_cast<long>(c1.x) - c2.x;
  const long d = static_cast<long>(c2.y) - c1.y;
  if (c == 0 && d == 0) return {0, 0};
  if (c <= 0)
    throw Error(ErrorCode::precondition, "the complement products must differ by x^c/y^d with c > 0; got c = " +
                                             std::to_string(c));
  switch (f) {
    case Family::G41: return {2 * c - d, 3 * c - d};
    case Family::G32: return {2 * c - d, d - c};
    default: throw Error(ErrorCode::unsupported, "median line is defined for G41 and G32");
  }
}

bool median_check(const Fan2D& F, const Staircase& I1, const Staircase& I2) {
  auto find = [&](const Staircase& I) {
    for (std::size_t k = 0; k < F.cones.size(); ++k)
      if (F.cones[k].labels.size() == 1 && F.cones[k].labels[0] == I) return static_cast<long>(k);
    throw Error(ErrorCode::domain, to_string(to_steps(I)) + " labels no cone of the fan");
  };
  const long k1 = find(I1), k2 = find(I2);
  const Point P = median_point(F.family, I1, I2);
  if (P == Point{0, 0} || F.rays.empty()) return true;
  const Point Q{-P[0], -P[1]};
  auto in_sector = [&](const Point& s, const Point& e) {
    return closed_between(s, P, e) || closed_between(s, Q, e);
  };
  const auto& a = F.cones[static_cast<std::size_t>(k1)];
  const auto& b = F.cones[static_cast<std::size_t>(k2)];
  if (k1 == k2) return in_sector(a.ray_cw, a.ray_ccw);
  // The convex sector bounded by the two cones.
  const bool ab_convex = half_from(a.ray_cw, b.ray_ccw) == 0 && !same_direction(a.ray_cw, b.ray_ccw);
  return ab_convex ? in_sector(a.ray_cw, b.ray_ccw) : in_sector(b.ray_cw, a.ray_ccw);
}

std::vector<Point> primitive_directions(long bound) {
  std::vector<Point> out;
  for (long x = -bound; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y)
      if (std::gcd(x, y) == 1) out.push_back({x, y});
  std::sort(out.begin(), out.end(), angle_less);
  return out;
}

namespace {

using SparsePoly = std::map<Mono2, Scalar>;

std::vector<SparsePoly> limit_generators(const LimitIdeal& L) {
  std::vector<SparsePoly> g;
  for (std::size_t i = 0; i < L.span.rows(); ++i) {
    SparsePoly f;
    for (std::size_t j = 0; j < L.basis.size(); ++j)
      if (!L.span(i, j).is_zero()) f.emplace(L.basis[j], L.span(i, j));
    g.push_back(std::move(f));
  }
  for (const Mono2& m : L.high.generators()) g.push_back({{m, Scalar::one(L.characteristic)}});
  return g;
}

bool limit_contains(const LimitIdeal& L, const std::vector<std::size_t>& pivots, const SparsePoly& f) {
  ScalarVec v(L.basis.size(), Scalar::zero(L.characteristic));
  for (const auto& [m, c] : f) {
    if (L.high.contains(m) || c.is_zero()) continue;
    const auto it = std::find(L.basis.begin(), L.basis.end(), m);
    if (it == L.basis.end()) return false;
    v[static_cast<std::size_t>(it - L.basis.begin())] += c;
  }
  const ScalarVec r = reduce_against(v, L.span, pivots);
  return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace

bool multiplicativity_check(const Staircase& I1, const Staircase& I2, const std::vector<Point>& directions, Family f,
                            unsigned p) {
  const ParamIdeal P1 = apply_family(I1, f, p);
  const ParamIdeal P2 = apply_family(I2, f, p);
  const ParamIdeal P3 = apply_family(multiply(I1, I2), f, p);
  for (const Point& u : directions) {
    const LimitIdeal L1 = directional_limit(P1, {u[0], u[1]});
    const LimitIdeal L2 = directional_limit(P2, {u[0], u[1]});
    const LimitIdeal L3 = directional_limit(P3, {u[0], u[1]});
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < L3.span.rows(); ++i)
      for (std::size_t j = 0; j < L3.span.cols(); ++j)
        if (!L3.span(i, j).is_zero()) {
          pivots.push_back(j);
          break;
        }
    const auto g1 = limit_generators(L1);
    const auto g2 = limit_generators(L2);
    for (const auto& a : g1)
      for (const auto& b : g2) {
        SparsePoly prod;
        for (const auto& [ma, ca] : a)
          for (const auto& [mb, cb] : b) {
            const Mono2 m{ma.x + mb.x, ma.y + mb.y};
            auto [it, ins] = prod.emplace(m, ca * cb);
            if (!ins) it->second += ca * cb;
          }
        if (!limit_contains(L3, pivots, prod)) return false;
      }
  }
  return true;
}

bool is_smooth(const Fan2D& F) {
  const std::size_t R = F.rays.size();
  if (R < 3) return false;
  for (std::size_t k = 0; k < R; ++k)
    if (std::abs(cross(F.rays[k], F.rays[(k + 1) % R])) != 1) return false;
  return true;
}

std::map<Point, long> self_intersections(const Fan2D& F) {
  const std::size_t R = F.rays.size();
  if (R < 3 || !F.is_complete()) throw Error(ErrorCode::precondition, "self-intersections need a complete fan");
  std::map<Point, long> out;
  for (std::size_t k = 0; k < R; ++k) {
    const Point& prev = F.rays[(k + R - 1) % R];
    const Point& v = F.rays[k];
    const Point& next = F.rays[(k + 1) % R];
    if (std::abs(cross(prev, v)) != 1 || std::abs(cross(v, next)) != 1)
      throw Error(ErrorCode::precondition, "fan is not smooth at the ray " + point_string(v));
    const Point s = prev + next;
    if (cross(s, v) != 0) throw Error(ErrorCode::internal, "neighbour sum is not on the ray");
    const long m = v[0] != 0 ? s[0] / v[0] : s[1] / v[1];
    out.emplace(v, -m);
  }
  return out;
}

}  // namespace hilbfan
