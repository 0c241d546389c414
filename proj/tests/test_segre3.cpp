#include <doctest.h>

#include <fstream>
#include <json.hpp>

#include "hilbfan/fan.hpp"
#include "hilbfan/segre3.hpp"

using namespace hilbfan;

namespace {

const std::vector<Staircase> kY{I({3}), I({4}), I({1, 4}), I({5}), I({1, 5})};

MultiPoly var(Var v, int k = 1) { return MultiPoly::variable(v, 0, k); }
MultiPoly num(long c) { return MultiPoly::constant(c, 0); }

// (ac - b^2)(ac - 2b^2)
MultiPoly quartic() { return (var(A) * var(C) - var(B, 2)) * (var(A) * var(C) - num(2) * var(B, 2)); }

// Facet normals found by trying every primitive normal in a box: a plane
// supports a facet when the maximizing points span a plane.
std::set<Point3> facet_normals_by_search(const std::vector<Point3>& pts, long box) {
  std::set<Point3> out;
  for (long x = -box; x <= box; ++x)
    for (long y = -box; y <= box; ++y)
      for (long z = -box; z <= box; ++z) {
        if (std::gcd(std::gcd(std::abs(x), std::abs(y)), std::abs(z)) != 1) continue;
        const Point3 n{x, y, z};
        long best = LONG_MIN;
        for (const auto& p : pts) best = std::max(best, n[0] * p[0] + n[1] * p[1] + n[2] * p[2]);
        std::vector<Point3> face;
        for (const auto& p : pts)
          if (n[0] * p[0] + n[1] * p[1] + n[2] * p[2] == best) face.push_back(p);
        bool planar = false;
        for (std::size_t i = 1; i < face.size() && !planar; ++i)
          for (std::size_t j = i + 1; j < face.size() && !planar; ++j) {
            const Point3 u{face[i][0] - face[0][0], face[i][1] - face[0][1], face[i][2] - face[0][2]};
            const Point3 v{face[j][0] - face[0][0], face[j][1] - face[0][1], face[j][2] - face[0][2]};
            planar = u[1] * v[2] - u[2] * v[1] != 0 || u[2] * v[0] - u[0] * v[2] != 0 || u[0] * v[1] - u[1] * v[0] != 0;
          }
        if (planar) out.insert(n);
      }
  return out;
}

}  // namespace

TEST_CASE("polynomial spans") {
  PolySpan S;
  CHECK(S.add(var(A) + var(B)));
  CHECK(S.add(var(A) - var(B)));
  CHECK_FALSE(S.add(var(A)));
  CHECK(S.contains(var(B) * Scalar(3)));
  CHECK(S.dimension() == 2);
  const auto b = S.basis();
  CHECK(b == std::vector<MultiPoly>{var(A), var(B)});
  CHECK(normalize_content(var(A) * Scalar(mpq_class(-2, 3)) + num(4)) == var(A) - num(6));
}

TEST_CASE("coordinate spans of single factors") {
  CHECK(coordinate_span({Staircase::maximal_power(2)}) == std::vector<MultiPoly>{num(1)});
  CHECK(coordinate_span({I({3})}) == std::vector<MultiPoly>{var(A), num(1)});
  CHECK_THROWS_AS(coordinate_span({I({6})}), Error);
  const SupportPicture P = support_picture(coordinate_span({I({3})}));
  CHECK(P.points == std::set<Point3>{{0, 0, 0}, {1, 0, 0}});
  CHECK(P.open_points().empty());
  CHECK(P.sporadic.empty());
}

TEST_CASE("the span does not depend on the sandwich") {
  std::vector<MultiPoly> cur{num(1)};
  for (const auto& s : kY) {
    int e = 0;
    for (const Mono2& m : s.boxes()) e = std::max(e, m.x + m.y + 1);
    const ParamIdeal P =
        apply_family(s, Family::G51, apply_family(s, Family::G51).low, Staircase::maximal_power(e));
    PolySpan f;
    for (auto& g : coordinate_functions(P)) f.add(g);
    PolySpan next;
    for (const auto& u : cur)
      for (const auto& v : f.basis()) next.add(u * v);
    cur = next.basis();
  }
  CHECK(cur == coordinate_span(kY));
}

TEST_CASE("support picture of the five-factor product") {
  const auto span = coordinate_span(kY);
  const SupportPicture P = support_picture(span);
  long in_span = 0;
  for (const auto& kv : P.monomial_flags) in_span += kv.second;
  CHECK(span.size() == static_cast<std::size_t>(in_span) + P.sporadic.size());
  for (const auto& f : P.sporadic)
    for (const auto& [e, c] : f.terms()) CHECK_FALSE(P.monomial_flags.at({e[A], e[B], e[C]}));

  // Two sporadic generators, each b times the quartic times a power of a.
  REQUIRE(P.sporadic.size() == 2);
  CHECK(P.sporadic[0] == var(A, 5) * var(B) * quartic());
  CHECK(P.sporadic[1] == var(A, 2) * var(B, 2) * quartic());

  const std::vector<Point3> open{{2, 6, 0}, {3, 4, 1}, {4, 2, 2}, {5, 5, 0}, {6, 3, 1}, {7, 1, 2}};
  CHECK(P.open_points() == open);
}

TEST_CASE("support picture matches the dot plot") {
  std::ifstream in(std::string(HILBFAN_GOLDEN_DIR) + "/figure3.json");
  REQUIRE(in);
  const auto j = nlohmann::json::parse(in);
  std::map<std::pair<long, long>, std::pair<long, bool>> want;
  for (const auto& d : j.at("dots")) want[{d[0], d[1]}] = {d[2], d[3].get<int>() != 0};
  const SupportPicture P = support_picture(coordinate_span(kY));
  std::map<std::pair<long, long>, std::pair<long, bool>> got;
  for (const auto& [pt, in_span] : P.monomial_flags) {
    auto& slot = got[{pt[0], pt[1]}];
    if (pt[2] >= slot.first) slot = {pt[2], !in_span};
  }
  CHECK(got == want);
}

TEST_CASE("c-free slice lies in the two-parameter supports") {
  const SupportPicture P = support_picture(coordinate_span(kY));
  std::set<Point> sums{{0, 0}};
  for (const auto& s : kY) {
    const ExponentSupport S = exponent_support_enumerate(apply_family(s, Family::G41));
    std::set<Point> next;
    for (const Point& a : sums)
      for (const Point& b : S.points) next.insert({a[0] + b[0], a[1] + b[1]});
    sums = std::move(next);
  }
  for (const auto& pt : P.points)
    if (pt[2] == 0) CHECK(sums.count({pt[0], pt[1]}));
}

TEST_CASE("specialization keeps structural zeros") {
  const auto span = coordinate_span(kY);
  for (const auto& f : span) {
    const Scalar z = f.evaluate(A, Scalar(0)).evaluate(B, Scalar(0)).evaluate(C, Scalar(0)).constant_term();
    CHECK(z.is_zero() == !f.terms().count(exps(0, 0, 0, 0, 0, 0)));
  }
}

TEST_CASE("3-D hulls") {
  CHECK(hull3_faces({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).size() == 4);
  std::vector<Point3> cube;
  for (long i = 0; i < 8; ++i) cube.push_back({i & 1, (i >> 1) & 1, (i >> 2) & 1});
  CHECK(hull3_faces(cube).size() == 6);
  cube.push_back({0, 0, 0});
  cube.push_back({1, 1, 0});
  CHECK(hull3_faces(cube).size() == 6);
  CHECK_THROWS_AS(hull3_faces({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), Error);
  CHECK_THROWS_AS(hull3_faces({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}), Error);
}

TEST_CASE("hull of the five-factor picture") {
  const SupportPicture P = support_picture(coordinate_span(kY));
  const std::vector<Point3> pts(P.points.begin(), P.points.end());
  const auto faces = hull3_faces(pts);
  std::set<Point3> normals;
  for (const auto& f : faces) normals.insert(f.normal);
  CHECK(normals == facet_normals_by_search(pts, 6));
  CHECK(faces.size() == 7);
}
