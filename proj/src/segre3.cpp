#include "hilbfan/segre3.hpp"

#include <algorithm>
#include <numeric>

#include "hilbfan/error.hpp"
#include "hilbfan/linalg.hpp"

namespace hilbfan {

namespace {

Point3 abc(const Exponents& e) { return {e[A], e[B], e[C]}; }

Exponents mono_abc(const Point3& p) {
  return exps(0, static_cast<int>(p[0]), static_cast<int>(p[1]), static_cast<int>(p[2]), 0, 0);
}

Point3 sub3(const Point3& a, const Point3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Point3 cross3(const Point3& a, const Point3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
long dot3(const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Point3 primitive3(Point3 v) {
  const long g = std::gcd(std::gcd(std::abs(v[0]), std::abs(v[1])), std::abs(v[2]));
  return {v[0] / g, v[1] / g, v[2] / g};
}

MeasuringSequence family_bound(Family f) {
  switch (f) {
    case Family::G41: return {4, 1};
    case Family::G32: return {3, 2};
    case Family::G51: return {5, 1};
  }
  return {1, 1};
}

}  // namespace

MultiPoly normalize_content(const MultiPoly& f) {
  if (f.is_zero()) return f;
  const unsigned p = f.characteristic();
  if (p != 0) return f * f.terms().begin()->second.inverse();
  mpz_class den = 1, num = 0;
  for (const auto& [e, c] : f.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.rational().get_num_mpz_t());
  }
  mpq_class scale(den, num);
  scale.canonicalize();
  if (sgn(f.terms().begin()->second.rational()) < 0) scale = -scale;
  return f * Scalar(scale);
}

MultiPoly PolySpan::reduce(MultiPoly f) const {
  // Eliminate every term that is a leading term of the basis.
  MultiPoly out(p_);
  while (!f.is_zero()) {
    const auto& [e, c] = *f.terms().begin();
    const auto it = basis_.find(e);
    if (it == basis_.end()) {
      out.add_term(e, c);
      f -= MultiPoly::term(e, c);
    } else {
      f -= it->second * c;
    }
  }
  return out;
}

bool PolySpan::contains(MultiPoly f) const { return reduce(std::move(f)).is_zero(); }

bool PolySpan::add(MultiPoly f) {
  f = reduce(std::move(f));
  if (f.is_zero()) return false;
  const Exponents lead = f.terms().begin()->first;
  f *= f.terms().begin()->second.inverse();
  basis_.emplace(lead, std::move(f));
  return true;
}

std::vector<MultiPoly> PolySpan::basis() const {
  // Back-substitute so each element avoids the other leading terms.
  std::vector<MultiPoly> out;
  for (auto it = basis_.rbegin(); it != basis_.rend(); ++it) {
    MultiPoly g = it->second;
    for (const auto& [lead, h] : basis_) {
      if (lead == it->first) continue;
      const auto t = g.terms().find(lead);
      if (t != g.terms().end()) g -= h * t->second;
    }
    out.push_back(normalize_content(g));
  }
  std::sort(out.begin(), out.end(), [](const MultiPoly& l, const MultiPoly& r) {
    return LexGreater{}(l.terms().begin()->first, r.terms().begin()->first);
  });
  return out;
}

std::vector<MultiPoly> coordinate_functions(const ParamIdeal& P) {
  const auto& M = P.rows.entries;
  const std::size_t r = M.rows(), n = M.cols();
  std::vector<MultiPoly> out;
  if (r == 0) {
    out.push_back(MultiPoly::constant(1, P.characteristic));
    return out;
  }
  std::vector<std::size_t> cols(r);
  std::iota(cols.begin(), cols.end(), 0);
  for (;;) {
    Matrix<MultiPoly> sub(r, r, MultiPoly(P.characteristic));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) sub(i, j) = M(i, cols[j]);
    MultiPoly d = det_fraction_free(sub);
    if (!d.is_zero()) out.push_back(std::move(d));
    // Next r-subset in lexicographic order.
    std::size_t i = r;
    while (i > 0 && cols[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < r; ++j) cols[j] = cols[j - 1] + 1;
  }
  return out;
}

std::vector<MultiPoly> coordinate_span(const std::vector<Staircase>& ideals, Family f, unsigned p) {
  if (ideals.empty()) throw Error(ErrorCode::domain, "coordinate span of an empty list");
  const MeasuringSequence m = measuring_sequence(std::span<const Staircase>(ideals));
  const MeasuringSequence bound = family_bound(f);
  if (!m.leq(bound))
    throw Error(ErrorCode::unsupported, "measuring sequence m(" + std::to_string(m.a) + "," + std::to_string(m.b) +
                                            ") is not below m(" + std::to_string(bound.a) + "," +
                                            std::to_string(bound.b) + ")");
  std::vector<MultiPoly> current{MultiPoly::constant(1, p)};
  for (const auto& I : ideals) {
    PolySpan factor(p);
    for (auto& g : coordinate_functions(apply_family(I, f, p))) factor.add(std::move(g));
    const auto fb = factor.basis();
    PolySpan next(p);
    for (const auto& u : current)
      for (const auto& v : fb) next.add(u * v);
    current = next.basis();
  }
  return current;
}

std::vector<Point3> SupportPicture::open_points() const {
  std::vector<Point3> out;
  for (const auto& [pt, in] : monomial_flags)
    if (!in) out.push_back(pt);
  return out;
}

SupportPicture support_picture(const std::vector<MultiPoly>& span) {
  SupportPicture S;
  const unsigned p = span.empty() ? 0 : span.front().characteristic();
  PolySpan V(p);
  for (const auto& f : span) {
    V.add(f);
    for (const auto& [e, c] : f.terms()) S.points.insert(abc(e));
  }
  PolySpan monomials(p);
  for (const auto& pt : S.points) {
    const MultiPoly m = MultiPoly::term(mono_abc(pt), Scalar::one(p));
    const bool in = V.contains(m);
    S.monomial_flags.emplace(pt, in);
    if (in) monomials.add(m);
  }
  // Drop in-span monomial terms; what is left spans the quotient.
  PolySpan rest(p);
  for (const auto& f : span) rest.add(monomials.reduce(f));
  S.sporadic = rest.basis();
  return S;
}

std::vector<Facet> hull3_faces(const std::vector<Point3>& input) {
  std::vector<Point3> pts(input);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  // Affine span check.
  std::size_t i1 = 1;
  while (i1 < pts.size() && pts[i1] == pts[0]) ++i1;
  if (pts.size() < 2) throw Error(ErrorCode::domain, "hull of fewer than two points: the affine span is a point");
  const Point3 d1 = sub3(pts[1], pts[0]);
  std::size_t i2 = 2;
  while (i2 < pts.size() && cross3(d1, sub3(pts[i2], pts[0])) == Point3{0, 0, 0}) ++i2;
  if (i2 == pts.size()) throw Error(ErrorCode::domain, "points are collinear: the affine span is a line");
  const Point3 n0 = cross3(d1, sub3(pts[i2], pts[0]));
  bool solid = false;
  for (const auto& q : pts)
    if (dot3(n0, sub3(q, pts[0])) != 0) solid = true;
  if (!solid) {
    const Point3 n = primitive3(n0);
    throw Error(ErrorCode::domain, "points are coplanar: the affine span is the plane " + std::to_string(n[0]) +
                                       "*a + " + std::to_string(n[1]) + "*b + " + std::to_string(n[2]) +
                                       "*c = " + std::to_string(dot3(n, pts[0])));
  }
  std::map<std::pair<Point3, long>, Facet> facets;
  const std::size_t N = pts.size();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      for (std::size_t k = j + 1; k < N; ++k) {
        Point3 n = cross3(sub3(pts[j], pts[i]), sub3(pts[k], pts[i]));
        if (n == Point3{0, 0, 0}) continue;
        n = primitive3(n);
        const long off = dot3(n, pts[i]);
        int side = 0;
        bool supporting = true;
        for (const auto& q : pts) {
          const long s = dot3(n, q) - off;
          if (s == 0) continue;
          const int sg = s > 0 ? 1 : -1;
          if (side == 0) side = sg;
          if (sg != side) {
            supporting = false;
            break;
          }
        }
        if (!supporting) continue;
        if (side > 0) n = {-n[0], -n[1], -n[2]};
        const long o = dot3(n, pts[i]);
        if (facets.count({n, o})) continue;
        Facet F{n, o, {}};
        for (const auto& q : pts)
          if (dot3(n, q) == o) F.points.push_back(q);
        facets.emplace(std::pair{n, o}, std::move(F));
      }
  std::vector<Facet> out;
  for (auto& kv : facets) out.push_back(std::move(kv.second));
  return out;
}

}  // namespace hilbfan
