#include "hilbfan/limits.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hilbfan {

namespace {

constexpr unsigned kInfiniteOrder = ~0u;

unsigned ord_p(unsigned long a, unsigned p) {
  if (a == 0) return kInfiniteOrder;
  unsigned k = 0;
  while (a % p == 0) {
    a /= p;
    ++k;
  }
  return k;
}

// Exponents (of a, b) by which the torus moves a=b=1 to generic (a,b) on
// the column x^i y^j.
std::array<int, 2> restore_exponents(Family f, Mono2 m) {
  switch (f) {
    case Family::G41: return {-3 * m.x - m.y, 2 * m.x + m.y};
    case Family::G32: return {m.x + m.y, 2 * m.x + m.y};
    case Family::G51: break;
  }
  throw Error(ErrorCode::unsupported, "directional limits need a two-parameter family");
}

std::vector<WeightKey> column_keys(const ParamIdeal& P, std::array<long, 2> primary,
                                   std::optional<std::array<long, 2>> secondary) {
  const WeightData w1 = weight_data(P.family, primary);
  WeightData w2;
  if (secondary) w2 = weight_data(P.family, *secondary);
  std::vector<WeightKey> keys;
  for (const auto& m : P.basis)
    keys.push_back({w1.wt_x * m.x + w1.wt_y * m.y, secondary ? w2.wt_x * m.x + w2.wt_y * m.y : 0});
  return keys;
}

PolyMatrix restore_parameters(const ParamIdeal& P, const ScalarMatrix& span) {
  PolyMatrix out;
  out.entries = Matrix<MultiPoly>(span.rows(), span.cols(), MultiPoly(P.characteristic));
  out.column_labels = P.rows.column_labels;
  for (std::size_t i = 0; i < span.rows(); ++i) {
    int min_a = INT_MAX, min_b = INT_MAX;
    for (std::size_t j = 0; j < span.cols(); ++j) {
      if (span(i, j).is_zero()) continue;
      auto e = restore_exponents(P.family, P.basis[j]);
      min_a = std::min(min_a, e[0]);
      min_b = std::min(min_b, e[1]);
    }
    for (std::size_t j = 0; j < span.cols(); ++j) {
      if (span(i, j).is_zero()) continue;
      auto e = restore_exponents(P.family, P.basis[j]);
      out.entries(i, j) = MultiPoly::term(exps(0, e[0] - min_a, e[1] - min_b, 0, 0, 0), span(i, j));
    }
  }
  return out;
}

std::string poly_row_string(const PolyMatrix& m, const std::vector<Mono2>& basis, std::size_t i) {
  MultiPoly f(m.entries.rows() ? m.entries(i, 0).characteristic() : 0);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (m.entries(i, j).is_zero()) continue;
    f += m.entries(i, j) * MultiPoly::term(exps(0, 0, 0, 0, basis[j].x, basis[j].y), Scalar::one(f.characteristic()));
  }
  return f.to_string();
}

}  // namespace

bool pshift_precedes(unsigned long a, unsigned long b, unsigned p) {
  if (p == 0) return a < b;
  const unsigned oa = ord_p(a, p), ob = ord_p(b, p);
  if (oa != ob) return oa > ob;
  return a < b;
}

ShiftSet pshift(const ShiftSet& T, unsigned p) {
  if (!valid_characteristic(p)) throw Error(ErrorCode::domain, "characteristic must be 0 or prime");
  std::vector<unsigned long> order(T.begin(), T.end());
  std::sort(order.begin(), order.end(), [p](unsigned long a, unsigned long b) { return pshift_precedes(a, b, p); });
  ShiftSet out;
  for (unsigned long t : order) {
    unsigned long step = 1;
    if (p != 0 && t != 0) {
      for (unsigned k = ord_p(t, p); k > 0; --k) step *= p;
    }
    unsigned long v = 0;
    if (t == 0 && p != 0) {
      v = 0;  // only 0 is divisible by every power of p
    } else {
      while (out.count(v)) v += step;
    }
    out.insert(v);
  }
  return out;
}

ShiftSet binomial_shift(const ShiftSet& T, unsigned p) {
  if (!valid_characteristic(p)) throw Error(ErrorCode::domain, "characteristic must be 0 or prime");
  if (T.empty()) return {};
  const unsigned long top = *T.rbegin();
  ScalarMatrix m(0, top + 1);
  for (unsigned long e : T) {
    ScalarVec row(top + 1, Scalar::zero(p));
    mpz_class binom = 1;
    for (unsigned long s = 0; s <= e; ++s) {
      row[s] = Scalar(binom, p);
      binom = binom * (e - s) / (s + 1);
    }
    m.append_row(row);
  }
  const auto pivots = row_echelon(m, {}, false);
  if (pivots.size() != T.size()) throw Error(ErrorCode::internal, "binomial rows are dependent");
  return ShiftSet(pivots.begin(), pivots.end());
}

BoxIdeal::BoxIdeal(int num_vars, std::set<Exp> complement) : n_(num_vars), complement_(std::move(complement)) {
  if (n_ <= 0) throw Error(ErrorCode::domain, "need at least one variable");
  for (const auto& e : complement_) {
    if (static_cast<int>(e.size()) != n_) throw Error(ErrorCode::dimension, "exponent vector of wrong length");
    for (int v = 0; v < n_; ++v) {
      if (e[static_cast<std::size_t>(v)] < 0) throw Error(ErrorCode::domain, "negative exponent");
      if (e[static_cast<std::size_t>(v)] == 0) continue;
      Exp d = e;
      --d[static_cast<std::size_t>(v)];
      if (!complement_.count(d)) throw Error(ErrorCode::domain, "complement is not closed under division");
    }
  }
}

BoxIdeal BoxIdeal::from_staircase(const Staircase& s) {
  std::set<Exp> c;
  for (const auto& b : s.boxes()) c.insert({b.x, b.y});
  return BoxIdeal(2, std::move(c));
}

Staircase BoxIdeal::to_staircase() const {
  if (n_ != 2) throw Error(ErrorCode::dimension, "only two-variable ideals have a staircase");
  std::vector<int> heights;
  for (const auto& e : complement_) {
    const auto i = static_cast<std::size_t>(e[0]);
    if (heights.size() <= i) heights.resize(i + 1, 0);
    heights[i] = std::max(heights[i], e[1] + 1);
  }
  return Staircase(heights);
}

BoxIdeal elementary_limit(const BoxIdeal& I, int var, const BoxIdeal::Exp& h, unsigned p, LineRule rule) {
  const int n = I.num_vars();
  if (var < 0 || var >= n) throw Error(ErrorCode::domain, "variable index out of range");
  if (static_cast<int>(h.size()) != n) throw Error(ErrorCode::dimension, "h has the wrong number of variables");
  if (h[static_cast<std::size_t>(var)] != 0) throw Error(ErrorCode::domain, "h must not involve the moving variable");
  if (std::all_of(h.begin(), h.end(), [](int e) { return e == 0; }))
    throw Error(ErrorCode::domain, "h must be a non-constant monomial");
  if (!valid_characteristic(p)) throw Error(ErrorCode::domain, "characteristic must be 0 or prime");

  const auto vi = static_cast<std::size_t>(var);
  // Line key (f, d): the line is x_var^a h^(d-a) f for 0 <= a <= d.
  std::set<std::pair<BoxIdeal::Exp, int>> lines;
  for (const auto& m : I.complement()) {
    BoxIdeal::Exp rest = m;
    const int a = rest[vi];
    rest[vi] = 0;
    int q = INT_MAX;
    for (std::size_t v = 0; v < h.size(); ++v)
      if (h[v] > 0) q = std::min(q, rest[v] / h[v]);
    for (std::size_t v = 0; v < h.size(); ++v) rest[v] -= q * h[v];
    lines.insert({rest, a + q});
  }

  std::set<BoxIdeal::Exp> out;
  for (const auto& [f, d] : lines) {
    auto point = [&](int a) {
      BoxIdeal::Exp e = f;
      for (std::size_t v = 0; v < h.size(); ++v) e[v] += (d - a) * h[v];
      e[vi] += a;
      return e;
    };
    ShiftSet T;
    for (int a = 0; a <= d; ++a)
      if (I.contains(point(a))) T.insert(static_cast<unsigned long>(a));
    const ShiftSet S = rule == LineRule::binomial ? binomial_shift(T, p) : pshift(T, p);
    for (int a = 0; a <= d; ++a) {
      if (S.count(static_cast<unsigned long>(a))) continue;
      out.insert(point(a));
    }
    if (!S.empty() && *S.rbegin() > static_cast<unsigned long>(d))
      throw Error(ErrorCode::internal, "p-shift left its line");
  }
  return BoxIdeal(n, std::move(out));
}

Staircase elementary_limit(const Staircase& I, int var, int h_power, unsigned p, LineRule rule) {
  if (var != 0 && var != 1) throw Error(ErrorCode::domain, "variable must be 0 (x) or 1 (y)");
  if (h_power < 1) throw Error(ErrorCode::domain, "h must be a non-constant monomial");
  BoxIdeal::Exp h{0, 0};
  h[static_cast<std::size_t>(1 - var)] = h_power;
  return elementary_limit(BoxIdeal::from_staircase(I), var, h, p, rule).to_staircase();
}

Staircase monomial_from_span(const ScalarMatrix& span, const std::vector<Mono2>& basis, const Staircase& high) {
  std::vector<Mono2> gens = high.generators();
  for (std::size_t i = 0; i < span.rows(); ++i) {
    std::size_t nonzero = 0, at = 0;
    for (std::size_t j = 0; j < span.cols(); ++j)
      if (!span(i, j).is_zero()) {
        ++nonzero;
        at = j;
      }
    if (nonzero != 1) throw Error(ErrorCode::domain, "limit is not a monomial ideal");
    gens.push_back(basis[at]);
  }
  Staircase s = Staircase::from_generators(gens);
  if (s.colength() != high.colength() - static_cast<long>(span.rows()))
    throw Error(ErrorCode::internal, "monomial limit is not an ideal of the expected colength");
  return s;
}

LimitIdeal directional_limit(const ParamIdeal& P, std::array<long, 2> u) {
  if (u[0] == 0 && u[1] == 0) throw Error(ErrorCode::domain, "zero direction");
  restore_exponents(P.family, {0, 0});  // rejects three-parameter families
  LimitIdeal L;
  L.direction = u;
  L.characteristic = P.characteristic;
  L.high = P.high;
  L.basis = P.basis;
  const auto keys = column_keys(P, u, std::nullopt);
  L.span = initial_subspace(P.generic_point(), keys);
  if (L.span.rows() != P.rank()) throw Error(ErrorCode::rank, "limit lost rank");
  bool mono = true;
  for (std::size_t i = 0; i < L.span.rows() && mono; ++i) {
    std::size_t nz = 0;
    for (std::size_t j = 0; j < L.span.cols(); ++j) nz += !L.span(i, j).is_zero();
    mono = nz == 1;
  }
  if (mono) L.monomial = monomial_from_span(L.span, L.basis, L.high);
  L.representative = restore_parameters(P, L.span);
  const long g = std::gcd(u[0], u[1]);
  L.modulus = {u[1] / g, u[0] / g};
  return L;
}

Staircase generic_limit(const ParamIdeal& P, std::array<long, 2> u) {
  LimitIdeal L = directional_limit(P, u);
  if (!L.monomial) throw Error(ErrorCode::domain, "direction lies on a ray of the fan");
  return *L.monomial;
}

RayLimits ray_limits(const ParamIdeal& P, std::array<long, 2> ray) {
  if (std::gcd(ray[0], ray[1]) != 1) throw Error(ErrorCode::domain, "ray must be primitive");
  RayLimits R{directional_limit(P, ray), {}, {}};
  const ScalarMatrix start = P.generic_point();
  const std::array<long, 2> cw{ray[1], -ray[0]}, ccw{-ray[1], ray[0]};
  R.plus = monomial_from_span(initial_subspace(start, column_keys(P, ray, cw)), P.basis, P.high);
  R.minus = monomial_from_span(initial_subspace(start, column_keys(P, ray, ccw)), P.basis, P.high);
  return R;
}

std::vector<std::string> LimitIdeal::generator_strings() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < representative.entries.rows(); ++i)
    out.push_back(poly_row_string(representative, basis, i));
  for (const auto& g : high.generators()) out.push_back(monomial_string(g));
  return out;
}

std::string LimitIdeal::modulus_string() const {
  auto power = [](const char* v, long e) {
    std::string s = v;
    if (e != 1) s += "^" + std::to_string(e);
    return s;
  };
  std::string num = "1", den = "1";
  auto place = [&](const char* v, long e, bool top) {
    if (e == 0) return;
    std::string& slot = (e > 0) == top ? num : den;
    const std::string term = power(v, e > 0 ? e : -e);
    slot = slot == "1" ? term : slot + "*" + term;
  };
  place("a", modulus[0], true);
  place("b", modulus[1], false);
  return den == "1" ? num : num + "/" + den;
}

}  // namespace hilbfan
