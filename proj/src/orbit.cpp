#include "hilbfan/orbit.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace hilbfan {

namespace {

MultiPoly xy_monomial(int i, int j, unsigned p) {
  return MultiPoly::term(exps(0, 0, 0, 0, i, j), Scalar::one(p));
}

Mono2 xy_part(const Exponents& e) { return {e[X], e[Y]}; }

// Drop every term whose x,y part lies in the monomial ideal `high`.
MultiPoly truncate(const MultiPoly& f, const Staircase& high) {
  MultiPoly out(f.characteristic());
  for (const auto& [e, c] : f.terms())
    if (!high.contains(xy_part(e))) out.add_term(e, c);
  return out;
}

// Caches truncated powers of the images of x and y.
class ImagePowers {
public:
  ImagePowers(Family f, unsigned p, const Staircase& high) : high_(high), p_(p) {
    auto img = family_images(f, p);
    base_[0] = img[0];
    base_[1] = img[1];
    pows_[0].push_back(MultiPoly::constant(1, p));
    pows_[1].push_back(MultiPoly::constant(1, p));
  }

  const MultiPoly& power(int var, int e) {
    auto& v = pows_[var];
    while (static_cast<int>(v.size()) <= e) v.push_back(truncate(v.back() * base_[var], high_));
    return v[static_cast<std::size_t>(e)];
  }

  MultiPoly image(Mono2 m) { return truncate(power(0, m.x) * power(1, m.y), high_); }

private:
  Staircase high_;
  unsigned p_;
  MultiPoly base_[2];
  std::vector<MultiPoly> pows_[2];
};

void check_rank_two(Family f) {
  if (num_parameters(f) != 2)
    throw Error(ErrorCode::unsupported, to_string(f) + " has three parameters; weights along a ray are not unique");
}

// Bidegree-homogeneous family rows: write each row polynomial into the basis.
void fill_rows(ParamIdeal& P, const std::vector<MultiPoly>& images) {
  std::map<Mono2, std::size_t> col;
  for (std::size_t j = 0; j < P.basis.size(); ++j) col[P.basis[j]] = j;
  Matrix<MultiPoly> m(images.size(), P.basis.size(), MultiPoly(P.characteristic));
  for (std::size_t r = 0; r < images.size(); ++r) {
    for (const auto& [e, c] : images[r].terms()) {
      auto it = col.find(xy_part(e));
      if (it == col.end())
        throw Error(ErrorCode::precondition, "image term " + monomial_string(xy_part(e)) + " lies outside the sandwich");
      Exponents coeff = e;
      coeff[X] = 0;
      coeff[Y] = 0;
      m(r, it->second).add_term(coeff, c);
    }
  }
  P.rows.entries = std::move(m);
  P.rows.column_labels.clear();
  for (const auto& b : P.basis) P.rows.column_labels.push_back(monomial_string(b));
}

std::vector<Mono2> sandwich_basis(const Staircase& low, const Staircase& high) {
  std::vector<Mono2> out;
  for (const auto& b : high.boxes())
    if (low.contains(b)) out.push_back(b);
  std::sort(out.begin(), out.end(), column_before);
  return out;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::G41: return "G41";
    case Family::G32: return "G32";
    case Family::G51: return "G51";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  std::string s;
  for (char ch : name) s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (s == "G41") return Family::G41;
  if (s == "G32") return Family::G32;
  if (s == "G51") return Family::G51;
  throw Error(ErrorCode::parse, "unknown family '" + name + "' (expected G41, G32 or G51)");
}

int num_parameters(Family f) { return f == Family::G51 ? 3 : 2; }

std::array<MultiPoly, 2> family_images(Family f, unsigned p) {
  const MultiPoly x = MultiPoly::variable(X, p), y = MultiPoly::variable(Y, p);
  const MultiPoly a = MultiPoly::variable(A, p), b = MultiPoly::variable(B, p), c = MultiPoly::variable(C, p);
  switch (f) {
    case Family::G41: return {x + a * y.pow(2) + b * y.pow(3), y};
    case Family::G32: return {x + a * y.pow(2), y + b * x};
    case Family::G51: return {x + a * y.pow(2) + b * y.pow(3) + c * y.pow(4), y};
  }
  throw Error(ErrorCode::internal, "bad family");
}

MultiPoly substitute_family(const MultiPoly& f, Family fam, unsigned p) {
  auto img = family_images(fam, p);
  MultiPoly out(p);
  for (const auto& [e, c] : f.terms()) {
    Exponents rest = e;
    rest[X] = 0;
    rest[Y] = 0;
    out += MultiPoly::term(rest, c) * img[0].pow(static_cast<unsigned>(e[X])) * img[1].pow(static_cast<unsigned>(e[Y]));
  }
  return out;
}

bool ParamIdeal::is_constant() const {
  for (std::size_t i = 0; i < rows.entries.rows(); ++i)
    for (const auto& e : rows.entries.row(i))
      if (!e.is_constant()) return false;
  return true;
}

long ParamIdeal::column_of(Mono2 m) const {
  auto it = std::find(basis.begin(), basis.end(), m);
  return it == basis.end() ? -1 : static_cast<long>(it - basis.begin());
}

ScalarMatrix ParamIdeal::specialize(const std::array<Scalar, 3>& values) const {
  const auto& m = rows.entries;
  ScalarMatrix out(m.rows(), m.cols(), Scalar::zero(characteristic));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      out(i, j) = m(i, j).evaluate(A, values[0]).evaluate(B, values[1]).evaluate(C, values[2]).constant_term();
    }
  return out;
}

ScalarMatrix ParamIdeal::generic_point() const {
  const Scalar one = Scalar::one(characteristic);
  return specialize({one, one, one});
}

bool column_before(Mono2 l, Mono2 r) {
  const int wl = 2 * l.x + l.y, wr = 2 * r.x + r.y;
  if (wl != wr) return wl > wr;
  return l.y > r.y;
}

ParamIdeal apply_family(const Staircase& source, Family f, unsigned p) {
  if (source.is_unit()) throw Error(ErrorCode::domain, "the unit ideal has no orbit");
  std::vector<Mono2> supports;
  for (const auto& g : source.generators()) {
    const MultiPoly img = substitute_family(xy_monomial(g.x, g.y, p), f, p);
    for (const auto& [e, c] : img.terms()) supports.push_back(xy_part(e));
  }
  const Staircase low = Staircase::from_generators(supports);
  int e = 0, k = 0;
  for (const auto& b : source.boxes()) {
    e = std::max(e, b.x + b.y + 1);
    k = std::max(k, b.x + b.y / 2 + 1);
  }
  const Staircase m_pow = Staircase::maximal_power(e);
  const Staircase i2_pow = power(I({2}), static_cast<unsigned>(k));
  const Staircase& high = i2_pow.colength() <= m_pow.colength() ? i2_pow : m_pow;
  return apply_family(source, f, low, high, p);
}

ParamIdeal apply_family(const Staircase& source, Family f, const Staircase& low, const Staircase& high,
                        unsigned p) {
  if (!valid_characteristic(p)) throw Error(ErrorCode::domain, "characteristic must be 0 or prime");
  if (source.is_unit()) throw Error(ErrorCode::domain, "the unit ideal has no orbit");
  if (!leq(high, source)) throw Error(ErrorCode::precondition, "sandwich high part is not inside the ideal");
  if (!leq(high, low)) throw Error(ErrorCode::precondition, "sandwich parts are not nested");
  for (const auto& g : high.generators()) {
    const MultiPoly img = substitute_family(xy_monomial(g.x, g.y, p), f, p);
    for (const auto& [e, c] : img.terms())
      if (!high.contains(xy_part(e)))
        throw Error(ErrorCode::precondition, "sandwich high part is not invariant under " + to_string(f));
  }

  ParamIdeal P;
  P.family = f;
  P.characteristic = p;
  P.source = source;
  P.low = low;
  P.high = high;
  P.basis = sandwich_basis(low, high);
  for (const auto& g : source.generators())
    P.generators.push_back(substitute_family(xy_monomial(g.x, g.y, p), f, p));

  std::vector<Mono2> monos;
  for (const auto& b : high.boxes())
    if (source.contains(b)) monos.push_back(b);
  std::sort(monos.begin(), monos.end(), column_before);
  ImagePowers powers(f, p, high);
  std::vector<MultiPoly> images;
  for (const auto& m : monos) images.push_back(powers.image(m));
  P.row_weights = monos;
  fill_rows(P, images);
  return P;
}

PolyMatrix spanning_matrix_m41(int m) { return spanning_family_m41(m).rows; }

ParamIdeal spanning_family_m41(int m) {
  if (m < 1) throw Error(ErrorCode::domain, "m must be positive");
  ParamIdeal P;
  P.family = Family::G41;
  P.characteristic = 0;
  P.source = power(I({4}), static_cast<unsigned>(m));
  P.low = power(I({2}), static_cast<unsigned>(m));
  P.high = power(I({2}), static_cast<unsigned>(2 * m));
  P.basis = sandwich_basis(P.low, P.high);
  for (const auto& g : P.source.generators())
    P.generators.push_back(substitute_family(xy_monomial(g.x, g.y, 0), Family::G41, 0));

  ImagePowers powers(Family::G41, 0, P.high);
  std::vector<MultiPoly> images;
  for (int c = 1; c <= m; ++c)
    for (int d = 0; 4 * c + 2 * d <= 4 * m + 1; ++d)
      for (int s : {4 * m, 4 * m + 1}) {
        const int e = s - 4 * c - 2 * d;
        if (e < 0) continue;
        images.push_back(truncate(powers.power(0, c) * xy_monomial(d, e, 0), P.high));
        P.row_weights.push_back({c + d, e});
      }
  fill_rows(P, images);
  return P;
}

std::vector<Mono2> parameter_bidegrees(Family f) {
  switch (f) {
    case Family::G41: return {{1, -2}, {1, -3}};
    case Family::G32: return {{1, -2}, {-1, 1}};
    case Family::G51: return {{1, -2}, {1, -3}, {1, -4}};
  }
  return {};
}

WeightData weight_data(Family f, std::array<long, 2> ray) {
  const long u1 = ray[0], u2 = ray[1];
  if (u1 == 0 && u2 == 0) throw Error(ErrorCode::domain, "zero direction");
  WeightData w;
  w.parameter_bidegrees = parameter_bidegrees(f);
  switch (f) {
    case Family::G41:
    case Family::G51:
      w.wt_y = u2 - u1;
      w.wt_x = 2 * u2 - 3 * u1;
      break;
    case Family::G32:
      w.wt_y = u1 + u2;
      w.wt_x = u1 + 2 * u2;
      break;
  }
  for (const auto& d : w.parameter_bidegrees) w.parameter_weights.push_back(d.x * w.wt_x + d.y * w.wt_y);
  return w;
}

std::array<long, 2> minor_exponent(const ParamIdeal& P, const std::vector<Mono2>& columns) {
  check_rank_two(P.family);
  if (columns.size() != P.rank())
    throw Error(ErrorCode::dimension, "minor needs exactly " + std::to_string(P.rank()) + " columns");
  long wx = 0, wy = 0;
  for (const auto& r : P.row_weights) {
    wx += r.x;
    wy += r.y;
  }
  for (const auto& c : columns) {
    if (P.column_of(c) < 0) throw Error(ErrorCode::domain, "column " + monomial_string(c) + " not in the basis");
    wx -= c.x;
    wy -= c.y;
  }
  const auto deg = parameter_bidegrees(P.family);
  // Solve ea*deg[0] + eb*deg[1] = (wx, wy).
  const long det = static_cast<long>(deg[0].x) * deg[1].y - static_cast<long>(deg[1].x) * deg[0].y;
  const long na = wx * deg[1].y - deg[1].x * wy;
  const long nb = deg[0].x * wy - wx * deg[0].y;
  if (na % det != 0 || nb % det != 0 || na / det < 0 || nb / det < 0)
    throw Error(ErrorCode::domain, "structurally zero minor");
  return {na / det, nb / det};
}

std::array<long, 2> monomial_exponent(const ParamIdeal& P, const Staircase& M) {
  if (!leq(P.high, M) || !leq(M, P.low))
    throw Error(ErrorCode::domain, "monomial ideal " + to_string(M) + " is not inside the sandwich");
  std::vector<Mono2> cols;
  for (const auto& b : P.basis)
    if (M.contains(b)) cols.push_back(b);
  return minor_exponent(P, cols);
}

std::string monomial_string(Mono2 m) {
  std::string s;
  if (m.x) s += m.x == 1 ? "x" : "x^" + std::to_string(m.x);
  if (m.x && m.y) s += "*";
  if (m.y) s += m.y == 1 ? "y" : "y^" + std::to_string(m.y);
  return s.empty() ? "1" : s;
}

}  // namespace hilbfan
