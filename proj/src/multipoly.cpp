#include "hilbfan/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "hilbfan/error.hpp"

namespace hilbfan {

MultiPoly MultiPoly::constant(const Scalar& c) {
  MultiPoly r(c.characteristic());
  r.add_term(Exponents{}, c);
  return r;
}

MultiPoly MultiPoly::term(const Exponents& e, const Scalar& c) {
  MultiPoly r(c.characteristic());
  r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::variable(Var v, unsigned characteristic, int power) {
  Exponents e{};
  e[v] = power;
  return term(e, Scalar::one(characteristic));
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Scalar MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Scalar::zero(p_) : it->second;
}

bool MultiPoly::uses(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first[v] != 0; });
}

int MultiPoly::degree(Var v) const {
  int d = INT_MIN;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

int MultiPoly::min_degree(Var v) const {
  int d = INT_MAX;
  for (const auto& [e, c] : terms_) d = std::min(d, e[v]);
  return d;
}

MultiPoly MultiPoly::coefficient(Var v, int k) const {
  MultiPoly r(p_);
  for (const auto& [e, c] : terms_) {
    if (e[v] != k) continue;
    Exponents f = e;
    f[v] = 0;
    r.terms_.emplace(f, c);
  }
  return r;
}

MultiPoly MultiPoly::evaluate(Var v, const Scalar& value) const {
  MultiPoly r(p_);
  for (const auto& [e, c] : terms_) {
    if (e[v] < 0 && value.is_zero()) throw Error(ErrorCode::domain, "evaluating t^-k at 0");
    Scalar f = c;
    Scalar base = e[v] >= 0 ? value : value.inverse();
    for (int i = 0; i < std::abs(e[v]); ++i) f *= base;
    Exponents g = e;
    g[v] = 0;
    r.add_term(g, f);
  }
  return r;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& q) const {
  MultiPoly r(p_);
  std::map<int, MultiPoly> powers;
  for (const auto& [e, c] : terms_) {
    if (e[v] < 0) throw Error(ErrorCode::domain, "substitute into a negative power");
    auto it = powers.find(e[v]);
    if (it == powers.end()) it = powers.emplace(e[v], q.pow(static_cast<unsigned>(e[v]))).first;
    Exponents g = e;
    g[v] = 0;
    r += it->second * term(g, c);
  }
  return r;
}

MultiPoly MultiPoly::shift(Var v, int k) const {
  MultiPoly r(p_);
  for (const auto& [e, c] : terms_) {
    Exponents g = e;
    g[v] += k;
    if (g[v] < 0 && v != T) throw Error(ErrorCode::domain, "negative exponent outside t");
    r.terms_.emplace_hint(r.terms_.end(), g, c);
  }
  return r;
}

MultiPoly MultiPoly::reduce_mod(unsigned p) const {
  if (p == p_) return *this;
  if (p_ != 0) throw Error(ErrorCode::domain, "cannot change a positive characteristic");
  MultiPoly r(p);
  for (const auto& [e, c] : terms_) {
    const mpq_class& q = c.rational();
    Scalar num(mpz_class(q.get_num()), p);
    Scalar den(mpz_class(q.get_den()), p);
    r.add_term(e, num / den);
  }
  return r;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
  if (c.characteristic() != p_)
    throw Error(ErrorCode::domain, "polynomial characteristic mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.p_ != p_) throw Error(ErrorCode::domain, "polynomial characteristic mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.p_ != p_) throw Error(ErrorCode::domain, "polynomial characteristic mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.p_ != b.p_) throw Error(ErrorCode::domain, "polynomial characteristic mismatch");
  MultiPoly r(a.p_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(Scalar::one(p_));
  MultiPoly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw Error(ErrorCode::domain, "division by the zero polynomial");
  MultiPoly q(f.p_);
  if (f.is_zero()) return q;
  const auto& [lg, cg] = *g.terms_.begin();
  const Scalar inv = cg.inverse();
  const int t_floor = f.min_degree(T) - g.min_degree(T);
  MultiPoly r = f;
  while (!r.is_zero()) {
    const auto& [lr, cr] = *r.terms_.begin();
    Exponents e;
    for (int i = 0; i < kNumVars; ++i) {
      e[i] = lr[i] - lg[i];
      if (e[i] < 0 && i != T) throw Error(ErrorCode::domain, "inexact polynomial division");
    }
    if (e[T] < t_floor) throw Error(ErrorCode::domain, "inexact polynomial division");
    MultiPoly qt = term(e, cr * inv);
    q += qt;
    r -= qt * g;
  }
  return q;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[kNumVars] = {"t", "a", "b", "c", "x", "y"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string cs = c.to_string();
    bool neg = c.characteristic() == 0 && sgn(c.rational()) < 0;
    if (neg) cs = (-c).to_string();
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    bool unit_monomial = e == Exponents{};
    if (cs != "1" || unit_monomial) {
      os << cs;
      if (!unit_monomial) os << "*";
    }
    bool first_var = true;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << names[i];
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace hilbfan
