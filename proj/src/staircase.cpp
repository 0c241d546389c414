#include "hilbfan/staircase.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <sstream>

#include "hilbfan/error.hpp"

namespace hilbfan {

Staircase::Staircase(std::vector<int> heights) : heights_(std::move(heights)) {
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    if (heights_[i] <= 0) throw Error(ErrorCode::domain, "staircase heights must be positive");
    if (i > 0 && heights_[i] > heights_[i - 1])
      throw Error(ErrorCode::domain, "staircase heights must be weakly decreasing");
  }
}

Staircase Staircase::maximal_power(int d) {
  std::vector<int> h;
  for (int i = d; i >= 1; --i) h.push_back(i);
  return Staircase(std::move(h));
}

Staircase Staircase::from_generators(std::span<const Mono2> gens) {
  int xmax = INT_MAX;
  for (const auto& g : gens)
    if (g.x < 0 || g.y < 0) throw Error(ErrorCode::domain, "negative exponent in generator");
  for (const auto& g : gens)
    if (g.y == 0) xmax = std::min(xmax, g.x);
  if (xmax == INT_MAX) throw Error(ErrorCode::domain, "ideal has infinite colength (no pure power of x)");
  std::vector<int> h;
  for (int i = 0; i < xmax; ++i) {
    int hi = INT_MAX;
    for (const auto& g : gens)
      if (g.x <= i) hi = std::min(hi, g.y);
    if (hi == INT_MAX) throw Error(ErrorCode::domain, "ideal has infinite colength (no pure power of y)");
    h.push_back(hi);
  }
  while (!h.empty() && h.back() == 0) h.pop_back();
  if (std::find(h.begin(), h.end(), 0) != h.end())
    throw Error(ErrorCode::internal, "non-monotone generator staircase");
  return Staircase(std::move(h));
}

long Staircase::colength() const {
  long s = 0;
  for (int h : heights_) s += h;
  return s;
}

std::vector<Mono2> Staircase::boxes() const {
  std::vector<Mono2> out;
  for (int i = 0; i < columns(); ++i)
    for (int j = 0; j < heights_[static_cast<std::size_t>(i)]; ++j) out.push_back({i, j});
  return out;
}

std::vector<int> Staircase::row_widths() const {
  std::vector<int> w;
  const int top = columns() ? heights_.front() : 0;
  for (int j = 0; j < top; ++j) {
    int c = 0;
    while (c < columns() && heights_[static_cast<std::size_t>(c)] > j) ++c;
    w.push_back(c);
  }
  return w;
}

std::vector<Mono2> Staircase::generators() const {
  std::vector<Mono2> g;
  int prev = INT_MAX;
  for (int i = 0; i <= columns(); ++i) {
    const int h = height(i);
    if (h < prev) g.push_back({i, h});
    prev = h;
  }
  return g;
}

Staircase Staircase::transpose() const { return Staircase(row_widths()); }

Staircase from_steps(const StepSeq& s) {
  for (int n : s.steps)
    if (n < 0) throw Error(ErrorCode::domain, "negative step");
  const std::size_t r = s.steps.size();
  std::vector<int> h(r);
  int acc = 0;
  for (std::size_t k = 0; k < r; ++k) {
    acc += s.steps[k];
    h[r - 1 - k] = acc;
  }
  while (!h.empty() && h.back() == 0) h.pop_back();
  return Staircase(std::move(h));
}

StepSeq to_steps(const Staircase& s) {
  StepSeq out;
  const int r = s.columns();
  for (int k = 1; k <= r; ++k) out.steps.push_back(s.height(r - k) - s.height(r - k + 1));
  return out;
}

Staircase multiply(const Staircase& a, const Staircase& b) {
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const auto sa = to_steps(a).steps;
  const auto sb = to_steps(b).steps;
  std::vector<long> na{0}, nb{0};
  for (int n : sa) na.push_back(na.back() + n);
  for (int n : sb) nb.push_back(nb.back() + n);
  const std::size_t r = sa.size(), k = sb.size();
  StepSeq out;
  long prev = 0;
  for (std::size_t i = 1; i <= r + k; ++i) {
    long best = LONG_MAX;
    for (std::size_t alpha = 0; alpha <= std::min(i, r); ++alpha) {
      const std::size_t beta = i - alpha;
      if (beta > k) continue;
      best = std::min(best, na[alpha] + nb[beta]);
    }
    out.steps.push_back(static_cast<int>(best - prev));
    prev = best;
  }
  return from_steps(out);
}

Staircase power(const Staircase& a, unsigned e) {
  Staircase r = Staircase::unit();
  for (unsigned i = 0; i < e; ++i) r = multiply(r, a);
  return r;
}

Staircase add(const Staircase& a, const Staircase& b) {
  std::vector<int> h;
  for (int i = 0; i < std::min(a.columns(), b.columns()); ++i) h.push_back(std::min(a.height(i), b.height(i)));
  return Staircase(std::move(h));
}

bool leq(const Staircase& a, const Staircase& b) {
  for (int i = 0; i < std::max(a.columns(), b.columns()); ++i)
    if (b.height(i) > a.height(i)) return false;
  return true;
}

MeasuringSequence measuring_sequence(std::span<const Staircase> ideals) {
  if (ideals.empty()) throw Error(ErrorCode::domain, "measuring sequence of an empty list");
  MeasuringSequence m;
  auto max_drop = [](const std::vector<int>& v) {
    int d = 0;
    for (std::size_t i = 0; i < v.size(); ++i) d = std::max(d, v[i] - (i + 1 < v.size() ? v[i + 1] : 0));
    return d;
  };
  for (const auto& s : ideals) {
    if (s.is_unit()) throw Error(ErrorCode::domain, "measuring sequence of the unit ideal");
    m.a = std::max(m.a, max_drop(s.heights()));
    m.b = std::max(m.b, max_drop(s.row_widths()));
  }
  return m;
}

std::map<long, long> graded_dims(const Staircase& s, long wt_x, long wt_y) {
  std::map<long, long> out;
  for (const auto& b : s.boxes()) ++out[wt_x * b.x + wt_y * b.y];
  return out;
}

std::vector<Staircase> enumerate_between(const Staircase& low, const Staircase& high, long d) {
  if (!leq(high, low)) throw Error(ErrorCode::precondition, "enumerate_between needs high ⊆ low");
  std::vector<Staircase> out;
  if (d < low.colength() || d > high.colength()) return out;
  const int cols = high.columns();
  // Suffix sums of the bounds prune the search.
  std::vector<long> min_suffix(static_cast<std::size_t>(cols) + 1, 0), max_suffix(static_cast<std::size_t>(cols) + 1, 0);
  for (int i = cols - 1; i >= 0; --i) {
    min_suffix[static_cast<std::size_t>(i)] = min_suffix[static_cast<std::size_t>(i) + 1] + low.height(i);
    max_suffix[static_cast<std::size_t>(i)] = max_suffix[static_cast<std::size_t>(i) + 1] + high.height(i);
  }
  std::vector<int> h(static_cast<std::size_t>(cols), 0);
  std::function<void(int, long, int)> rec = [&](int i, long remaining, int cap) {
    if (i == cols) {
      if (remaining == 0) {
        std::vector<int> hh(h.begin(), h.end());
        while (!hh.empty() && hh.back() == 0) hh.pop_back();
        out.emplace_back(std::move(hh));
      }
      return;
    }
    if (remaining < min_suffix[static_cast<std::size_t>(i)]) return;
    const int lo = low.height(i);
    const int hi = std::min(high.height(i), cap);
    for (int v = hi; v >= lo; --v) {
      const long rest = remaining - v;
      if (rest < min_suffix[static_cast<std::size_t>(i) + 1]) continue;
      // remaining columns can hold at most min(v, bound) each
      long can = 0;
      for (int j = i + 1; j < cols; ++j) can += std::min(v, high.height(j));
      if (rest > can) break;
      h[static_cast<std::size_t>(i)] = v;
      rec(i + 1, rest, v);
    }
    h[static_cast<std::size_t>(i)] = 0;
  };
  rec(0, d, high.columns() ? high.height(0) : 0);
  std::sort(out.begin(), out.end());
  return out;
}

Mono2 complement_product(const Staircase& s) {
  Mono2 m;
  for (const auto& b : s.boxes()) {
    m.x += b.x;
    m.y += b.y;
  }
  return m;
}

std::string to_string(const StepSeq& s) {
  std::ostringstream os;
  os << "I(";
  for (std::size_t i = 0; i < s.steps.size(); ++i) os << (i ? "," : "") << s.steps[i];
  os << ")";
  return os.str();
}

std::string to_string(const Staircase& s) { return to_string(to_steps(s)); }

std::string generators_string(const Staircase& s) {
  if (s.is_unit()) return "(1)";
  std::ostringstream os;
  os << "(";
  bool first = true;
  const auto gens = s.generators();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    const Mono2& g = *it;
    if (!first) os << ",";
    first = false;
    std::string part;
    if (g.x) part += g.x == 1 ? "x" : "x^" + std::to_string(g.x);
    if (g.x && g.y) part += "*";
    if (g.y) part += g.y == 1 ? "y" : "y^" + std::to_string(g.y);
    os << (part.empty() ? "1" : part);
  }
  os << ")";
  return os.str();
}

std::string ascii_art(const Staircase& s) {
  std::ostringstream os;
  const int top = s.columns() ? s.height(0) : 0;
  for (int j = top - 1; j >= 0; --j) {
    for (int i = 0; i < s.columns(); ++i)
      if (s.height(i) > j) os << "[]";
    os << "\n";
  }
  return os.str();
}

}  // namespace hilbfan
