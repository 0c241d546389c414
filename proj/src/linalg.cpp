#include "hilbfan/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace hilbfan {

namespace {

unsigned matrix_characteristic(const ScalarMatrix& m) {
  return m.rows() && m.cols() ? m(0, 0).characteristic() : 0;
}

}  // namespace

Scalar det_fraction_free(const ScalarMatrix& input) {
  if (input.rows() != input.cols())
    throw Error(ErrorCode::dimension, "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  const unsigned p = matrix_characteristic(input);
  if (n == 0) return Scalar::one(p);
  ScalarMatrix m = input;
  Scalar prev = Scalar::one(p);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t i = k + 1;
      while (i < n && m(i, k).is_zero()) ++i;
      if (i == n) return Scalar::zero(p);
      m.swap_rows(i, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Scalar v = m(k, k) * m(i, j);
        v.submul(m(i, k), m(k, j));
        m(i, j) = v / prev;
      }
      m(i, k) = Scalar::zero(p);
    }
    prev = m(k, k);
  }
  Scalar d = m(n - 1, n - 1);
  return negate ? -d : d;
}

MultiPoly det_fraction_free(const Matrix<MultiPoly>& input) {
  if (input.rows() != input.cols())
    throw Error(ErrorCode::dimension, "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  const unsigned p = n ? input(0, 0).characteristic() : 0;
  if (n == 0) return MultiPoly::constant(1, p);
  Matrix<MultiPoly> m = input;
  MultiPoly prev = MultiPoly::constant(1, p);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      // Prefer the sparsest available pivot to limit expression swell.
      std::size_t best = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (!m(i, k).is_zero() && (best == n || m(i, k).size() < m(best, k).size())) best = i;
      if (best == n) return MultiPoly(p);
      m.swap_rows(best, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = MultiPoly::divide_exact(v, prev);
      }
      m(i, k) = MultiPoly(p);
    }
    prev = m(k, k);
  }
  MultiPoly d = m(n - 1, n - 1);
  return negate ? -d : d;
}

std::vector<std::size_t> row_echelon(ScalarMatrix& m, std::span<const std::size_t> column_order,
                                     bool reduced) {
  std::vector<std::size_t> order(column_order.begin(), column_order.end());
  if (order.empty()) {
    order.resize(m.cols());
    std::iota(order.begin(), order.end(), 0);
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col : order) {
    if (r == m.rows()) break;
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, r);
    auto prow = m.row(r);
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!prow[j].is_zero()) support.push_back(j);
    if (reduced) {
      const Scalar inv = prow[col].inverse();
      for (std::size_t j : support) prow[j] *= inv;
    }
    for (std::size_t i = reduced ? 0 : r + 1; i < m.rows(); ++i) {
      if (i == r || m(i, col).is_zero()) continue;
      auto row = m.row(i);
      Scalar factor = row[col] / prow[col];
      for (std::size_t j : support) row[j].submul(factor, prow[j]);
    }
    pivots.push_back(col);
    ++r;
  }
  // Rows past the pivots are zero on the visited columns but may still carry
  // entries elsewhere; keep those, drop genuinely zero rows.
  std::size_t keep = r;
  for (std::size_t i = r; i < m.rows(); ++i) {
    auto row = m.row(i);
    if (std::all_of(row.begin(), row.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
    if (i != keep) m.swap_rows(i, keep);
    ++keep;
  }
  m.truncate_rows(keep);
  return pivots;
}

ScalarMatrix span_reduce(ScalarMatrix m) {
  row_echelon(m);
  return m;
}

std::vector<ScalarVec> span_reduce(const std::vector<ScalarVec>& vectors) {
  if (vectors.empty()) return {};
  const std::size_t n = vectors.front().size();
  ScalarMatrix m(0, n);
  for (const auto& v : vectors) m.append_row(v);
  row_echelon(m);
  std::vector<ScalarVec> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).begin(), m.row(i).end());
  return out;
}

std::size_t rank(ScalarMatrix m) { return row_echelon(m, {}, false).size(); }

ScalarVec reduce_against(ScalarVec v, const ScalarMatrix& rref, std::span<const std::size_t> pivots) {
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Scalar f = v[pivots[i]];
    if (f.is_zero()) continue;
    auto row = rref.row(i);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!row[j].is_zero()) v[j].submul(f, row[j]);
  }
  return v;
}

ScalarMatrix initial_subspace(const ScalarMatrix& rows, std::span<const WeightKey> weights) {
  if (weights.size() != rows.cols()) throw Error(ErrorCode::dimension, "one weight per column");
  std::vector<std::size_t> order(rows.cols());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return weights[l] > weights[r]; });
  ScalarMatrix m = rows;
  const auto pivots = row_echelon(m, order, false);
  const unsigned p = matrix_characteristic(rows);
  ScalarMatrix init(m.rows(), m.cols(), Scalar::zero(p));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const WeightKey lead = weights[pivots[i]];
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (weights[j] == lead) init(i, j) = m(i, j);
  }
  return span_reduce(std::move(init));
}

namespace {

bool all_constant(const std::vector<PolyVec>& rows) {
  for (const auto& r : rows)
    for (const auto& e : r)
      if (!e.is_constant()) return false;
  return true;
}

// Nullvector over the field when every entry is a constant.
std::optional<PolyVec> null_combination_field(const std::vector<PolyVec>& rows, unsigned p) {
  const std::size_t r = rows.size();
  const std::size_t n = r ? rows.front().size() : 0;
  ScalarMatrix m(r, n + r, Scalar::zero(p));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j].constant_term();
    m(i, n + i) = Scalar::one(p);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  const auto pivots = row_echelon(m, order, false);
  // row_echelon dropped nothing (identity block keeps rows nonzero); rows past
  // the pivots carry the relations.
  std::size_t k = pivots.size();
  if (k >= r) return std::nullopt;
  PolyVec c;
  for (std::size_t i = 0; i < r; ++i) c.push_back(MultiPoly::constant(m(k, n + i)));
  return c;
}

// Rescale a polynomial row: strip the common monomial factor in a, b, c and,
// in characteristic 0, the rational content.
void normalize_row(PolyVec& row) {
  Exponents common{};
  bool first = true;
  for (const auto& e : row) {
    for (const auto& [ex, c] : e.terms()) {
      if (first) {
        common = ex;
        first = false;
      } else {
        for (int v = A; v <= C; ++v) common[v] = std::min(common[v], ex[v]);
      }
    }
  }
  if (first) return;
  common[T] = 0;
  common[X] = 0;
  common[Y] = 0;
  const unsigned p = row.front().characteristic();
  if (common != Exponents{}) {
    MultiPoly mono = MultiPoly::term(common, Scalar::one(p));
    for (auto& e : row) e = MultiPoly::divide_exact(e, mono);
  }
  if (p == 0) {
    mpz_class g = 0, l = 1;
    for (const auto& e : row)
      for (const auto& [ex, c] : e.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.rational().get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
      }
    if (g != 0 && !(g == 1 && l == 1)) {
      Scalar f(mpq_class(l, g));
      for (auto& e : row) e *= f;
    }
  }
}

}  // namespace

std::optional<PolyVec> null_combination(const std::vector<PolyVec>& rows) {
  if (rows.empty()) return std::nullopt;
  const unsigned p = rows.front().empty() ? 0 : rows.front().front().characteristic();
  if (all_constant(rows)) return null_combination_field(rows, p);
  const std::size_t r = rows.size();
  const std::size_t n = rows.front().size();
  Matrix<MultiPoly> m(r, n + r, MultiPoly(p));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    m(i, n + i) = MultiPoly::constant(1, p);
  }
  MultiPoly prev = MultiPoly::constant(1, p);
  std::size_t pr = 0;
  for (std::size_t col = 0; col < n && pr < r; ++col) {
    std::size_t piv = r;
    for (std::size_t i = pr; i < r; ++i)
      if (!m(i, col).is_zero() && (piv == r || m(i, col).size() < m(piv, col).size())) piv = i;
    if (piv == r) continue;
    m.swap_rows(piv, pr);
    for (std::size_t i = pr + 1; i < r; ++i) {
      const MultiPoly lead = m(i, col);
      for (std::size_t j = col; j < n + r; ++j) {
        MultiPoly v = m(pr, col) * m(i, j);
        if (!lead.is_zero()) v -= lead * m(pr, j);
        m(i, j) = MultiPoly::divide_exact(v, prev);
      }
    }
    prev = m(pr, col);
    ++pr;
  }
  if (pr >= r) return std::nullopt;
  PolyVec c;
  for (std::size_t i = 0; i < r; ++i) c.push_back(m(pr, n + i));
  return c;
}

std::vector<PolyVec> t_limit_basis(std::vector<PolyVec> rows) {
  if (rows.empty()) return {};
  const std::size_t n = rows.front().size();
  const unsigned p = n ? rows.front().front().characteristic() : 0;
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorCode::dimension, "rows of unequal length");
    for (const auto& e : r)
      if (e.uses(X) || e.uses(Y)) throw Error(ErrorCode::domain, "t_limit_basis entries must not use x, y");
  }

  auto top_degree = [](const PolyVec& row) {
    int d = INT_MIN;
    for (const auto& e : row) d = std::max(d, e.degree(T));
    return d;
  };

  for (std::size_t iter = 0;; ++iter) {
    if (iter > 100000) throw Error(ErrorCode::internal, "t_limit_basis did not terminate");
    std::vector<int> deg(rows.size());
    std::vector<PolyVec> lead(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      deg[k] = top_degree(rows[k]);
      if (deg[k] == INT_MIN) throw Error(ErrorCode::rank, "family not of constant rank");
      for (const auto& e : rows[k]) lead[k].push_back(e.coefficient(T, deg[k]));
    }
    auto rel = null_combination(lead);
    if (!rel) {
      if (!all_constant(lead)) return lead;
      std::vector<ScalarVec> vs;
      for (const auto& l : lead) {
        ScalarVec v;
        for (const auto& e : l) v.push_back(e.constant_term());
        vs.push_back(std::move(v));
      }
      std::vector<PolyVec> out;
      for (const auto& v : span_reduce(vs)) {
        PolyVec r;
        for (const auto& s : v) r.push_back(MultiPoly::constant(s));
        out.push_back(std::move(r));
      }
      return out;
    }
    int top = INT_MIN;
    std::size_t replace = rows.size();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if ((*rel)[k].is_zero()) continue;
      if (deg[k] > top) {
        top = deg[k];
        replace = k;
      }
    }
    PolyVec combined(n, MultiPoly(p));
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if ((*rel)[k].is_zero()) continue;
      const MultiPoly coeff = (*rel)[k].shift(T, top - deg[k]);
      for (std::size_t j = 0; j < n; ++j)
        if (!rows[k][j].is_zero()) combined[j] += coeff * rows[k][j];
    }
    if (top_degree(combined) == INT_MIN) throw Error(ErrorCode::rank, "family not of constant rank");
    if (top_degree(combined) >= top) throw Error(ErrorCode::internal, "leading terms failed to cancel");
    normalize_row(combined);
    rows[replace] = std::move(combined);
  }
}

}  // namespace hilbfan
