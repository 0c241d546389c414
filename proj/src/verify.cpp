#include "hilbfan/verify.hpp"
#include <algorithm>
#include <set>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hilbfan/error.hpp"
#include "hilbfan/segre3.hpp"

namespace hilbfan {

namespace {

using Steps = std::vector<int>;

Steps ones(int count) { return Steps(static_cast<std::size_t>(count), 1); }

Steps cat(std::initializer_list<Steps> parts) {
  Steps out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// count items taken cyclically from the pattern.
Steps cycle(const std::vector<Steps>& pattern, int count) {
  Steps out;
  for (int i = 0; i < count; ++i) {
    const Steps& s = pattern[static_cast<std::size_t>(i) % pattern.size()];
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

std::string ideal_string(const Staircase& I) { return to_string(to_steps(I)); }

std::string point_string(const Point& p) { return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")"; }

ClaimReport compare(std::string id, std::string params, const Staircase& expected, const Staircase& computed,
                    unsigned p = 0) {
  ClaimReport r;
  r.id = std::move(id);
  r.parameters = std::move(params);
  r.status = expected == computed ? ClaimStatus::pass : ClaimStatus::fail;
  r.expected = ideal_string(expected);
  r.computed = ideal_string(computed);
  r.characteristic = p;
  return r;
}

ClaimReport out_of_range(int claim, std::string params) {
  ClaimReport r;
  r.id = "claim" + std::to_string(claim);
  r.parameters = std::move(params);
  r.status = ClaimStatus::range;
  r.note = "outside the claim's stated range";
  return r;
}

Staircase plus_at(const Fan2D& F, Point ray) { return adjacent(F, ray).plus.at(0); }
Staircase minus_at(const Fan2D& F, Point ray) { return adjacent(F, ray).minus.at(0); }

// A report covering several equalities; the first mismatch is the witness.
struct Checklist {
  ClaimReport report;
  void check(const std::string& what, const Staircase& expected, const Staircase& computed) {
    if (report.status == ClaimStatus::fail || expected == computed) return;
    report.status = ClaimStatus::fail;
    report.expected = what + " = " + ideal_string(expected);
    report.computed = what + " = " + ideal_string(computed);
  }
};

// e.g. "a + 2b + 3c", "-b"
std::string linear_form(const Point3& n) {
  std::string out;
  const char* names[] = {"a", "b", "c"};
  for (int i = 0; i < 3; ++i) {
    const long c = n[i];
    if (c == 0) continue;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

std::string n_param(int n) { return "n=" + std::to_string(n); }

}  // namespace

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::range: return "range";
  }
  return "?";
}

VerifySummary summarize(const std::vector<ClaimReport>& reports) {
  VerifySummary s;
  for (const auto& r : reports) {
    if (r.status == ClaimStatus::pass) ++s.pass;
    if (r.status == ClaimStatus::fail) ++s.fail;
    if (r.status == ClaimStatus::range) ++s.range;
  }
  return s;
}

std::vector<int> claim_steps(int claim, int n, int k) {
  if (n < 1) return {};
  switch (claim) {
    case 1: return to_steps(power(Staircase::from_generators(std::vector<Mono2>{{2, 0}, {0, 2}}),
                                  static_cast<unsigned>(n)))
        .steps;
    case 2: return cat({ones(n), {2}, ones(n - 1)});
    case 3: {
      const std::vector<Steps> s{{1, 2}, {2, 2, 2}, {3, 2, 2, 2}};
      const int q = (n - 1) / 3, r = n - 3 * q;
      return cat({s[static_cast<std::size_t>(r - 1)], cycle({s[2]}, q)});
    }
    case 4: {
      const Steps s1{2, 2, 1}, s2{2, 2, 2}, s3{2, 1, 2};
      if (n % 2 == 1) return cat({{1, 2}, cycle({s1, s2, s3}, (n - 1) / 2)});
      return cycle({s2, s3, s1}, n / 2);
    }
    case 5:
      if (k < n / 2 || k > n - 1 || k < 1) return {};
      return cat({ones(n - k - 1), {2}, ones(k - 1), {2}, ones(k - 1), {2}, ones(n - k - 1)});
    case 6:
      if (k < (n - 1) / 2 || k > n - 2) return {};
      return cat({ones(n - k - 2), {2}, ones(k), {2}, ones(k), {2}, ones(n - k - 2)});
    case 7: {
      const Steps s1{2, 2, 1, 2, 1, 2, 1, 2}, s2{2, 1, 2, 1, 2, 1, 2, 1};
      const int m = n / 5;
      switch (n % 5) {
        case 0: return cycle({s1, s2}, m);
        case 1: return cat({{1, 2}, cycle({s2, s1}, m)});
        case 2: return cat({{1, 1, 2, 1}, cycle({s1, s2}, m)});
        case 3: return cat({{2, 1, 2, 1, 2}, cycle({s2, s1}, m)});
        default: return cat({{1, 2, 1, 2, 1, 2, 1}, cycle({s1, s2}, m)});
      }
    }
    case 8: {
      const Steps s1{2, 1, 2, 1, 2}, s2{1, 2, 1, 2, 1}, s3{2, 1, 2, 1, 1}, s4{1, 2, 1, 1, 2}, s5{2, 1, 1, 2, 1};
      const int m = n / 3;
      switch (n % 3) {
        case 0: return cycle({s1, s2, s3, s4, s5}, m);
        case 1: return cat({{1, 2}, cycle({s2, s5, s3, s1, s4}, m)});
        default: return cat({{1, 1, 2, 1}, cycle({s3, s1, s4, s2, s5}, m)});
      }
    }
    default: throw Error(ErrorCode::domain, "claims are numbered 1 to 8");
  }
}

Verifier::Verifier(std::string golden_dir) : golden_(std::move(golden_dir)) {}

const Fan2D& Verifier::fan(int n) {
  auto it = fans_.find(n);
  if (it == fans_.end())
    it = fans_.emplace(n, standard_fan({power(I({4}), static_cast<unsigned>(n))}, FanOptions{Family::G41, 0}))
             .first;
  return it->second;
}

std::vector<ClaimReport> Verifier::quadrant_identities() {
  std::vector<ClaimReport> out;
  const Staircase x_y3 = I({3}), x_y4 = I({4});
  const Staircase x2_y2 = Staircase::from_generators(std::vector<Mono2>{{2, 0}, {0, 2}});
  const Staircase x2_y = Staircase::from_generators(std::vector<Mono2>{{2, 0}, {0, 1}});
  struct Line {
    Family f;
    Staircase source;
    bool plus_first;
    Point first;
    bool plus_second;
    Point second;
    Staircase expected;
  };
  const std::vector<Line> lines{
      {Family::G41, x_y3, true, {-1, 0}, false, {0, 1}, x_y3},
      {Family::G41, x_y4, false, {0, -1}, true, {1, 2}, x2_y2},
      {Family::G32, x_y3, true, {-1, 0}, false, {0, 1}, x_y3},
      {Family::G32, x2_y, false, {0, -1}, true, {1, 0}, x2_y},
  };
  for (const auto& l : lines) {
    const Fan2D F = standard_fan({l.source}, FanOptions{l.f, 0});
    const char* sup = l.f == Family::G41 ? "^" : "_";
    for (const auto& [is_plus, ray] : {std::pair{l.plus_first, l.first}, std::pair{l.plus_second, l.second}}) {
      const Staircase got = is_plus ? plus_at(F, ray) : minus_at(F, ray);
      out.push_back(compare("prop33",
                            to_string(l.f) + " " + generators_string(l.source) + sup + (is_plus ? "+" : "-") +
                                point_string(ray),
                            l.expected, got));
    }
  }
  // One-parameter subgroups through the identity.
  const Fan2D F4 = fan(1);
  out.push_back(compare("prop33", "G41 lim g(0,t)(x,y^4) = I^+(0,1)", plus_at(F4, {0, 1}),
                        elementary_limit(x_y4, 0, 3, 0)));
  out.push_back(compare("prop33", "G41 lim g(t,0)(x,y^4) = I^-(1,0)", minus_at(F4, {1, 0}),
                        elementary_limit(x_y4, 0, 2, 0)));
  // Characteristic 2.
  const Fan2D F2 = standard_fan({x_y4}, FanOptions{Family::G41, 2});
  out.push_back(compare("prop33", "G41 (x,y^4)^+(0,1)", I({1, 2}), plus_at(F2, {0, 1}), 2));
  out.push_back(compare("prop33", "G41 (x,y^4)^-(1,2)", I({1, 2}), minus_at(F2, {1, 2}), 2));
  return out;
}

std::vector<ClaimReport> Verifier::claim(int k, int n) {
  std::vector<ClaimReport> out;
  if (n < 1) {
    out.push_back(out_of_range(k, n_param(n)));
    return out;
  }
  const std::string id = "claim" + std::to_string(k);
  auto expected = [&](int kk = 0) { return from_steps(StepSeq{claim_steps(k, n, kk)}); };
  auto both = [&](Point r1, bool plus1, Point r2, bool plus2) {
    const Fan2D& F = fan(n);
    Checklist c{ClaimReport{id, n_param(n), ClaimStatus::pass, "", "", 0, ""}};
    const Staircase want = expected();
    auto lbl = [](bool plus, Point r) { return std::string(plus ? "I^+" : "I^-") + point_string(r); };
    c.check(lbl(plus1, r1), want, plus1 ? plus_at(F, r1) : minus_at(F, r1));
    c.check(lbl(plus2, r2), want, plus2 ? plus_at(F, r2) : minus_at(F, r2));
    if (c.report.status == ClaimStatus::pass) c.report.expected = c.report.computed = ideal_string(want);
    out.push_back(c.report);
  };
  switch (k) {
    case 1:
      both({1, 0}, false, {1, 2}, true);
      if (n >= 2)
        out.push_back(compare(id, n_param(n) + " product", minus_at(fan(n), {1, 0}),
                              multiply(minus_at(fan(n - 1), {1, 0}), minus_at(fan(1), {1, 0}))));
      break;
    case 2: {
      both({1, 2}, false, {2 * n - 3, 4 * n - 4}, true);
      if (n >= 2) {
        const Staircase big = minus_at(fan(n), {1, 2});
        const Staircase prod = multiply(minus_at(fan(n - 1), {1, 2}), minus_at(fan(1), {1, 2}));
        ClaimReport r{id, n_param(n) + " product containment", leq(prod, big) ? ClaimStatus::pass : ClaimStatus::fail,
                      ideal_string(prod) + " inside " + ideal_string(big), "", 0, ""};
        r.computed = leq(prod, big) ? r.expected : "not contained";
        out.push_back(r);
      }
      break;
    }
    case 3: {
      const int q = (n - 1) / 3, r = n - 3 * q;
      const std::vector<Steps> s{{1, 2}, {2, 2, 2}, {3, 2, 2, 2}};
      const Staircase got = plus_at(fan(n), {-1, 0});
      ClaimReport rep = compare(id, n_param(n) + " q=" + std::to_string(q) + " r=" + std::to_string(r), expected(), got);
      const Staircase prod = multiply(from_steps(StepSeq{s[static_cast<std::size_t>(r - 1)]}),
                                      power(from_steps(StepSeq{s[2]}), static_cast<unsigned>(q)));
      if (rep.status == ClaimStatus::pass && prod != got) {
        rep.status = ClaimStatus::fail;
        rep.expected = "product form " + ideal_string(prod);
      }
      out.push_back(rep);
      break;
    }
    case 4:
      both({0, 1}, true, {1, 4}, false);
      if (n >= 4) {
        auto P = [&](int m) { return plus_at(fan(m), {0, 1}); };
        out.push_back(compare(id, n_param(n) + " recurrence", add(multiply(P(n - 2), P(2)), multiply(P(n - 3), P(3))),
                              P(n)));
      }
      break;
    case 5:
    case 6: {
      const int lo = k == 5 ? n / 2 : (n - 1) / 2;
      const int hi = k == 5 ? n - 1 : n - 2;
      if (lo > hi) {
        out.push_back(out_of_range(k, n_param(n) + " (empty k range)"));
        break;
      }
      for (int kk = lo; kk <= hi; ++kk) {
        const std::string params = n_param(n) + " k=" + std::to_string(kk);
        const Steps st = claim_steps(k, n, kk);
        if (st.empty()) {
          out.push_back(out_of_range(k, params));
          continue;
        }
        const Point ray{2 * kk - 1, 4 * kk};
        const Staircase got = k == 5 ? minus_at(fan(n), ray) : plus_at(fan(n), ray);
        out.push_back(compare(id, params, from_steps(StepSeq{st}), got));
      }
      break;
    }
    case 7: both({1, 4}, true, {1, 3}, false); break;
    case 8: both({1, 3}, true, {3, 8}, false); break;
    default: throw Error(ErrorCode::domain, "claims are numbered 1 to 8");
  }
  return out;
}

ClaimReport Verifier::figure1() {
  ClaimReport r{"figure1", "m=3", ClaimStatus::pass, "", "", 0, ""};
  std::ifstream in(golden_ + "/figure1.json");
  if (!in) throw Error(ErrorCode::domain, "cannot read " + golden_ + "/figure1.json");
  const auto j = nlohmann::json::parse(in);
  const auto& rows = j.at("matrix");
  const std::size_t n = rows.size();
  ScalarMatrix fig(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) fig(i, k) = Scalar(rows[i][k].get<long>());

  const ParamIdeal P = spanning_family_m41(3);
  const Staircase M = from_steps(StepSeq{claim_steps(2, 3)});
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < P.basis.size(); ++c)
    if (M.contains(P.basis[c])) cols.push_back(c);
  std::ostringstream shape;
  shape << P.rank() << "x" << P.basis.size() << ", minor " << P.rank() << "x" << cols.size();
  if (P.rank() != 18 || P.basis.size() != 30 || cols.size() != 18 || n != 18) {
    r.status = ClaimStatus::fail;
    r.expected = "18x30, minor 18x18, figure 18x18";
    r.computed = shape.str() + ", figure " + std::to_string(n) + "x" + std::to_string(n);
    return r;
  }
  const ScalarMatrix g = P.generic_point();
  ScalarMatrix sub(18, 18);
  for (std::size_t i = 0; i < 18; ++i)
    for (std::size_t k = 0; k < 18; ++k) sub(i, k) = g(i, cols[k]);
  auto absdet = [](const ScalarMatrix& m) {
    Scalar d = det_fraction_free(m);
    return d.rational() < 0 ? -d : d;
  };
  // Rows as a multiset, columns in generated order.
  std::vector<std::vector<std::string>> a, b;
  for (std::size_t i = 0; i < 18; ++i) {
    std::vector<std::string> ra, rb;
    for (std::size_t k = 0; k < 18; ++k) {
      ra.push_back(sub(i, k).to_string());
      rb.push_back(fig(i, k).to_string());
    }
    a.push_back(ra);
    b.push_back(rb);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const Scalar da = absdet(sub), db = absdet(fig);
  r.expected = "|det| " + db.to_string() + ", rows of the figure";
  r.computed = shape.str() + ", |det| " + da.to_string() + (a == b ? ", same rows up to order" : ", rows differ");
  if (!(da == db) || a != b) r.status = ClaimStatus::fail;
  return r;
}

ClaimReport Verifier::figure2(int n) {
  ClaimReport r{"figure2-" + std::to_string(n), n_param(n), ClaimStatus::pass, "", "", 0, ""};
  const std::string path = golden_ + "/figure2/n" + std::to_string(n) + ".json";
  std::ifstream in(path);
  if (!in) {
    r.status = ClaimStatus::range;
    r.note = "no golden diagram " + path;
    return r;
  }
  const auto j = nlohmann::json::parse(in);
  std::vector<BoundaryDiagram::Item> want;
  for (const auto& it : j.at("diagram")) {
    if (it.contains("ray"))
      want.push_back({true, {it["ray"][0].get<long>(), it["ray"][1].get<long>()}, {}});
    else
      want.push_back({false, {}, from_steps(StepSeq{it.at("ideal").get<std::vector<int>>()})});
  }
  const BoundaryDiagram got = boundary_diagram(fan(n));
  BoundaryDiagram w;
  w.items = want;
  r.expected = to_string(w);
  r.computed = to_string(got);
  for (std::size_t i = 0; i < std::max(want.size(), got.items.size()); ++i) {
    const bool same = i < want.size() && i < got.items.size() && want[i].is_ray == got.items[i].is_ray &&
                      (want[i].is_ray ? want[i].ray == got.items[i].ray : want[i].ideal == got.items[i].ideal);
    if (!same) {
      r.status = ClaimStatus::fail;
      r.note = "first difference at item " + std::to_string(i);
      break;
    }
  }
  return r;
}

ClaimReport Verifier::smooth_fan_check() {
  ClaimReport r{"cor34-properties", "F((x,y^3),(x^2,xy,y^5))", ClaimStatus::pass,
                "smooth, complete, boundary self-intersections {-3,0}", "", 0, ""};
  const Fan2D F = standard_fan({I({3}), I({1, 4})});
  std::ostringstream got;
  got << (is_smooth(F) ? "smooth" : "not smooth") << ", " << (F.is_complete() ? "complete" : "not complete");
  std::set<long> values;
  if (is_smooth(F) && F.is_complete())
    for (const auto& [ray, k] : self_intersections(F))
      if (ray != Point{-1, 0} && ray != Point{0, -1}) values.insert(k);
  got << ", boundary self-intersections {";
  bool first = true;
  for (long v : values) {
    got << (first ? "" : ",") << v;
    first = false;
  }
  got << "}";
  r.computed = got.str();
  if (r.computed != r.expected) r.status = ClaimStatus::fail;
  return r;
}

std::vector<ClaimReport> Verifier::figure3() {
  std::vector<ClaimReport> out;
  const std::vector<Staircase> Y{I({3}), I({4}), I({1, 4}), I({5}), I({1, 5})};
  const std::string params = "F(I3,I4,I1I4,I5,I1I5)";
  const SupportPicture P = support_picture(coordinate_span(Y));

  // Dot plot: one dot per (a,b) with the largest c exponent.
  {
    ClaimReport r{"figure3", params + " dot plot", ClaimStatus::pass, "", "", 0, ""};
    std::map<std::pair<long, long>, std::pair<long, bool>> want, got;
    std::ifstream in(golden_ + "/figure3.json");
    if (!in) throw Error(ErrorCode::domain, "cannot read " + golden_ + "/figure3.json");
    const auto j = nlohmann::json::parse(in);
    for (const auto& d : j.at("dots")) want[{d[0], d[1]}] = {d[2], d[3].get<int>() != 0};
    for (const auto& [pt, in_span] : P.monomial_flags) {
      auto& slot = got[{pt[0], pt[1]}];
      if (pt[2] >= slot.first) slot = {pt[2], !in_span};
    }
    r.expected = std::to_string(want.size()) + " dots";
    r.computed = std::to_string(got.size()) + " dots";
    if (want != got) {
      r.status = ClaimStatus::fail;
      for (const auto& [k, v] : want)
        if (!got.count(k) || got[k] != v) {
          r.note = "first difference at (" + std::to_string(k.first) + "," + std::to_string(k.second) + ")";
          break;
        }
    }
    out.push_back(r);
  }
  // Sporadic generators, compared up to a scalar.
  {
    const MultiPoly a = MultiPoly::variable(A, 0), b = MultiPoly::variable(B, 0), c = MultiPoly::variable(C, 0);
    const MultiPoly q = (a * c - b * b) * (a * c - MultiPoly::constant(2, 0) * b * b);
    std::vector<MultiPoly> want{normalize_content(a.pow(5) * q), normalize_content(a.pow(2) * b * q)};
    std::vector<MultiPoly> got;
    for (const auto& f : P.sporadic) got.push_back(normalize_content(f));
    auto key = [](const MultiPoly& l, const MultiPoly& r) { return l.to_string() < r.to_string(); };
    std::sort(want.begin(), want.end(), key);
    std::sort(got.begin(), got.end(), key);
    ClaimReport r{"figure3", params + " sporadic generators", want == got ? ClaimStatus::pass : ClaimStatus::fail,
                  "", "", 0, ""};
    for (const auto& f : want) r.expected += (r.expected.empty() ? "" : "; ") + f.to_string();
    for (const auto& f : got) r.computed += (r.computed.empty() ? "" : "; ") + f.to_string();
    if (r.status == ClaimStatus::fail && got.size() == want.size()) {
      bool off_by_b = true;
      for (std::size_t i = 0; i < got.size(); ++i) {
        bool any = false;
        for (const auto& g : got) any = any || g == want[i] * b;
        off_by_b = off_by_b && any;
      }
      if (off_by_b) r.note = "each computed generator is b times an expected one";
    }
    out.push_back(r);
  }
  // Hull facets.
  {
    const std::vector<Point3> pts(P.points.begin(), P.points.end());
    const auto faces = hull3_faces(pts);
    ClaimReport r{"figure3", params + " hull facets", faces.size() == 8 ? ClaimStatus::pass : ClaimStatus::fail,
                  "8 facets", std::to_string(faces.size()) + " facets", 0, ""};
    for (const auto& f : faces) {
      r.note += (r.note.empty() ? "" : "; ") + linear_form(f.normal) + " <= " + std::to_string(f.offset);
    }
    out.push_back(r);
  }
  return out;
}

std::vector<ClaimReport> verify_all(const VerifyOptions& opts) {
  Verifier v(opts.golden_dir);
  std::vector<ClaimReport> out;
  auto append = [&](std::vector<ClaimReport> r) { out.insert(out.end(), r.begin(), r.end()); };
  append(v.quadrant_identities());
  for (int k = 1; k <= 8; ++k)
    for (int n = 1; n <= opts.max_n; ++n) append(v.claim(k, n));
  out.push_back(v.figure1());
  for (int n = 1; n <= opts.max_n; ++n) out.push_back(v.figure2(n));
  out.push_back(v.smooth_fan_check());
  if (opts.figure3) append(v.figure3());
  return out;
}

std::string reports_json(const std::vector<ClaimReport>& reports) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["reports"] = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json e{{"id", r.id},
                     {"parameters", r.parameters},
                     {"status", to_string(r.status)},
                     {"expected", r.expected},
                     {"computed", r.computed},
                     {"characteristic", r.characteristic}};
    if (!r.note.empty()) e["note"] = r.note;
    j["reports"].push_back(e);
  }
  const VerifySummary s = summarize(reports);
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"range", s.range}};
  return j.dump(2);
}

}  // namespace hilbfan
