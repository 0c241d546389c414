#include "hilbfan/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <json.hpp>
#include <sstream>

#include "hilbfan/error.hpp"

namespace hilbfan {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

// Recursive-descent parser over the ideal grammar.
class Parser {
public:
  explicit Parser(const std::string& s) : s_(s) {}

  Staircase input() {
    skip();
    Staircase out;
    if (s_.compare(i_, 5, "gens:") == 0) {
      i_ += 5;
      out = generators();
    } else {
      out = expr();
    }
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return out;
  }

  Substitution substitution() {
    skip();
    const int v = variable();
    expect("->");
    if (variable() != v) fail("the substituted variable must reappear first");
    expect("+");
    skip();
    if (peek() != 't') fail("expected 't'");
    ++i_;
    skip();
    if (peek() == '*') ++i_;
    skip();
    const std::size_t at = i_;
    const int h = variable();
    if (h == v) {
      i_ = at;
      fail("h must not involve the substituted variable");
    }
    int k = 1;
    skip();
    if (peek() == '^') {
      ++i_;
      k = number();
      if (k < 1) fail("exponent must be positive");
    }
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return {v, k};
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::parse, "column " + std::to_string(i_ + 1) + ": " + msg);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  void expect(const std::string& tok) {
    skip();
    if (s_.compare(i_, tok.size(), tok) != 0) fail("expected '" + tok + "'");
    i_ += tok.size();
  }
  int number() {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[i_++] - '0');
      if (v > 100000) fail("number too large");
    }
    return static_cast<int>(v);
  }
  int variable() {
    skip();
    if (peek() == 'x') return ++i_, 0;
    if (peek() == 'y') return ++i_, 1;
    fail("expected 'x' or 'y'");
  }

  Staircase expr() {
    Staircase out = term();
    for (skip(); peek() == '+'; skip()) {
      ++i_;
      out = add(out, term());
    }
    return out;
  }
  Staircase term() {
    Staircase out = factor();
    for (skip(); peek() == '*'; skip()) {
      ++i_;
      out = multiply(out, factor());
    }
    return out;
  }
  Staircase factor() {
    Staircase base = atom();
    skip();
    if (peek() != '^') return base;
    ++i_;
    const std::size_t at = i_;
    const int e = number();
    if (e == 0) {
      i_ = at;
      fail("zeroth power is the unit ideal");
    }
    return power(base, static_cast<unsigned>(e));
  }
  Staircase atom() {
    skip();
    const std::size_t at = i_;
    if (peek() == 'm') {
      ++i_;
      return Staircase::maximal_power(1);
    }
    if (peek() == '(') {
      ++i_;
      Staircase inner = expr();
      expect(")");
      return inner;
    }
    if (peek() == 'I') {
      ++i_;
      expect("(");
      std::vector<int> steps;
      skip();
      if (peek() != ')') {
        steps.push_back(number());
        for (skip(); peek() == ','; skip()) {
          ++i_;
          steps.push_back(number());
        }
      }
      expect(")");
      Staircase s = from_steps(StepSeq{steps});
      if (s.is_unit()) {
        i_ = at;
        fail("this is the unit ideal");
      }
      return s;
    }
    fail("expected 'I(', 'm' or '('");
  }

  Staircase generators() {
    std::vector<Mono2> gens;
    gens.push_back(monomial());
    for (skip(); peek() == ','; skip()) {
      ++i_;
      gens.push_back(monomial());
    }
    for (const auto& g : gens)
      if (g.x == 0 && g.y == 0) throw Error(ErrorCode::parse, "generator 1 gives the unit ideal");
    try {
      return Staircase::from_generators(gens);
    } catch (const Error& e) {
      throw Error(ErrorCode::parse, e.what());
    }
  }
  Mono2 monomial() {
    skip();
    if (peek() == '1') {
      ++i_;
      return {0, 0};
    }
    Mono2 m;
    for (;;) {
      const int v = variable();
      int e = 1;
      skip();
      if (peek() == '^') {
        ++i_;
        e = number();
      }
      (v == 0 ? m.x : m.y) += e;
      skip();
      if (peek() != '*') break;
      ++i_;
    }
    return m;
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

json point_json(const Point& p) { return json::array({p[0], p[1]}); }
Point json_point(const json& j) { return {j.at(0).get<long>(), j.at(1).get<long>()}; }
json steps_json(const Staircase& s) { return to_steps(s).steps; }
Staircase json_steps(const json& j) { return from_steps(StepSeq{j.get<std::vector<int>>()}); }

json parse_doc(const std::string& text, const char* kind) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("schema_version", 0) != kSchemaVersion)
    throw Error(ErrorCode::parse, "missing or unsupported schema_version");
  if (kind && j.value("kind", std::string()) != kind)
    throw Error(ErrorCode::parse, std::string("expected a '") + kind + "' document");
  return j;
}

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

std::string svg_open(double w, double h) {
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
    << " " << h << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  return o.str();
}

// Small staircase picture with its lower left corner at (x0, y0).
void draw_staircase(std::ostringstream& o, const Staircase& s, double x0, double y0, double cell) {
  for (const Mono2& m : s.boxes())
    o << "<rect x=\"" << x0 + m.x * cell << "\" y=\"" << y0 - (m.y + 1) * cell << "\" width=\"" << cell
      << "\" height=\"" << cell << "\" fill=\"#dde\" stroke=\"#333\" stroke-width=\"0.6\"/>\n";
}

}  // namespace

Staircase parse_ideal(const std::string& text) { return Parser(text).input(); }

Substitution parse_substitution(const std::string& text) { return Parser(text).substitution(); }

Point parse_direction(const std::string& text) {
  std::istringstream in(text);
  long a = 0, b = 0;
  char comma = 0;
  if (!(in >> a >> comma >> b) || comma != ',' || !(in >> std::ws).eof())
    throw Error(ErrorCode::parse, "direction must look like 'm,n', got '" + text + "'");
  if (a == 0 && b == 0) throw Error(ErrorCode::parse, "direction must be nonzero");
  return {a, b};
}

std::string ideal_json(const Staircase& I) {
  const MeasuringSequence m = measuring_sequence(I);
  json j{{"schema_version", kSchemaVersion}, {"kind", "ideal"},          {"steps", steps_json(I)},
         {"heights", I.heights()},           {"colength", I.colength()}, {"measuring", {m.a, m.b}},
         {"generators", generators_string(I)}};
  return j.dump(2);
}

std::string fan_json(const Fan2D& F) {
  json j{{"schema_version", kSchemaVersion},
         {"kind", "fan"},
         {"family", to_string(F.family)},
         {"char", F.characteristic},
         {"source", json::array()},
         {"rays", json::array()},
         {"cones", json::array()}};
  for (const auto& s : F.sources) j["source"].push_back(steps_json(s));
  for (const auto& r : F.rays) j["rays"].push_back(point_json(r));
  for (const auto& c : F.cones) {
    json cj{{"ray_cw", point_json(c.ray_cw)}, {"ray_ccw", point_json(c.ray_ccw)}, {"vertex", point_json(c.vertex)}};
    Staircase prod = Staircase::unit();
    cj["labels"] = json::array();
    for (const auto& l : c.labels) {
      cj["labels"].push_back(steps_json(l));
      prod = multiply(prod, l);
    }
    cj["ideal"] = steps_json(prod);
    j["cones"].push_back(cj);
  }
  return j.dump(2);
}

Fan2D fan_from_json(const std::string& text) {
  const json j = parse_doc(text, "fan");
  Fan2D F;
  F.family = parse_family(j.at("family").get<std::string>());
  F.characteristic = j.at("char").get<unsigned>();
  for (const auto& s : j.at("source")) F.sources.push_back(json_steps(s));
  for (const auto& r : j.at("rays")) F.rays.push_back(json_point(r));
  for (const auto& c : j.at("cones")) {
    Cone k;
    k.ray_cw = json_point(c.at("ray_cw"));
    k.ray_ccw = json_point(c.at("ray_ccw"));
    k.vertex = json_point(c.at("vertex"));
    for (const auto& l : c.at("labels")) k.labels.push_back(json_steps(l));
    F.cones.push_back(std::move(k));
  }
  return F;
}

std::string diagram_json(const BoundaryDiagram& d) {
  json j{{"schema_version", kSchemaVersion}, {"kind", "diagram"}, {"diagram", json::array()}};
  for (const auto& it : d.items) {
    if (it.is_ray)
      j["diagram"].push_back({{"ray", point_json(it.ray)}});
    else
      j["diagram"].push_back({{"ideal", steps_json(it.ideal)}});
  }
  if (d.beyond_top) j["beyond_top"] = steps_json(*d.beyond_top);
  return j.dump(2);
}

BoundaryDiagram diagram_from_json(const std::string& text) {
  const json j = parse_doc(text, "diagram");
  BoundaryDiagram d;
  for (const auto& it : j.at("diagram")) {
    if (it.contains("ray"))
      d.items.push_back({true, json_point(it["ray"]), {}});
    else
      d.items.push_back({false, {}, json_steps(it.at("ideal"))});
  }
  if (j.contains("beyond_top")) d.beyond_top = json_steps(j["beyond_top"]);
  return d;
}

std::string picture_json(const SupportPicture& P) {
  json j{{"schema_version", kSchemaVersion},
         {"kind", "picture"},
         {"points", json::array()},
         {"open", json::array()},
         {"sporadic", json::array()}};
  for (const auto& p : P.points) j["points"].push_back({p[0], p[1], p[2]});
  for (const auto& p : P.open_points()) j["open"].push_back({p[0], p[1], p[2]});
  for (const auto& f : P.sporadic) j["sporadic"].push_back(f.to_string());
  return j.dump(2);
}

SupportPicture picture_from_json(const std::string& text) {
  const json j = parse_doc(text, "picture");
  SupportPicture P;
  auto pt = [](const json& e) { return Point3{e.at(0).get<long>(), e.at(1).get<long>(), e.at(2).get<long>()}; };
  for (const auto& e : j.at("points")) P.points.insert(pt(e));
  for (const auto& p : P.points) P.monomial_flags[p] = true;
  for (const auto& e : j.at("open")) {
    const Point3 p = pt(e);
    if (!P.points.count(p)) throw Error(ErrorCode::parse, "open point outside the point set");
    P.monomial_flags[p] = false;
  }
  return P;
}

Staircase ideal_from_json(const std::string& text) { return json_steps(parse_doc(text, "ideal").at("steps")); }

std::string limit_json(const LimitIdeal& L) {
  json j{{"schema_version", kSchemaVersion},
         {"kind", "limit"},
         {"direction", point_json(L.direction)},
         {"char", L.characteristic},
         {"colength", L.colength()},
         {"monomial", L.monomial.has_value()}};
  if (L.monomial) {
    j["steps"] = steps_json(*L.monomial);
    j["generators"] = generators_string(*L.monomial);
  } else {
    j["generators"] = L.generator_strings();
    j["modulus"] = L.modulus_string();
  }
  return j.dump(2);
}

std::string json_kind(const std::string& text) { return parse_doc(text, nullptr).value("kind", std::string()); }

std::string fan_svg(const Fan2D& F) {
  const double size = 420, c = size / 2, R = 170;
  std::ostringstream o;
  o << svg_open(size, size);
  o << "<circle cx=\"" << c << "\" cy=\"" << c << "\" r=\"" << R << "\" fill=\"none\" stroke=\"#bbb\"/>\n";
  auto at = [&](Point v, double r) {
    const double n = std::hypot(static_cast<double>(v[0]), static_cast<double>(v[1]));
    return std::pair{c + r * v[0] / n, c - r * v[1] / n};
  };
  for (const auto& r : F.rays) {
    const auto [x, y] = at(r, R);
    const auto [lx, ly] = at(r, R + 16);
    o << "<line x1=\"" << c << "\" y1=\"" << c << "\" x2=\"" << x << "\" y2=\"" << y
      << "\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
    o << "<text x=\"" << lx << "\" y=\"" << ly << "\" text-anchor=\"middle\">(" << r[0] << "," << r[1] << ")</text>\n";
  }
  for (const auto& k : F.cones) {
    // Bisector of the cone, or the opposite side for a reflex cone.
    const double a1 = std::atan2(static_cast<double>(k.ray_cw[1]), static_cast<double>(k.ray_cw[0]));
    double a2 = std::atan2(static_cast<double>(k.ray_ccw[1]), static_cast<double>(k.ray_ccw[0]));
    if (a2 <= a1) a2 += 2 * M_PI;
    const double mid = F.rays.size() < 2 ? M_PI / 4 : (a1 + a2) / 2;
    std::string label;
    for (const auto& l : k.labels) label += (label.empty() ? "" : " ") + to_string(l);
    o << "<text x=\"" << c + 0.6 * R * std::cos(mid) << "\" y=\"" << c - 0.6 * R * std::sin(mid)
      << "\" text-anchor=\"middle\" fill=\"#225\">" << esc(label) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

std::string hull_svg(const Fan2D& F) {
  // Minkowski sum of the cone vertices is the hull of the product support.
  std::vector<Point> verts;
  for (const auto& k : F.cones) verts.push_back(k.vertex);
  const std::vector<Point> hull = convex_hull(verts);
  long xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  for (const auto& p : hull) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }
  const double cell = 360.0 / static_cast<double>(std::max(xmax - xmin, ymax - ymin));
  const double pad = 40, w = cell * (xmax - xmin) + 2 * pad, h = cell * (ymax - ymin) + 2 * pad;
  auto X = [&](long x) { return pad + cell * (x - xmin); };
  auto Y = [&](long y) { return h - pad - cell * (y - ymin); };
  std::ostringstream o;
  o << svg_open(w, h);
  o << "<polygon fill=\"#eef\" stroke=\"#000\" points=\"";
  for (const auto& p : hull) o << X(p[0]) << "," << Y(p[1]) << " ";
  o << "\"/>\n";
  for (const auto& k : F.cones) {
    std::string label;
    for (const auto& l : k.labels) label += (label.empty() ? "" : " ") + to_string(l);
    o << "<circle cx=\"" << X(k.vertex[0]) << "\" cy=\"" << Y(k.vertex[1]) << "\" r=\"3\"/>\n";
    o << "<text x=\"" << X(k.vertex[0]) + 5 << "\" y=\"" << Y(k.vertex[1]) - 5 << "\">" << esc(label) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

std::string diagram_svg(const BoundaryDiagram& d) {
  const double cell = 10, gap = 24, pad = 20;
  int maxh = 1;
  double width = pad;
  for (const auto& it : d.items) {
    if (it.is_ray) {
      width += 60;
    } else {
      maxh = std::max(maxh, it.ideal.height(0));
      width += cell * it.ideal.columns() + gap;
    }
  }
  const double h = cell * maxh + 3 * pad + 20;
  std::ostringstream o;
  o << svg_open(width + pad, h);
  double x = pad;
  const double base = h - pad - 20;
  for (const auto& it : d.items) {
    if (it.is_ray) {
      o << "<line x1=\"" << x + 30 << "\" y1=\"" << pad << "\" x2=\"" << x + 30 << "\" y2=\"" << base
        << "\" stroke=\"#888\" stroke-dasharray=\"3,3\"/>\n";
      o << "<text x=\"" << x + 30 << "\" y=\"" << base + 16 << "\" text-anchor=\"middle\">(" << it.ray[0] << ","
        << it.ray[1] << ")</text>\n";
      x += 60;
    } else {
      draw_staircase(o, it.ideal, x, base, cell);
      o << "<text x=\"" << x << "\" y=\"" << base + 16 << "\" font-size=\"9\">" << esc(to_string(it.ideal))
        << "</text>\n";
      x += cell * it.ideal.columns() + gap;
    }
  }
  o << "</svg>\n";
  return o.str();
}

std::string picture_svg(const SupportPicture& P) {
  // One dot per (a,b); the radius grows with the largest c exponent there.
  std::map<std::pair<long, long>, std::pair<long, bool>> dots;
  for (const auto& [p, in] : P.monomial_flags) {
    auto it = dots.find({p[0], p[1]});
    if (it == dots.end() || p[2] >= it->second.first) dots[{p[0], p[1]}] = {p[2], !in};
  }
  long amax = 1, bmax = 1;
  for (const auto& [ab, v] : dots) {
    amax = std::max(amax, ab.first);
    bmax = std::max(bmax, ab.second);
  }
  const double cell = 40, pad = 30, w = cell * amax + 2 * pad, h = cell * bmax + 2 * pad;
  std::ostringstream o;
  o << svg_open(w, h);
  o << "<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << w - pad / 2 << "\" y2=\"" << h - pad
    << "\" stroke=\"#000\"/>\n<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << pad << "\" y2=\""
    << pad / 2 << "\" stroke=\"#000\"/>\n";
  for (const auto& [ab, v] : dots) {
    const double r = 3 + 3 * static_cast<double>(v.first);
    o << "<circle cx=\"" << pad + cell * ab.first << "\" cy=\"" << h - pad - cell * ab.second << "\" r=\"" << r
      << "\" " << (v.second ? "fill=\"white\" stroke=\"#000\"" : "fill=\"#000\"") << "/>\n";
  }
  o << "</svg>\n";
  return o.str();
}

std::string ideal_report(const Staircase& I) {
  const MeasuringSequence m = measuring_sequence(I);
  std::ostringstream o;
  o << "ideal      " << to_string(I) << "\n";
  o << "generators " << generators_string(I) << "\n";
  o << "heights    (";
  for (std::size_t i = 0; i < I.heights().size(); ++i) o << (i ? "," : "") << I.heights()[i];
  o << ")\n";
  o << "colength   " << I.colength() << "\n";
  o << "measuring  m(" << m.a << "," << m.b << ")\n";
  o << ascii_art(I);
  return o.str();
}

}  // namespace hilbfan
