// Command-line front end. Talks to the library only through hilbfan.h.
#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "hilbfan.h"

#ifndef HILBFAN_DEFAULT_GOLDEN
#define HILBFAN_DEFAULT_GOLDEN "golden"
#endif

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInternal = 3 };

// Library failure carrying the status for the exit code.
struct Failure {
  hf_status status;
  std::string message;
};

void check(hf_status s) {
  if (s != HF_OK) throw Failure{s, hf_last_error()};
}

int exit_code(hf_status s) {
  switch (s) {
    case HF_ERR_PARSE:
    case HF_ERR_DOMAIN:
    case HF_ERR_UNSUPPORTED:
    case HF_ERR_ARGUMENT: return kUsage;
    default: return kInternal;
  }
}

std::string take(char* s) {
  std::string out = s ? s : "";
  hf_string_free(s);
  return out;
}

using IdealPtr = std::unique_ptr<hf_ideal, decltype(&hf_ideal_free)>;
using FanPtr = std::unique_ptr<hf_fan, decltype(&hf_fan_free)>;
using PicturePtr = std::unique_ptr<hf_picture, decltype(&hf_picture_free)>;

IdealPtr parse(const std::string& text) {
  hf_ideal* I = nullptr;
  const hf_status s = hf_ideal_parse(text.c_str(), &I);
  if (s != HF_OK) throw Failure{s, "'" + text + "': " + hf_last_error()};
  return {I, hf_ideal_free};
}

std::vector<IdealPtr> parse_all(const std::vector<std::string>& texts) {
  std::vector<IdealPtr> out;
  for (const auto& t : texts) out.push_back(parse(t));
  return out;
}

std::vector<const hf_ideal*> raw(const std::vector<IdealPtr>& v) {
  std::vector<const hf_ideal*> out;
  for (const auto& p : v) out.push_back(p.get());
  return out;
}

// Family option: "auto" means choose from the measuring sequence.
const char* family_arg(const std::string& f) { return f == "auto" ? nullptr : f.c_str(); }

// Output goes to stdout, or to a file written via a temporary and a rename.
void emit(const std::string& text, const std::string& path) {
  const std::string body = text.empty() || text.back() == '\n' ? text : text + "\n";
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out || !(out << body)) throw Failure{HF_ERR_ARGUMENT, "cannot write " + path};
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Failure{HF_ERR_ARGUMENT, "cannot write " + path + ": " + ec.message()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{HF_ERR_ARGUMENT, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string golden_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("HILBFAN_GOLDEN"); env && *env) return env;
  return HILBFAN_DEFAULT_GOLDEN;
}

std::string fan_text(const std::string& fan_json) {
  const auto j = nlohmann::json::parse(fan_json);
  std::ostringstream o;
  o << "family " << j["family"].get<std::string>() << ", characteristic " << j["char"] << "\n";
  auto pt = [](const nlohmann::json& p) { return "(" + std::to_string(p[0].get<long>()) + "," +
                                                 std::to_string(p[1].get<long>()) + ")"; };
  auto steps = [](const nlohmann::json& s) {
    std::string out = "I(";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i].get<int>());
    return out + ")";
  };
  o << "rays:";
  for (const auto& r : j["rays"]) o << " " << pt(r);
  o << "\ncones (counterclockwise):\n";
  for (const auto& c : j["cones"]) {
    o << "  " << pt(c["ray_cw"]) << " .. " << pt(c["ray_ccw"]) << "  " << steps(c["ideal"]) << "  vertex "
      << pt(c["vertex"]) << "\n";
  }
  return o.str();
}

std::string verify_text(const nlohmann::json& j) {
  std::ostringstream o;
  for (const auto& r : j["reports"]) {
    const std::string st = r["status"];
    o << (st == "pass" ? "PASS " : st == "fail" ? "FAIL " : "RANGE") << " " << r["id"].get<std::string>() << " "
      << r["parameters"].get<std::string>();
    if (st == "fail")
      o << "\n      expected " << r["expected"].get<std::string>() << "\n      computed "
        << r["computed"].get<std::string>();
    if (r.contains("note")) o << "\n      note: " << r["note"].get<std::string>();
    o << "\n";
  }
  o << "summary: " << j["summary"]["pass"] << " pass, " << j["summary"]["fail"] << " fail, " << j["summary"]["range"]
    << " out of range\n";
  return o.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torus-orbit fans and limits of monomial ideals in two variables"};
  app.set_version_flag("--version", std::string(hf_version()));
  app.require_subcommand(1);

  std::string output;
  unsigned characteristic = 0;
  std::string family = "auto";
  std::string format;
  app.add_option("-o,--output", output, "Write the result to this file instead of stdout");

  auto add_char = [&](CLI::App* c) {
    c->add_option("-p,--char", characteristic, "Characteristic (0 or a prime)")->capture_default_str();
  };
  auto add_family = [&](CLI::App* c) {
    c->add_option("-f,--family", family, "Two-parameter family")
        ->check(CLI::IsMember({"auto", "G41", "G32", "g41", "g32"}))
        ->capture_default_str();
  };
  std::string ideal_spec;
  auto* ideal = app.add_subcommand("ideal", "Describe a monomial ideal");
  ideal->add_option("ideal", ideal_spec, "e.g. \"I(1,2)\", \"I(4)^3\", \"gens: x^2, x*y, y^3\"")->required();
  ideal->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string sub;
  std::string dir;
  auto* limit = app.add_subcommand("limit", "Flat limit under a substitution or along a direction");
  limit->add_option("ideal", ideal_spec)->required();
  auto* sub_opt = limit->add_option("--sub", sub, "e.g. \"x->x+t*y^2\"");
  auto* dir_opt = limit->add_option("--dir", dir, "Direction m,n for a -> a t^m, b -> b t^n");
  sub_opt->excludes(dir_opt);
  limit->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  add_char(limit);
  add_family(limit);

  std::vector<std::string> specs;
  std::string svg_kind = "fan";
  auto* fan = app.add_subcommand("fan", "Standard fan of a product of ideals");
  fan->add_option("ideals", specs, "One or more ideals")->required();
  fan->add_option("--format", format, "text, json or svg")->check(CLI::IsMember({"text", "json", "svg"}));
  fan->add_option("--svg", svg_kind, "Figure for --format svg")->check(CLI::IsMember({"fan", "hull"}));
  add_char(fan);
  add_family(fan);

  auto* diagram = app.add_subcommand("diagram", "Boundary diagram from (0,1) down to (1,2)");
  diagram->add_option("ideals", specs)->required();
  diagram->add_option("--format", format, "text, json or svg")->check(CLI::IsMember({"text", "json", "svg"}));
  add_char(diagram);
  add_family(diagram);

  auto* support3 = app.add_subcommand("support3", "Three-parameter support picture of a product of ideals");
  support3->add_option("ideals", specs)->required();
  support3->add_option("--format", format, "text, json or svg")->check(CLI::IsMember({"text", "json", "svg"}));
  add_char(support3);

  int max_n = 6;
  bool all = false, no_fig3 = false;
  std::string golden, claims;
  auto* verify = app.add_subcommand("verify", "Check the claims against computed fans");
  verify->add_flag("--all", all, "Run every check (the default)");
  verify->add_option("--n", max_n, "Largest n for the (x,y^4)^n checks")->check(CLI::Range(1, 12));
  verify->add_option("--claims", claims, "Comma-separated report ids to keep, e.g. claim1,claim8,prop33");
  verify->add_flag("--no-figure3", no_fig3, "Skip the three-parameter example");
  verify->add_option("--golden", golden, "Golden data directory (default: $HILBFAN_GOLDEN)");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string input;
  auto* render = app.add_subcommand("render", "SVG from a fan, diagram or picture JSON file");
  render->add_option("file", input, "JSON document, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    std::string out;
    auto fmt = [&](const char* def) { return format.empty() ? std::string(def) : format; };
    if (*ideal) {
      auto I = parse(ideal_spec);
      char* s = nullptr;
      check(fmt("text") == "json" ? hf_ideal_json(I.get(), &s) : hf_ideal_report(I.get(), &s));
      out = take(s);
    } else if (*limit) {
      auto I = parse(ideal_spec);
      if (sub.empty() == dir.empty()) throw Failure{HF_ERR_ARGUMENT, "give exactly one of --sub or --dir"};
      if (!sub.empty()) {
        hf_ideal* L = nullptr;
        check(hf_limit_substitution(I.get(), sub.c_str(), characteristic, &L));
        IdealPtr lim(L, hf_ideal_free);
        char* s = nullptr;
        check(fmt("text") == "json" ? hf_ideal_json(L, &s) : hf_ideal_report(L, &s));
        out = take(s);
      } else {
        long u1 = 0, u2 = 0;
        char comma = 0;
        std::istringstream in(dir);
        if (!(in >> u1 >> comma >> u2) || comma != ',' || !(in >> std::ws).eof())
          throw Failure{HF_ERR_ARGUMENT, "--dir must look like m,n"};
        char* s = nullptr;
        check(hf_limit_direction(I.get(), u1, u2, family_arg(family), characteristic, &s));
        out = take(s);
        if (fmt("text") == "text") {
          const auto j = nlohmann::json::parse(out);
          std::ostringstream o;
          if (j["monomial"].get<bool>()) {
            o << "limit " << j["generators"].get<std::string>() << " (monomial, colength " << j["colength"] << ")";
          } else {
            o << "limit generated by";
            for (const auto& g : j["generators"]) o << " " << g.get<std::string>() << ";";
            o << " modulus " << j["modulus"].get<std::string>() << " (colength " << j["colength"] << ")";
          }
          out = o.str();
        }
      }
    } else if (*fan || *diagram) {
      const auto ideals = parse_all(specs);
      const auto ptrs = raw(ideals);
      hf_fan* F = nullptr;
      check(hf_fan_compute(ptrs.data(), ptrs.size(), family_arg(family), characteristic, &F));
      FanPtr owned(F, hf_fan_free);
      char* s = nullptr;
      const std::string f = fmt("text");
      if (*fan) {
        if (f == "svg")
          check(hf_fan_svg(F, svg_kind == "hull" ? HF_SVG_HULL : HF_SVG_FAN, &s));
        else
          check(hf_fan_json(F, &s));
        out = take(s);
        if (f == "text") out = fan_text(out);
      } else {
        if (f == "svg") check(hf_fan_svg(F, HF_SVG_DIAGRAM, &s));
        if (f == "json") check(hf_fan_diagram_json(F, &s));
        if (f == "text") check(hf_fan_diagram_text(F, &s));
        out = take(s);
      }
    } else if (*support3) {
      const auto ideals = parse_all(specs);
      const auto ptrs = raw(ideals);
      hf_picture* P = nullptr;
      check(hf_support3(ptrs.data(), ptrs.size(), characteristic, &P));
      PicturePtr owned(P, hf_picture_free);
      char* s = nullptr;
      const std::string f = fmt("text");
      if (f == "svg") {
        check(hf_picture_svg(P, &s));
        out = take(s);
      } else {
        check(hf_picture_json(P, &s));
        out = take(s);
        if (f == "text") {
          const auto j = nlohmann::json::parse(out);
          std::ostringstream o;
          o << j["points"].size() << " support points, " << j["open"].size() << " open\nopen points:";
          for (const auto& p : j["open"]) o << " (" << p[0] << "," << p[1] << "," << p[2] << ")";
          o << "\nsporadic generators:\n";
          for (const auto& g : j["sporadic"]) o << "  " << g.get<std::string>() << "\n";
          o << j["facets"].size() << " hull facets:\n";
          for (const auto& fc : j["facets"])
            o << "  " << fc["normal"][0] << "*a + " << fc["normal"][1] << "*b + " << fc["normal"][2]
              << "*c <= " << fc["offset"] << "\n";
          out = o.str();
        }
      }
    } else if (*verify) {
      (void)all;
      char* s = nullptr;
      long failures = 0;
      check(hf_verify(max_n, golden_dir(golden).c_str(), no_fig3 ? 0 : 1, &s, &failures));
      auto j = nlohmann::json::parse(take(s));
      if (!claims.empty()) {
        std::vector<std::string> keep;
        std::stringstream ss(claims);
        for (std::string id; std::getline(ss, id, ',');)
          if (!id.empty()) keep.push_back(id);
        nlohmann::json kept = nlohmann::json::array();
        long pass = 0, fail = 0, range = 0;
        for (const auto& r : j["reports"]) {
          const std::string id = r["id"];
          bool match = false;
          for (const auto& k : keep) match = match || id == k || id.rfind(k + "-", 0) == 0;
          if (!match) continue;
          kept.push_back(r);
          const std::string st = r["status"];
          (st == "pass" ? pass : st == "fail" ? fail : range)++;
        }
        if (kept.empty()) throw Failure{HF_ERR_ARGUMENT, "--claims matched no report"};
        j["reports"] = kept;
        j["summary"] = {{"pass", pass}, {"fail", fail}, {"range", range}};
        failures = fail;
      }
      out = fmt("text") == "json" ? j.dump(2) : verify_text(j);
      emit(out, output);
      return failures > 0 ? kVerifyFailed : kOk;
    } else if (*render) {
      const std::string doc = input == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                           : read_file(input);
      char* s = nullptr;
      check(hf_render(doc.c_str(), &s));
      out = take(s);
    }
    emit(out, output);
    return kOk;
  } catch (const Failure& f) {
    std::cerr << "hilbfan: " << hf_status_name(f.status) << ": " << f.message << "\n";
    return exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "hilbfan: internal error: " << e.what() << "\n";
    return kInternal;
  }
}
