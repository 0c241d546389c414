#include "hilbfan.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <new>

#include "hilbfan/error.hpp"
#include "hilbfan/io.hpp"
#include "hilbfan/verify.hpp"

struct hf_ideal {
  hilbfan::Staircase value;
};
struct hf_fan {
  hilbfan::Fan2D value;
};
struct hf_picture {
  hilbfan::SupportPicture value;
  std::vector<hilbfan::Facet> facets;
};

namespace {

thread_local std::string last_error;

hf_status code_of(hilbfan::ErrorCode c) {
  switch (c) {
    case hilbfan::ErrorCode::parse: return HF_ERR_PARSE;
    case hilbfan::ErrorCode::domain: return HF_ERR_DOMAIN;
    case hilbfan::ErrorCode::dimension: return HF_ERR_DIMENSION;
    case hilbfan::ErrorCode::rank: return HF_ERR_RANK;
    case hilbfan::ErrorCode::unsupported: return HF_ERR_UNSUPPORTED;
    case hilbfan::ErrorCode::precondition: return HF_ERR_PRECONDITION;
    case hilbfan::ErrorCode::internal: return HF_ERR_INTERNAL;
  }
  return HF_ERR_INTERNAL;
}

// Runs f, translating exceptions into a status and the thread's last error.
template <class F>
hf_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return HF_OK;
  } catch (const hilbfan::Error& e) {
    last_error = e.what();
    return code_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HF_ERR_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HF_ERR_INTERNAL;
  }
}

hf_status bad_argument(const char* what) {
  last_error = std::string("invalid argument: ") + what;
  return HF_ERR_ARGUMENT;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<hilbfan::Staircase> collect(const hf_ideal* const* ideals, size_t count) {
  std::vector<hilbfan::Staircase> out;
  for (size_t i = 0; i < count; ++i) {
    if (!ideals[i]) throw hilbfan::Error(hilbfan::ErrorCode::precondition, "null ideal in list");
    out.push_back(ideals[i]->value);
  }
  return out;
}

void check_char(unsigned p) {
  if (!hilbfan::valid_characteristic(p))
    throw hilbfan::Error(hilbfan::ErrorCode::domain, "characteristic must be 0 or a prime, got " + std::to_string(p));
}

}  // namespace

extern "C" {

const char* hf_version(void) { return "1.0.0"; }

const char* hf_last_error(void) { return last_error.c_str(); }

const char* hf_status_name(hf_status s) {
  switch (s) {
    case HF_OK: return "ok";
    case HF_ERR_PARSE: return "parse error";
    case HF_ERR_DOMAIN: return "domain error";
    case HF_ERR_DIMENSION: return "dimension error";
    case HF_ERR_RANK: return "rank error";
    case HF_ERR_UNSUPPORTED: return "unsupported";
    case HF_ERR_PRECONDITION: return "precondition violated";
    case HF_ERR_INTERNAL: return "internal error";
    case HF_ERR_ARGUMENT: return "invalid argument";
    case HF_ERR_MEMORY: return "out of memory";
  }
  return "unknown status";
}

void hf_string_free(char* s) { std::free(s); }

hf_status hf_ideal_parse(const char* text, hf_ideal** out) {
  if (!text || !out) return bad_argument("null pointer");
  return guard([&] { *out = new hf_ideal{hilbfan::parse_ideal(text)}; });
}

void hf_ideal_free(hf_ideal* I) { delete I; }

hf_status hf_ideal_colength(const hf_ideal* I, long* out) {
  if (!I || !out) return bad_argument("null pointer");
  return guard([&] { *out = I->value.colength(); });
}

hf_status hf_ideal_equal(const hf_ideal* a, const hf_ideal* b, int* out) {
  if (!a || !b || !out) return bad_argument("null pointer");
  *out = a->value == b->value;
  return HF_OK;
}

hf_status hf_ideal_to_string(const hf_ideal* I, char** out) {
  if (!I || !out) return bad_argument("null pointer");
  return guard([&] { *out = dup(hilbfan::to_string(I->value)); });
}

hf_status hf_ideal_json(const hf_ideal* I, char** out) {
  if (!I || !out) return bad_argument("null pointer");
  return guard([&] { *out = dup(hilbfan::ideal_json(I->value)); });
}

hf_status hf_ideal_report(const hf_ideal* I, char** out) {
  if (!I || !out) return bad_argument("null pointer");
  return guard([&] { *out = dup(hilbfan::ideal_report(I->value)); });
}

hf_status hf_limit_substitution(const hf_ideal* I, const char* substitution, unsigned p, hf_ideal** out) {
  if (!I || !substitution || !out) return bad_argument("null pointer");
  return guard([&] {
    check_char(p);
    const hilbfan::Substitution s = hilbfan::parse_substitution(substitution);
    *out = new hf_ideal{hilbfan::elementary_limit(I->value, s.var, s.power, p)};
  });
}

hf_status hf_limit_direction(const hf_ideal* I, long u1, long u2, const char* family, unsigned p, char** json_out) {
  if (!I || !json_out) return bad_argument("null pointer");
  return guard([&] {
    check_char(p);
    if (u1 == 0 && u2 == 0) throw hilbfan::Error(hilbfan::ErrorCode::domain, "direction must be nonzero");
    const hilbfan::Family f = family ? hilbfan::parse_family(family) : hilbfan::select_family({I->value});
    const hilbfan::ParamIdeal P = hilbfan::apply_family(I->value, f, p);
    *json_out = dup(hilbfan::limit_json(hilbfan::directional_limit(P, {u1, u2})));
  });
}

hf_status hf_fan_compute(const hf_ideal* const* ideals, size_t count, const char* family, unsigned p, hf_fan** out) {
  if (!ideals || count == 0 || !out) return bad_argument("empty ideal list");
  return guard([&] {
    check_char(p);
    hilbfan::FanOptions opts;
    if (family) opts.family = hilbfan::parse_family(family);
    opts.characteristic = p;
    *out = new hf_fan{hilbfan::standard_fan(collect(ideals, count), opts)};
  });
}

void hf_fan_free(hf_fan* F) { delete F; }

hf_status hf_fan_ray_count(const hf_fan* F, size_t* out) {
  if (!F || !out) return bad_argument("null pointer");
  *out = F->value.rays.size();
  return HF_OK;
}

hf_status hf_fan_json(const hf_fan* F, char** out) {
  if (!F || !out) return bad_argument("null pointer");
  return guard([&] { *out = dup(hilbfan::fan_json(F->value)); });
}

hf_status hf_fan_diagram_json(const hf_fan* F, char** out) {
  if (!F || !out) return bad_argument("null pointer");
  return guard([&] { *out = dup(hilbfan::diagram_json(hilbfan::boundary_diagram(F->value))); });
}

hf_status hf_fan_diagram_text(const hf_fan* F, char** out) {
  if (!F || !out) return bad_argument("null pointer");
  return guard([&] {
    const hilbfan::BoundaryDiagram d = hilbfan::boundary_diagram(F->value);
    std::string s = hilbfan::to_string(d);
    if (d.beyond_top) s += "\n(beyond (0,1): " + hilbfan::to_string(*d.beyond_top) + ")";
    *out = dup(s);
  });
}

hf_status hf_fan_svg(const hf_fan* F, int which, char** out) {
  if (!F || !out) return bad_argument("null pointer");
  if (which != HF_SVG_FAN && which != HF_SVG_HULL && which != HF_SVG_DIAGRAM) return bad_argument("unknown figure");
  return guard([&] {
    if (which == HF_SVG_FAN) *out = dup(hilbfan::fan_svg(F->value));
    if (which == HF_SVG_HULL) *out = dup(hilbfan::hull_svg(F->value));
    if (which == HF_SVG_DIAGRAM) *out = dup(hilbfan::diagram_svg(hilbfan::boundary_diagram(F->value)));
  });
}

hf_status hf_support3(const hf_ideal* const* ideals, size_t count, unsigned p, hf_picture** out) {
  if (!ideals || count == 0 || !out) return bad_argument("empty ideal list");
  return guard([&] {
    check_char(p);
    auto* P = new hf_picture{hilbfan::support_picture(hilbfan::coordinate_span(collect(ideals, count),
                                                                               hilbfan::Family::G51, p)),
                             {}};
    try {
      const std::vector<hilbfan::Point3> pts(P->value.points.begin(), P->value.points.end());
      P->facets = hilbfan::hull3_faces(pts);
    } catch (const hilbfan::Error&) {
      // Flat pictures have no 3-D hull; the facet list stays empty.
    } catch (...) {
      delete P;
      throw;
    }
    *out = P;
  });
}

void hf_picture_free(hf_picture* P) { delete P; }

hf_status hf_picture_json(const hf_picture* P, char** out) {
  if (!P || !out) return bad_argument("null pointer");
  return guard([&] {
    auto j = nlohmann::json::parse(hilbfan::picture_json(P->value));
    j["facets"] = nlohmann::json::array();
    for (const auto& f : P->facets)
      j["facets"].push_back({{"normal", {f.normal[0], f.normal[1], f.normal[2]}}, {"offset", f.offset}});
    *out = dup(j.dump(2));
  });
}

hf_status hf_picture_svg(const hf_picture* P, char** out) {
  if (!P || !out) return bad_argument("null pointer");
  return guard([&] { *out = dup(hilbfan::picture_svg(P->value)); });
}

hf_status hf_picture_facet_count(const hf_picture* P, size_t* out) {
  if (!P || !out) return bad_argument("null pointer");
  *out = P->facets.size();
  return HF_OK;
}

hf_status hf_verify(int max_n, const char* golden_dir, int include_figure3, char** json_out, long* failures) {
  if (!golden_dir || !json_out || !failures) return bad_argument("null pointer");
  if (max_n < 1) return bad_argument("max_n must be at least 1");
  return guard([&] {
    hilbfan::VerifyOptions opts;
    opts.max_n = max_n;
    opts.golden_dir = golden_dir;
    opts.figure3 = include_figure3 != 0;
    const auto reports = hilbfan::verify_all(opts);
    *failures = hilbfan::summarize(reports).fail;
    *json_out = dup(hilbfan::reports_json(reports));
  });
}

hf_status hf_render(const char* json, char** svg_out) {
  if (!json || !svg_out) return bad_argument("null pointer");
  return guard([&] {
    const std::string kind = hilbfan::json_kind(json);
    if (kind == "fan")
      *svg_out = dup(hilbfan::fan_svg(hilbfan::fan_from_json(json)));
    else if (kind == "diagram")
      *svg_out = dup(hilbfan::diagram_svg(hilbfan::diagram_from_json(json)));
    else if (kind == "picture")
      *svg_out = dup(hilbfan::picture_svg(hilbfan::picture_from_json(json)));
    else
      throw hilbfan::Error(hilbfan::ErrorCode::parse, "cannot render a '" + kind + "' document");
  });
}

}  // extern "C"
