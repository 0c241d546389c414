// Exercises the shared library through its C header only.
#include <doctest.h>

#include <cstring>
#include <string>

#include "hilbfan.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  hf_string_free(s);
  return out;
}

hf_ideal* parse(const char* text) {
  hf_ideal* I = nullptr;
  REQUIRE(hf_ideal_parse(text, &I) == HF_OK);
  return I;
}

}  // namespace

TEST_CASE("ideal handles") {
  hf_ideal* I = parse("I(1,2)");
  long n = 0;
  CHECK(hf_ideal_colength(I, &n) == HF_OK);
  CHECK(n == 4);
  char* s = nullptr;
  CHECK(hf_ideal_to_string(I, &s) == HF_OK);
  CHECK(take(s) == "I(1,2)");
  CHECK(hf_ideal_json(I, &s) == HF_OK);
  CHECK(take(s).find("\"colength\": 4") != std::string::npos);
  CHECK(hf_ideal_report(I, &s) == HF_OK);
  CHECK(take(s).find("m(2,1)") != std::string::npos);
  hf_ideal* J = parse("gens: x^2, x*y, y^2 ");
  int eq = -1;
  CHECK(hf_ideal_equal(I, J, &eq) == HF_OK);
  CHECK(eq == 0);
  hf_ideal_free(I);
  hf_ideal_free(J);
}

TEST_CASE("errors carry codes and messages") {
  hf_ideal* I = nullptr;
  CHECK(hf_ideal_parse("I()", &I) == HF_ERR_PARSE);
  CHECK(I == nullptr);
  CHECK(std::strstr(hf_last_error(), "unit ideal") != nullptr);
  CHECK(hf_ideal_parse(nullptr, &I) == HF_ERR_ARGUMENT);
  CHECK(hf_ideal_colength(nullptr, nullptr) == HF_ERR_ARGUMENT);
  CHECK(std::string(hf_status_name(HF_ERR_DOMAIN)) == "domain error");

  hf_ideal* big = parse("I(6)");
  hf_fan* F = nullptr;
  CHECK(hf_fan_compute(&big, 1, nullptr, 0, &F) == HF_ERR_UNSUPPORTED);
  CHECK(F == nullptr);
  CHECK(hf_fan_compute(&big, 1, "G41", 4, &F) == HF_ERR_DOMAIN);
  CHECK(hf_fan_compute(&big, 1, "G99", 0, &F) == HF_ERR_PARSE);
  hf_ideal_free(big);

  // A later success clears the message.
  hf_ideal* ok = parse("m");
  CHECK(std::string(hf_last_error()).empty());
  hf_ideal_free(ok);
}

TEST_CASE("limits") {
  hf_ideal* I = parse("gens: x, y^3");
  hf_ideal* L = nullptr;
  CHECK(hf_limit_substitution(I, "x->x+t*y^2", 0, &L) == HF_OK);
  hf_ideal* m2 = parse("m^2");
  int eq = 0;
  hf_ideal_equal(L, m2, &eq);
  CHECK(eq == 1);
  hf_ideal_free(L);
  CHECK(hf_limit_substitution(I, "x->x+t*x", 0, &L) == HF_ERR_PARSE);
  hf_ideal_free(I);
  hf_ideal_free(m2);

  hf_ideal* J = parse("I(4)");
  char* s = nullptr;
  CHECK(hf_limit_direction(J, 1, 0, nullptr, 0, &s) == HF_OK);
  CHECK(take(s).find("\"steps\": [\n    2,\n    0\n  ]") != std::string::npos);
  CHECK(hf_limit_direction(J, -1, -1, nullptr, 0, &s) == HF_OK);
  CHECK(take(s).find("\"generators\": \"(x,y^4)\"") != std::string::npos);
  CHECK(hf_limit_direction(J, 1, 2, nullptr, 0, &s) == HF_OK);
  CHECK(take(s).find("\"monomial\": false") != std::string::npos);
  CHECK(hf_limit_direction(J, 0, 0, nullptr, 0, &s) == HF_ERR_DOMAIN);
  hf_ideal_free(J);
}

TEST_CASE("fans") {
  hf_ideal* I = parse("I(4)");
  hf_fan* F = nullptr;
  REQUIRE(hf_fan_compute(&I, 1, nullptr, 0, &F) == HF_OK);
  size_t rays = 0;
  CHECK(hf_fan_ray_count(F, &rays) == HF_OK);
  CHECK(rays == 3);
  char* s = nullptr;
  CHECK(hf_fan_json(F, &s) == HF_OK);
  const std::string fj = take(s);
  CHECK(fj.find("\"kind\": \"fan\"") != std::string::npos);
  CHECK(hf_fan_diagram_text(F, &s) == HF_OK);
  CHECK(take(s) == "I(1,2) / (1,2)");
  for (int w : {HF_SVG_FAN, HF_SVG_HULL, HF_SVG_DIAGRAM}) {
    CHECK(hf_fan_svg(F, w, &s) == HF_OK);
    CHECK(take(s).rfind("<svg", 0) == 0);
  }
  CHECK(hf_fan_svg(F, 7, &s) == HF_ERR_ARGUMENT);
  CHECK(hf_render(fj.c_str(), &s) == HF_OK);
  CHECK(take(s).rfind("<svg", 0) == 0);
  CHECK(hf_render("{\"schema_version\":1,\"kind\":\"ideal\"}", &s) == HF_ERR_PARSE);
  hf_fan_free(F);

  hf_ideal* pair[2] = {parse("I(3)"), parse("I(1,4)")};
  CHECK(hf_fan_compute(pair, 2, nullptr, 0, &F) == HF_OK);
  CHECK(hf_fan_ray_count(F, &rays) == HF_OK);
  CHECK(rays == 4);
  hf_fan_free(F);
  hf_ideal_free(pair[0]);
  hf_ideal_free(pair[1]);
  hf_ideal_free(I);
}

TEST_CASE("support picture") {
  hf_ideal* I = parse("I(3)");
  hf_picture* P = nullptr;
  REQUIRE(hf_support3(&I, 1, 0, &P) == HF_OK);
  size_t facets = 99;
  CHECK(hf_picture_facet_count(P, &facets) == HF_OK);
  CHECK(facets == 0);  // two collinear points
  char* s = nullptr;
  CHECK(hf_picture_json(P, &s) == HF_OK);
  const std::string pj = take(s);
  CHECK(pj.find("\"open\": []") != std::string::npos);
  CHECK(hf_render(pj.c_str(), &s) == HF_OK);
  hf_string_free(s);
  hf_picture_free(P);
  hf_ideal_free(I);
}

TEST_CASE("verify entry point") {
  char* s = nullptr;
  long failures = -1;
  CHECK(hf_verify(2, HILBFAN_GOLDEN_DIR, 0, &s, &failures) == HF_OK);
  CHECK(failures == 0);
  CHECK(take(s).find("\"summary\"") != std::string::npos);
  CHECK(hf_verify(0, HILBFAN_GOLDEN_DIR, 0, &s, &failures) == HF_ERR_ARGUMENT);
}
