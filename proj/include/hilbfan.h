#ifndef HILBFAN_H
#define HILBFAN_H

/* C interface to hilbfan. Objects are opaque handles owned by the caller and
 * released with the matching *_free function. Every call returns an
 * hf_status; on failure hf_last_error() describes the problem (per thread).
 * Strings returned through char** are released with hf_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#define HF_API __declspec(dllexport)
#else
#define HF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hf_status {
  HF_OK = 0,
  HF_ERR_PARSE = 1,
  HF_ERR_DOMAIN = 2,
  HF_ERR_DIMENSION = 3,
  HF_ERR_RANK = 4,
  HF_ERR_UNSUPPORTED = 5,
  HF_ERR_PRECONDITION = 6,
  HF_ERR_INTERNAL = 7,
  HF_ERR_ARGUMENT = 8, /* null handle or bad flag */
  HF_ERR_MEMORY = 9
} hf_status;

typedef struct hf_ideal hf_ideal;
typedef struct hf_fan hf_fan;
typedef struct hf_picture hf_picture;

HF_API const char* hf_version(void);
HF_API const char* hf_last_error(void);
HF_API const char* hf_status_name(hf_status s);
HF_API void hf_string_free(char* s);

/* Ideals, in the grammar I(1,2) | I(4)^3 | m^2 | gens: x^2, x*y, y^3. */
HF_API hf_status hf_ideal_parse(const char* text, hf_ideal** out);
HF_API void hf_ideal_free(hf_ideal* I);
HF_API hf_status hf_ideal_colength(const hf_ideal* I, long* out);
HF_API hf_status hf_ideal_equal(const hf_ideal* a, const hf_ideal* b, int* out);
HF_API hf_status hf_ideal_to_string(const hf_ideal* I, char** out); /* step form */
HF_API hf_status hf_ideal_json(const hf_ideal* I, char** out);
HF_API hf_status hf_ideal_report(const hf_ideal* I, char** out);

/* Limit under x -> x + t*y^k (or y -> y + t*x^k); p is 0 or a prime. */
HF_API hf_status hf_limit_substitution(const hf_ideal* I, const char* substitution, unsigned p, hf_ideal** out);
/* Limit along a -> a t^u1, b -> b t^u2 of a two-parameter family. family is
 * "G41", "G32" or NULL to choose from the measuring sequence. The result is a
 * limit JSON document since limits on rays are not monomial. */
HF_API hf_status hf_limit_direction(const hf_ideal* I, long u1, long u2, const char* family, unsigned p,
                                    char** json_out);

/* Standard fan of a product of ideals. family as above. */
HF_API hf_status hf_fan_compute(const hf_ideal* const* ideals, size_t count, const char* family, unsigned p,
                                hf_fan** out);
HF_API void hf_fan_free(hf_fan* F);
HF_API hf_status hf_fan_ray_count(const hf_fan* F, size_t* out);
HF_API hf_status hf_fan_json(const hf_fan* F, char** out);
HF_API hf_status hf_fan_diagram_json(const hf_fan* F, char** out);
HF_API hf_status hf_fan_diagram_text(const hf_fan* F, char** out);

enum { HF_SVG_FAN = 0, HF_SVG_HULL = 1, HF_SVG_DIAGRAM = 2 };
HF_API hf_status hf_fan_svg(const hf_fan* F, int which, char** out);

/* Three-parameter support picture of a product of ideals (family G51). */
HF_API hf_status hf_support3(const hf_ideal* const* ideals, size_t count, unsigned p, hf_picture** out);
HF_API void hf_picture_free(hf_picture* P);
HF_API hf_status hf_picture_json(const hf_picture* P, char** out);   /* includes hull facets */
HF_API hf_status hf_picture_svg(const hf_picture* P, char** out);
HF_API hf_status hf_picture_facet_count(const hf_picture* P, size_t* out);

/* Claim harness. max_n >= 1; golden_dir holds figure1.json, figure2/, figure3.json.
 * *failures receives the number of failing reports. */
HF_API hf_status hf_verify(int max_n, const char* golden_dir, int include_figure3, char** json_out, long* failures);

/* SVG for a fan, diagram or picture JSON document. */
HF_API hf_status hf_render(const char* json, char** svg_out);

#ifdef __cplusplus
}
#endif

#endif
