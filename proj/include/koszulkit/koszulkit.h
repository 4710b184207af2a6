#ifndef KOSZULKIT_H
#define KOSZULKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define KK_API __declspec(dllexport)
#else
#define KK_API __attribute__((visibility("default")))
#endif

typedef enum kk_status {
    KK_OK = 0,
    KK_CHECK_FAILED = 1,
    KK_INPUT_ERROR = 2,
    KK_INTERNAL_ERROR = 3
} kk_status;

typedef struct kk_category kk_category;
typedef struct kk_complex kk_complex;
typedef struct kk_map kk_map;
typedef struct kk_inf_map kk_inf_map;
typedef struct kk_functor kk_functor;

/* Report functions write a canonical JSON document (sorted keys) to *report
 * and return KK_OK when every check passed, KK_CHECK_FAILED otherwise.
 * Strings returned through out-parameters are released with kk_string_free. */

KK_API const char* kk_version(void);
/* Message of the last failed call on this thread, or "". */
KK_API const char* kk_last_error(void);
KK_API void kk_string_free(char* s);

KK_API kk_status kk_category_load(const char* path, kk_category** out);
KK_API kk_status kk_category_parse(const char* json_text, kk_category** out);
KK_API void kk_category_free(kk_category* c);
KK_API kk_status kk_category_hash(const kk_category* c, char** out);
/* Resolves a catalog name such as FIX_A2 inside dir; other strings are returned unchanged. */
KK_API kk_status kk_fixture_path(const char* name, const char* dir, char** out);

KK_API kk_status kk_complex_parse(const kk_category* c, const char* json_text, kk_complex** out);
/* Direct sum of the listed indecomposables ("a+b") placed in the given degree. */
KK_API kk_status kk_complex_object(const kk_category* c, const char* ids, int degree, kk_complex** out);
KK_API kk_status kk_complex_json(const kk_complex* x, char** out);
KK_API void kk_complex_free(kk_complex* x);

/* {"source": complex, "target": complex, "components": {...}} */
KK_API kk_status kk_map_parse(const kk_category* c, const char* json_text, kk_map** out);
KK_API void kk_map_free(kk_map* f);

/* {"f0": map, "finf": map} */
KK_API kk_status kk_inf_map_parse(const kk_category* c, const char* json_text, kk_inf_map** out);
KK_API void kk_inf_map_free(kk_inf_map* f);

KK_API kk_status kk_functor_parse(const kk_category* source, const kk_category* target, const char* json_text,
                                  kk_functor** out);
KK_API void kk_functor_free(kk_functor* f);

KK_API kk_status kk_validate(const kk_category* c, char** report);
KK_API kk_status kk_hom(const kk_complex* x, const kk_complex* y, int shift, char** report);
KK_API kk_status kk_cone(const kk_map* f, char** report);
KK_API kk_status kk_minimize(const kk_complex* x, char** report);
/* Truncation at 0, or at *at when at is non-null. */
KK_API kk_status kk_truncate(const kk_complex* x, const int* at, char** report);
KK_API kk_status kk_heart_simples(const kk_category* c, char** report);
KK_API kk_status kk_heart(const kk_complex* x, char** report);
KK_API kk_status kk_weights(const kk_complex* x, char** report);
KK_API kk_status kk_mixed_check(const kk_category* c, int lo, int hi, char** report);
KK_API kk_status kk_koszul_check(const kk_category* c, int lo, int hi, uint64_t seed, char** report);
KK_API kk_status kk_surrogate(const kk_category* c, int lo, int hi, char** report);
KK_API kk_status kk_dual(const kk_category* c, int lo, int hi, size_t length_bound, char** report);
KK_API kk_status kk_roundtrip(const kk_category* c, char** report);
KK_API kk_status kk_double_dual(const kk_category* c, int lo, int hi, size_t length_bound, char** report);

KK_API kk_status kk_inf_compose(const kk_inf_map* g, const kk_inf_map* f, char** report);
KK_API kk_status kk_inf_invert(const kk_inf_map* f, char** report);
/* p : X → X', q : Y → Y' over f : X → Y and i : X' → Y'. */
KK_API kk_status kk_inf_square(const kk_inf_map* p, const kk_inf_map* q, const kk_map* f, const kk_map* i,
                               char** report);
KK_API kk_status kk_inf_les(const kk_inf_map* f, int lo, int hi, char** report);

KK_API kk_status kk_filtered_demo(const kk_category* c, uint64_t seed, int samples, char** report);
KK_API kk_status kk_functor_apply(const kk_functor* f, const kk_complex* x, char** report);
KK_API kk_status kk_selftest(const char* fixture_dir, uint64_t seed, char** report);

/* Compares a report with the "report" member of a golden file after canonical serialization.
 * *diff receives "" when equal, else the JSON pointer of the first difference.
 * With regenerate set, the golden is rewritten atomically and KK_OK returned. */
KK_API kk_status kk_golden_compare(const char* report, const char* golden_path, int regenerate, char** diff);

#ifdef __cplusplus
}
#endif

#endif
