/* C interface to the kzi library: Kontsevich integrals of braids and their
 * closures via KZ transport. All objects are opaque handles owned by the
 * caller and released with the matching *_free function. Every function that
 * can fail returns a kzi_status; the message of the most recent failure on
 * the calling thread is available from kzi_last_error(). */
#ifndef KZI_KZI_H
#define KZI_KZI_H

#include <stddef.h>

#if defined(KZI_BUILDING_LIBRARY)
#define KZI_API __attribute__((visibility("default")))
#else
#define KZI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kzi_status {
  KZI_OK = 0,
  KZI_ERR_VALIDATION = 1,
  KZI_ERR_NUMERICAL = 2,
  KZI_ERR_INTERNAL = 3
} kzi_status;

typedef struct kzi_series kzi_series; /* Z of a braid: horizontal words */
typedef struct kzi_link kzi_link;     /* Z of a closed braid, reduced */

KZI_API const char* kzi_last_error(void);
KZI_API const char* kzi_version(void);

KZI_API int kzi_default_steps(void);
KZI_API double kzi_default_zero_threshold(void);

/* Parses and validates a braid word ("1 -2 1") without computing anything. */
KZI_API kzi_status kzi_braid_validate(const char* word, int n_strands, size_t* n_letters);

KZI_API kzi_status kzi_braid_series(const char* word, int n_strands, int max_degree, int steps,
                                    double zero_threshold, kzi_series** out);
KZI_API kzi_status kzi_series_from_json(const char* json, kzi_series** out);
KZI_API void kzi_series_free(kzi_series* series);

KZI_API int kzi_series_n_strands(const kzi_series* series);
KZI_API int kzi_series_max_degree(const kzi_series* series);
KZI_API size_t kzi_series_term_count(const kzi_series* series);
/* Term `index` in graded-lex order. `chords` receives 2*degree strand
 * indices (i1, j1, i2, j2, ...), bottom chord first; pass capacity in ints. */
KZI_API kzi_status kzi_series_term(const kzi_series* series, size_t index, int* chords, size_t capacity,
                                   size_t* degree, double* re, double* im);
KZI_API double kzi_series_error_estimate(const kzi_series* series);
KZI_API kzi_status kzi_series_distance(const kzi_series* a, const kzi_series* b, double* distance);
KZI_API kzi_status kzi_series_max_difference(const kzi_series* a, const kzi_series* b, double* difference);
/* *json is allocated by the library; release it with kzi_string_free. */
KZI_API kzi_status kzi_series_json(const kzi_series* series, char** json);

KZI_API kzi_status kzi_link_compute(const char* word, int n_strands, int max_degree, int steps,
                                    double zero_threshold, kzi_link** out);
KZI_API void kzi_link_free(kzi_link* link);
KZI_API int kzi_link_components(const kzi_link* link);
/* Nonzero reduced terms. `label` receives the diagram's slot table as text. */
KZI_API size_t kzi_link_term_count(const kzi_link* link);
KZI_API kzi_status kzi_link_term(const kzi_link* link, size_t index, char* label, size_t capacity, int* degree,
                                 double* re, double* im);
KZI_API kzi_status kzi_link_json(const kzi_link* link, char** json);

/* Runs one named self-check. *report is a text summary, one line per case. */
KZI_API kzi_status kzi_verify(const char* check, int max_degree, int steps, double* max_residual, int* passed,
                              char** report);

KZI_API kzi_status kzi_quotient_dimension_circles(int n_circles, int degree, size_t* dimension);
KZI_API kzi_status kzi_quotient_dimension_strands(int n_strands, int degree, size_t* dimension);
/* Number of horizontal words of the given degree before any relation. */
KZI_API kzi_status kzi_word_count(int n_strands, int degree, size_t* count);

KZI_API void kzi_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* KZI_KZI_H */
