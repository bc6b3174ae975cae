/*
 * C interface to the bperm signed-permutation library.
 *
 * Every fallible call returns a bperm_status; on failure a description is
 * available from bperm_last_error() (per thread, valid until the next call).
 * Handles are opaque and owned by the caller, who releases them with the
 * matching *_free function. Strings returned through char** must be released
 * with bperm_string_free.
 *
 * Text grammars: a signed permutation is "-2,1,3,-4"; a pattern set is
 * patterns separated by ';' ("3412;4231" or "3,4,1,2;4,2,3,1"); a partition
 * is "4,2".
 */
#ifndef BPERM_H
#define BPERM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(BPERM_BUILDING_LIBRARY)
#define BPERM_API __declspec(dllexport)
#else
#define BPERM_API __declspec(dllimport)
#endif
#else
#define BPERM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bperm_status {
  BPERM_OK = 0,
  BPERM_INVALID_WINDOW = 1,
  BPERM_INVALID_PERMUTATION = 2,
  BPERM_INDEX_OUT_OF_RANGE = 3,
  BPERM_PARSE_ERROR = 4,
  BPERM_PATTERN_TOO_LARGE = 5,
  BPERM_SIZE_CAP_EXCEEDED = 6,
  BPERM_UNKNOWN_CHECK = 7,
  BPERM_NOT_COLAYERED = 8,
  BPERM_NOT_IN_132_CLASS = 9,
  BPERM_UNSUPPORTED_METHOD = 10,
  BPERM_INVALID_ARGUMENT = 11,
  BPERM_IO_ERROR = 12,
  BPERM_INTERNAL_ERROR = 100
} bperm_status;

typedef enum bperm_mode { BPERM_MODE_GLOBAL = 0, BPERM_MODE_CLASSICAL = 1 } bperm_mode;

typedef enum bperm_method {
  BPERM_METHOD_GLOBAL = 0,
  BPERM_METHOD_CLASSICAL = 1,
  BPERM_METHOD_STRUCTURAL = 2
} bperm_method;

typedef struct bperm_signed bperm_signed;
typedef struct bperm_strings bperm_strings;
typedef struct bperm_table bperm_table;
typedef struct bperm_reports bperm_reports;

BPERM_API const char* bperm_last_error(void);
BPERM_API const char* bperm_status_name(bperm_status status);
BPERM_API void bperm_string_free(char* text);

/* Signed permutations. */
BPERM_API bperm_status bperm_signed_parse(const char* text, bperm_signed** out);
BPERM_API bperm_status bperm_signed_from_window(const int* window, size_t n, bperm_signed** out);
BPERM_API void bperm_signed_free(bperm_signed* w);
BPERM_API size_t bperm_signed_size(const bperm_signed* w);
/* Copy the window / 2n-letter mirror word / iota image into out[0..capacity). */
BPERM_API bperm_status bperm_signed_window(const bperm_signed* w, int* out, size_t capacity);
BPERM_API bperm_status bperm_signed_mirror(const bperm_signed* w, int* out, size_t capacity);
BPERM_API bperm_status bperm_signed_iota(const bperm_signed* w, int* out, size_t capacity);
BPERM_API bperm_status bperm_signed_to_string(const bperm_signed* w, char** out);
BPERM_API size_t bperm_signed_length(const bperm_signed* w);
/* Property names: vexillary, boolean, free, smooth-b, smooth-c, smooth-bc,
 * grassmannian, bigrassmannian, two-boolean. */
BPERM_API bperm_status bperm_signed_has_property(const bperm_signed* w, const char* property, int* out);
BPERM_API bperm_status bperm_signed_check_method(const bperm_signed* w, const char* property, bperm_method method,
                                                 int* out);
BPERM_API bperm_status bperm_signed_global_contains(const bperm_signed* w, const char* pattern, int* out);
BPERM_API bperm_status bperm_signed_classical_contains(const bperm_signed* w, const char* pattern, int* out);
BPERM_API bperm_status bperm_signed_global_occurrences(const bperm_signed* w, const char* pattern, uint64_t* out);

/* Lists of text lines. */
BPERM_API size_t bperm_strings_size(const bperm_strings* list);
BPERM_API const char* bperm_strings_at(const bperm_strings* list, size_t i);
BPERM_API void bperm_strings_free(bperm_strings* list);

/* Minimal classical basis of a global pattern set, one window per line. */
BPERM_API bperm_status bperm_basis(const char* patterns, bperm_strings** out);
/* Elements of B_n with a property, in lexicographic window order. */
BPERM_API bperm_status bperm_list_property(const char* property, int n, bperm_strings** out);
/* Elements of B_n avoiding a pattern set (unsigned for global mode). */
BPERM_API bperm_status bperm_list_avoiders(const char* patterns, bperm_mode mode, int n, bperm_strings** out);
/* "k,count" lines: how many w in B_n have exactly k global occurrences. */
BPERM_API bperm_status bperm_occurrence_distribution(const char* pattern, int n, bperm_strings** out);

/* Tableaux. Counts are decimal strings. */
BPERM_API bperm_status bperm_syt_count(const char* shape, char** out);
BPERM_API bperm_status bperm_domino_count(const char* shape, char** out);
/* One entry per domino tableau: rows of labels separated by '\n'. */
BPERM_API bperm_status bperm_domino_tableaux(const char* shape, bperm_strings** out);

/* Exact avoidance counts for n_min..n_max (n <= 8). use_cache consults the
 * file named by $BPERM_CACHE. */
BPERM_API bperm_status bperm_sequence(const char* patterns, bperm_mode mode, int n_min, int n_max, unsigned jobs,
                                      int use_cache, bperm_table** out);
BPERM_API size_t bperm_table_size(const bperm_table* table);
BPERM_API bperm_status bperm_table_row(const bperm_table* table, size_t i, int* n, const char** count);
BPERM_API bperm_status bperm_table_csv(const bperm_table* table, char** out);
BPERM_API bperm_status bperm_table_json(const bperm_table* table, char** out);
BPERM_API void bperm_table_free(bperm_table* table);

/* Verification checks. check_id NULL runs every registered check. */
BPERM_API bperm_status bperm_list_checks(bperm_strings** out);
BPERM_API bperm_status bperm_verify(const char* check_id, int max_n, unsigned jobs, bperm_reports** out);
BPERM_API size_t bperm_reports_size(const bperm_reports* reports);
BPERM_API const char* bperm_reports_id(const bperm_reports* reports, size_t i);
BPERM_API const char* bperm_reports_status(const bperm_reports* reports, size_t i);
BPERM_API bperm_status bperm_reports_json(const bperm_reports* reports, char** out);
BPERM_API bperm_status bperm_reports_text(const bperm_reports* reports, char** out);
BPERM_API int bperm_reports_any_theorem_failed(const bperm_reports* reports);
BPERM_API void bperm_reports_free(bperm_reports* reports);

#ifdef __cplusplus
}
#endif

#endif /* BPERM_H */
