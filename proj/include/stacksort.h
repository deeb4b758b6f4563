/* C interface to the stacksort library. All handles are opaque; every call
 * that can fail returns an ss_status and leaves a message retrievable with
 * ss_last_error() on the calling thread. */
#ifndef STACKSORT_H
#define STACKSORT_H

#include <stddef.h>
#include <stdint.h>

#if defined(STACKSORT_BUILDING_LIBRARY)
#define SS_API __attribute__((visibility("default")))
#else
#define SS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SS_OK = 0,
  SS_ERR_INVALID_ARGUMENT = 1, /* null pointer, unknown option name, ... */
  SS_ERR_INVALID_INPUT = 2,    /* malformed word, nesting violation, bad tuple */
  SS_ERR_DOMAIN = 3,           /* formula evaluated where it is undefined */
  SS_ERR_INTERNAL = 4
} ss_status;

typedef enum { SS_FORMAT_JSON = 0, SS_FORMAT_CSV = 1, SS_FORMAT_DOT = 2, SS_FORMAT_TEXT = 3 } ss_format;

typedef enum { SS_FILTER_ALL = 0, SS_FILTER_SS = 1, SS_FILTER_2SS = 2 } ss_filter;

/* A word, or a tuple of words when parsed from text containing '|'. */
typedef struct ss_word ss_word;
/* An owned, NUL-terminated string. */
typedef struct ss_text ss_text;

SS_API const char* ss_version(void);
SS_API const char* ss_last_error(void);
SS_API const char* ss_status_name(ss_status s);

SS_API ss_status ss_word_parse(const char* text, ss_word** out);
SS_API ss_status ss_word_from_letters(const uint32_t* letters, size_t len, ss_word** out);
SS_API void ss_word_free(ss_word* w);
/* Number of components (1 for a plain word). */
SS_API size_t ss_word_components(const ss_word* w);
/* Length of the concatenation. */
SS_API size_t ss_word_length(const ss_word* w);
/* Copies up to cap letters of the concatenation; *len receives the full length. */
SS_API ss_status ss_word_letters(const ss_word* w, uint32_t* buf, size_t cap, size_t* len);
SS_API ss_status ss_word_format(const ss_word* w, ss_text** out);

SS_API const char* ss_text_str(const ss_text* t);
SS_API void ss_text_free(ss_text* t);

/* r = 0 infers r from the multiplicity of the largest letter. */
SS_API ss_status ss_infer_r(const ss_word* w, unsigned* r);
SS_API ss_status ss_is_r_permutation(const ss_word* w, unsigned r, int* result);
SS_API ss_status ss_stack_sort(const ss_word* w, ss_word** out);
SS_API ss_status ss_stack_sort_machine(const ss_word* w, ss_word** out);
SS_API ss_status ss_stack_sort_lambda(const ss_word* w, const unsigned* cuts, size_t ncuts, unsigned r,
                                      ss_word** out);

/* JSON with the descent sets and vector of a word or tuple. */
SS_API ss_status ss_descents(const ss_word* w, unsigned r, ss_text** out);
/* Tree (word) or forest (tuple) in SS_FORMAT_DOT or SS_FORMAT_TEXT. */
SS_API ss_status ss_tree_render(const ss_word* w, unsigned r, ss_format format, ss_text** out);

/* method: "char" (pattern characterization, default when NULL), "iterate",
 * "231" (t = 1 only) or "west" (t = 2 only). JSON verdict in *json, which may
 * be NULL. Witness positions are 1-based. */
SS_API ss_status ss_check(const ss_word* w, unsigned t, const char* method, int* sortable, ss_text** json);
/* Two-stack-sortability of a tuple (or single word). */
SS_API ss_status ss_is_2ss_tuple(const ss_word* w, unsigned r, int* result);

typedef struct {
  unsigned n;
  unsigned r;
  ss_filter filter;
  int has_k; /* tuples of k components when nonzero */
  unsigned k;
  int allow_empty;
  const unsigned* lambda; /* cuts of S_lambda, or NULL */
  size_t lambda_len;
  int by_descents;
  unsigned jobs; /* worker threads; 0 is treated as 1 */
} ss_enum_query;

SS_API ss_status ss_enumerate(const ss_enum_query* q, ss_format format, ss_text** out);

/* formula: ss, 2ss, 2ss-total, h-variant, lambda12. k may be NULL for a table. */
SS_API ss_status ss_count_formula(const char* formula, unsigned n, unsigned r, const uint64_t* k, size_t k_len,
                                  ss_format format, ss_text** out);

/* which: fe, solution, p, zeilberger, h, lambda12, identities. */
SS_API ss_status ss_verify_series(const char* which, unsigned r, unsigned z_order, unsigned x_degree, int* ok,
                                  ss_text** json);

typedef void (*ss_selftest_cb)(void* user, int id, const char* name, int passed, const char* detail,
                               double seconds, double budget);
SS_API ss_status ss_selftest(unsigned jobs, ss_selftest_cb cb, void* user, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
