#ifndef LOCUS_H
#define LOCUS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as process exit codes in the bundled CLI. */
typedef enum {
  LOCUS_OK = 0,
  LOCUS_VERIFY_FAILED = 1,
  LOCUS_PARSE_ERROR = 2,
  LOCUS_AMBIGUOUS_SELECTOR = 3,
  LOCUS_CAP_EXCEEDED = 4,
  LOCUS_NOT_CLOSED = 5,
  LOCUS_INVALID_ARGUMENT = 6
} locus_status;

typedef struct locus_group locus_group;
typedef struct locus_eq_locus locus_eq_locus;
typedef struct locus_poset locus_poset;

/* Message of the calling thread's most recent failure; empty when none.
   The pointer stays valid until the thread's next library call. */
const char* locus_last_error(void);

/* Frees any char* produced by this library. */
void locus_string_free(char* s);

/* input: a catalog name (C12, D10, S4, A5, C2xC4, ...) or group-spec text,
   a "degree N" line followed by one generator per line in cycle notation.
   max_order 0 keeps the built-in cap. */
locus_status locus_group_open(const char* input, size_t max_order,
                              locus_group** out);
void locus_group_close(locus_group* g);
size_t locus_group_order(const locus_group* g);
size_t locus_group_class_count(const locus_group* g);
/* e.g. "D10: |G|=10, 4 subgroup classes, primes 2 5" */
locus_status locus_group_summary(const locus_group* g, char** out);

/* op: "inflation", "geomfix", "support" or "nfree".
   selector: "1", "G", a catalog-style name or order, "order#index", or a
   comma-separated generator list in cycle notation. inflation/geomfix/nfree
   demand a normal class; support takes any class.
   primes_csv: extra explicit primes, comma separated; NULL or "" for none. */
locus_status locus_eq_compute(const locus_group* g, const char* op,
                              const char* selector, const char* primes_csv,
                              locus_eq_locus** out);
void locus_eq_free(locus_eq_locus* z);
locus_status locus_eq_to_json(const locus_eq_locus* z, char** out);
/* format: "svg", "dot" or "ascii" */
locus_status locus_eq_render(const locus_eq_locus* z, const char* format,
                             char** out);
int locus_eq_is_whole(const locus_eq_locus* z);
int locus_eq_is_empty(const locus_eq_locus* z);

/* Absolute geometric fixed points of a subgroup class; the result is a
   chromatic-subset JSON document. */
locus_status locus_absfix_json(const locus_group* g, const char* selector,
                               const char* primes_csv, char** out);

/* Renders an equivariant locus straight from its JSON document. */
locus_status locus_render_json(const char* locus_json, const char* format,
                               char** out);
/* Renders a chromatic-subset JSON document (whole towers only). */
locus_status locus_chromatic_render(const char* chromatic_json,
                                    const char* title, const char* format,
                                    char** out);

/* text: lines "point a" and "spec a b" (b lies in the closure of a). */
locus_status locus_poset_open(const char* text, locus_poset** out);
void locus_poset_close(locus_poset* p);
size_t locus_poset_size(const locus_poset* p);
/* y_json: {"members":[...]}; writes the localization locus as subset JSON. */
locus_status locus_poset_localize(const locus_poset* p, const char* y_json,
                                  char** out);
/* 1 or 0; a negative value is -(locus_status) on error. */
int locus_poset_is_clopen(const locus_poset* p, const char* y_json);
/* Complement of a subset, as subset JSON; the two-tone localization figure
   draws the locus inside it. */
locus_status locus_poset_complement(const locus_poset* p, const char* y_json,
                                    char** out);
/* Up to two subset overlays, each JSON + legend label; pass NULL to omit. */
locus_status locus_poset_render(const locus_poset* p, const char* first_json,
                                const char* first_label,
                                const char* second_json,
                                const char* second_label, const char* format,
                                char** out);

/* Compactness locus of the finite localization of spectra inverting the
   chromatic subset y_json; extra primes join the explicit columns. */
locus_status locus_sh_localize(const char* y_json, const char* primes_csv,
                               char** out);
/* Preset: the classical localization at p (explicit primes 2,3,5 plus p). */
locus_status locus_sh_invert_at(unsigned long long p, const char* primes_csv,
                                char** out);

/* Runs the oracle suite; writes the pass/fail table either way.
   max_order 0 means the default 60. inject_failure corrupts one comparison
   to exercise the failure path. */
locus_status locus_verify(size_t max_order, int inject_failure,
                          char** table_out);

#ifdef __cplusplus
}
#endif

#endif /* LOCUS_H */
