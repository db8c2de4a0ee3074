/* C interface to the omegalex library.
 *
 * Objects are opaque handles released with the matching *_free call. Every
 * fallible function returns an ol_status; on failure a description is
 * available from ol_last_error() on the calling thread until the next call.
 * Elements are 1-based. Values that the C++ core keeps in 128 bits are
 * narrowed to 64 bits here and report OL_E_OVERFLOW when they do not fit.
 */
#ifndef OMEGALEX_H
#define OMEGALEX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define OL_API __declspec(dllexport)
#else
#define OL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ol_status {
  OL_OK = 0,
  OL_E_VALIDATION = 1,
  OL_E_RANGE = 2,
  OL_E_OVERFLOW = 3,
  OL_E_COMPATIBILITY = 4,
  OL_E_ARGUMENT = 5,
  OL_E_BUDGET = 6,
  OL_E_PARSE = 7,
  OL_E_IO = 8,
  OL_E_INTERNAL = 9
} ol_status;

typedef struct ol_family ol_family;
typedef struct ol_trace ol_trace;
typedef struct ol_table ol_table;

OL_API const char* ol_last_error(void);
OL_API const char* ol_status_name(ol_status status);

/* Exact C(n, k) narrowed to 64 bits. */
OL_API ol_status ol_binomial(uint64_t n, uint64_t k, uint64_t* out);

/* ---- families ---------------------------------------------------------- */

OL_API ol_status ol_family_parse(const char* text, ol_family** out);
OL_API ol_status ol_family_read(const char* path, ol_family** out);
OL_API ol_status ol_family_write(const ol_family* f, const char* path);
/* Text form; release with ol_string_free. */
OL_API ol_status ol_family_format(const ol_family* f, char** out);
OL_API void ol_string_free(char* s);
OL_API void ol_family_free(ol_family* f);

OL_API int ol_family_universe(const ol_family* f);
OL_API int ol_family_arity(const ol_family* f);
OL_API size_t ol_family_size(const ol_family* f);
/* Bit mask of member i (element x is bit x - 1). */
OL_API ol_status ol_family_member_bits(const ol_family* f, size_t i, uint64_t* out);

OL_API ol_status ol_lex_segment(int n, int k, uint64_t m, ol_family** out);
OL_API ol_status ol_complement(const ol_family* f, ol_family** out);
/* 1-based rank of a k-set given as a bit mask. */
OL_API ol_status ol_lex_rank(int n, uint64_t bits, uint64_t* out);
OL_API ol_status ol_lex_unrank(int n, int k, uint64_t rank, uint64_t* bits);

/* ---- intersection weights --------------------------------------------- */

OL_API ol_status ol_omega(const ol_family* f, uint64_t* out);
OL_API ol_status ol_omega_via_degrees(const ol_family* f, uint64_t* out);
OL_API ol_status ol_cross_omega(const ol_family* f, const ol_family* g, uint64_t* out);
/* Writes ol_family_universe(f) degrees; out must hold that many. */
OL_API ol_status ol_degree_vector(const ol_family* f, uint64_t* out, size_t capacity);
OL_API ol_status ol_disjoint_pairs(const ol_family* f, uint64_t* out);
OL_API ol_status ol_full_stars(const ol_family* f, uint64_t* bits);
OL_API ol_status ol_is_cover(const ol_family* f, uint64_t cover_bits, int* out);
/* *found is 0 when no cover of size <= size_limit exists. */
OL_API ol_status ol_minimum_cover(const ol_family* f, int size_limit, int* found, uint64_t* bits);

/* ---- cascade ------------------------------------------------------------ */

typedef struct ol_cascade {
  int n;
  int k;
  uint64_t m;
  int length;       /* s */
  int top[64];      /* a_i */
  int bottom[64];   /* k - i + 1 */
  int offset[64];   /* r_i = n - a_i */
  int end;          /* r_s, or 0 for an empty expansion */
  uint64_t last_set_bits;
} ol_cascade;

OL_API ol_status ol_cascade_decompose(int n, int k, uint64_t m, ol_cascade* out);

/* ---- constructions and bounds ----------------------------------------- */

typedef enum ol_graph_winner {
  OL_QUASI_COMPLETE = 0,
  OL_QUASI_STAR = 1,
  OL_TIE = 2
} ol_graph_winner;

typedef struct ol_graph_best {
  uint64_t value;
  ol_graph_winner which;
  uint64_t omega_quasi_complete;
  uint64_t omega_quasi_star;
} ol_graph_best;

OL_API ol_status ol_full_star(int n, int k, int x, ol_family** out);
OL_API ol_status ol_quasi_complete(int n, uint64_t m, ol_family** out);
OL_API ol_status ol_quasi_star(int n, uint64_t m, ol_family** out);
OL_API ol_status ol_graph_best_of(int n, uint64_t m, ol_graph_best* out);
/* Exact bound as a reduced fraction; the numerator is signed. */
OL_API ol_status ol_bey_bound(int n, int k, uint64_t m, int64_t* num, uint64_t* den);
/* Number of known equality families of size m. */
OL_API ol_status ol_bey_catalog_size(int n, int k, uint64_t m, size_t* out);

/* ---- verification ------------------------------------------------------- */

typedef struct ol_oracle_options {
  uint64_t budget;        /* 0 selects the default of 10^8 */
  unsigned threads;       /* 0 selects hardware concurrency */
  uint32_t audit_ppm;
  uint64_t audit_seed;
} ol_oracle_options;

typedef struct ol_verify_row {
  int n;
  int k;
  uint64_t m;
  int has_cascade_end;
  int cascade_end;
  int has_bound;
  int64_t bound_num;
  uint64_t bound_den;
  int has_graph_value;
  uint64_t graph_value;
  uint64_t omega_lex;
  int hypothesis_met;
  int over_budget;        /* 1: the fields below are unset */
  uint64_t omega_max;
  int lex_is_optimal;
  uint64_t optimum_count;
  uint64_t audited;
  uint64_t audit_mismatches;
} ol_verify_row;

OL_API void ol_oracle_options_init(ol_oracle_options* options);
/* Default enumeration budget, honoring the OMEGA_LEX_BUDGET environment variable. */
OL_API ol_status ol_default_budget(uint64_t* out);

OL_API ol_status ol_verify_table(int n, int k, uint64_t m_from, uint64_t m_to,
                                 const ol_oracle_options* options, ol_table** out);
OL_API size_t ol_table_size(const ol_table* t);
OL_API ol_status ol_table_row(const ol_table* t, size_t i, ol_verify_row* out);
/* Decimal candidate count for an over-budget row; valid while t lives. */
OL_API const char* ol_table_row_required(const ol_table* t, size_t i);
OL_API void ol_table_free(ol_table* t);

/* Exhaustive maximum for a single (n, k, m); the witness is returned as a family. */
OL_API ol_status ol_brute_force_max(int n, int k, uint64_t m, const ol_oracle_options* options,
                                    ol_verify_row* row, ol_family** witness);

OL_API ol_status ol_swap_delta(const ol_family* f, uint64_t out_bits, uint64_t in_bits, int64_t* out);

OL_API ol_status ol_local_search(const ol_family* start, size_t max_steps, ol_trace** out);
OL_API size_t ol_trace_length(const ol_trace* t);
OL_API ol_status ol_trace_step(const ol_trace* t, size_t i, uint64_t* removed_bits, uint64_t* added_bits,
                               int64_t* delta);
OL_API uint64_t ol_trace_start_omega(const ol_trace* t);
OL_API uint64_t ol_trace_final_omega(const ol_trace* t);
/* Borrowed; valid while t lives. */
OL_API const ol_family* ol_trace_final_family(const ol_trace* t);
OL_API void ol_trace_free(ol_trace* t);

#ifdef __cplusplus
}
#endif

#endif /* OMEGALEX_H */
