/* permcensus: finite-field matrix census engine.
 *
 * C API for the shared library.  All heavy objects are opaque handles;
 * results are returned as heap-allocated strings (JSON / CSV / text)
 * that the caller releases with pc_string_free.  Every entry point
 * returns a pc_status; on failure pc_last_error() gives a detail
 * message for the calling thread.
 */
#ifndef PERMCENSUS_H
#define PERMCENSUS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pc_field pc_field;

typedef enum {
    PC_OK = 0,
    PC_ERR_NOT_PRIME,
    PC_ERR_DEGREE_TOO_LARGE,
    PC_ERR_DIVISION_BY_ZERO,
    PC_ERR_DIMENSION_MISMATCH,
    PC_ERR_RANK_OUT_OF_RANGE,
    PC_ERR_BUDGET_EXCEEDED,
    PC_ERR_PRECONDITION,
    PC_ERR_EVEN_CHARACTERISTIC,
    PC_ERR_ZERO_ALPHA,
    PC_ERR_PARSE,
    PC_ERR_COUNTEREXAMPLE,
    PC_ERR_INTERNAL
} pc_status;

typedef enum { PC_FORMAT_JSON = 0, PC_FORMAT_TEXT = 1, PC_FORMAT_CSV = 2 } pc_format;

/* 0 selects the built-in default budget (2^36 evaluated matrices). */
#define PC_DEFAULT_BUDGET 0

const char* pc_status_name(pc_status s);
/* Thread-local message for the most recent failure. */
const char* pc_last_error(void);
void pc_string_free(char* s);

/* ---- fields ---------------------------------------------------------- */

pc_status pc_field_create(uint32_t p, uint32_t k, pc_field** out);
/* Accepts "p" or "p^k". */
pc_status pc_field_parse(const char* spec, pc_field** out);
void pc_field_free(pc_field* f);
uint32_t pc_field_order(const pc_field* f);
uint32_t pc_field_characteristic(const pc_field* f);

/* ---- censuses -------------------------------------------------------- */

pc_status pc_census_joint(const pc_field* f, int n, uint64_t budget, int workers,
                          pc_format fmt, char** out);
pc_status pc_census_nr(const pc_field* f, int m, uint64_t budget, int workers,
                       pc_format fmt, char** out);
/* Decimal count of pairs annihilating the rank-r form. */
pc_status pc_census_vr(const pc_field* f, int k, int r, uint64_t budget, char** out);
pc_status pc_census_classes(const pc_field* f, int n, uint64_t budget, int workers,
                            pc_format fmt, char** out);
/* Exact |P_n| via the rank census of dimension n-1; decimal string. */
pc_status pc_pn_exact(const pc_field* f, int n, uint64_t budget, int workers, char** out);

/* stat is "per" or "det"; target is a field element literal. */
pc_status pc_sample_prob(const pc_field* f, int n, const char* stat, const char* target,
                         uint64_t trials, uint64_t seed, int workers, pc_format fmt,
                         char** out);

/* ---- polynomials ----------------------------------------------------- */

pc_status pc_bounds(int n, pc_format fmt, char** out);
/* CSV (or JSON) rows n,i,q for n_min..n_max; 3 <= n_min <= n_max <= 20. */
pc_status pc_thresholds(int n_min, int n_max, pc_format fmt, char** out);
pc_status pc_next_odd_prime_power(uint64_t m, uint64_t* out);

/* ---- converters ------------------------------------------------------ */

/* map: polya2 | psi33 | ex1 | ex2 | delta; mode: "exhaustive" | "random".
 * Returns PC_ERR_COUNTEREXAMPLE when the identity fails; the report
 * carries the witness. */
pc_status pc_verify(const pc_field* f, const char* map, int n, const char* mode,
                    uint64_t budget_or_trials, uint64_t seed, pc_format fmt, char** out);

/* ---- single-matrix evaluation ---------------------------------------- */

/* literal: semicolon-separated rows, comma-separated entries, e.g.
 * "1,2,0;0,1,1;2,2,1"; extension-field entries as tuples "(1,2)". */
pc_status pc_matrix_eval(const pc_field* f, const char* literal, pc_format fmt, char** out);

/* CSV timing of the two permanent algorithms: n,laplace_ns,ryser_ns. */
pc_status pc_bench(const pc_field* f, int n_max, int trials, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PERMCENSUS_H */
