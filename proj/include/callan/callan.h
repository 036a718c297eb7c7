#ifndef CALLAN_CALLAN_H
#define CALLAN_CALLAN_H

/*
 * C interface to the callan library: Genocchi and poly-Bernoulli numbers,
 * enumeration of (m-barred) Callan sequences and Dumont permutations, the
 * phi/psi bijections and the identity certification harness.
 *
 * Every function returns a callan_status. On failure a description is
 * available from callan_last_error() until the next call on the same thread.
 * Strings returned through char** out-parameters are owned by the caller and
 * must be released with callan_string_free().
 */

#include <stddef.h>

#if defined(_WIN32)
#if defined(CALLAN_BUILDING)
#define CALLAN_EXPORT __declspec(dllexport)
#else
#define CALLAN_EXPORT __declspec(dllimport)
#endif
#else
#define CALLAN_EXPORT __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum callan_status {
  CALLAN_OK = 0,
  CALLAN_ERR_INVALID_ARGUMENT = 1,
  CALLAN_ERR_OUT_OF_RANGE = 2,
  CALLAN_ERR_DIVISION_BY_ZERO = 3,
  CALLAN_ERR_NON_SERIES_QUOTIENT = 4,
  CALLAN_ERR_INVALID_COMPOSITION = 5,
  CALLAN_ERR_DOMAIN = 6,
  CALLAN_ERR_CONSISTENCY = 7,
  CALLAN_ERR_UNSUPPORTED = 8,
  CALLAN_ERR_PARSE = 9,
  CALLAN_ERR_INVALID_HANDLE = 10,
  CALLAN_ERR_UNKNOWN = 11
} callan_status;

CALLAN_EXPORT const char* callan_status_string(callan_status status);
CALLAN_EXPORT const char* callan_last_error(void);
CALLAN_EXPORT void callan_string_free(char* s);
CALLAN_EXPORT const char* callan_version(void);

/* ---- numbers (decimal strings; rationals as "p/q") ------------------------ */

CALLAN_EXPORT callan_status callan_genocchi(int n, char** out);
CALLAN_EXPORT callan_status callan_poly_bernoulli_b(int n, int k, char** out);
CALLAN_EXPORT callan_status callan_poly_bernoulli_c(int n, int k, char** out);
/* C_n^k = C_n^{(-k-1)}. */
CALLAN_EXPORT callan_status callan_c_number(int n, int k, char** out);
/* CSV: header row "n\k,0,1,...,max_k", then one row per n. */
CALLAN_EXPORT callan_status callan_c_table_csv(int max_n, int max_k, char** out);

/* ---- m-barred Callan sequences -------------------------------------------- */

typedef struct callan_sequence callan_sequence;

CALLAN_EXPORT callan_status callan_sequence_parse(const char* json, callan_sequence** out);
CALLAN_EXPORT void callan_sequence_free(callan_sequence* s);
CALLAN_EXPORT callan_status callan_sequence_json(const callan_sequence* s, char** out);
CALLAN_EXPORT callan_status callan_sequence_text(const callan_sequence* s, char** out);
/* *valid is 1 or 0; *diagnostic (may be NULL) names the first violated rule. */
CALLAN_EXPORT callan_status callan_sequence_validate(const callan_sequence* s, int* valid, char** diagnostic);
/* "R*-nonempty", "star-only" or "star-only-with-barred-max-singleton". */
CALLAN_EXPORT callan_status callan_sequence_classify(const callan_sequence* s, char** cell);

/* ---- enumeration ---------------------------------------------------------- */

typedef enum callan_kind { CALLAN_KIND_CALLAN = 0, CALLAN_KIND_MBARRED = 1, CALLAN_KIND_DUMONT = 2 } callan_kind;

typedef struct callan_enumerator callan_enumerator;

/* For CALLAN_KIND_CALLAN, m is the shift of the base sets. For
 * CALLAN_KIND_DUMONT, n is the permutation length (even) and k, m are
 * ignored. */
CALLAN_EXPORT callan_status callan_enumerator_create(callan_kind kind, int k, int n, int m, callan_enumerator** out);
CALLAN_EXPORT void callan_enumerator_free(callan_enumerator* e);
/* Advances; *has_item is 0 at the end. json and text may be NULL. */
CALLAN_EXPORT callan_status callan_enumerator_next(callan_enumerator* e, int* has_item, char** json, char** text);
CALLAN_EXPORT callan_status callan_count(callan_kind kind, int k, int n, int m, char** out);

/* ---- bijections ----------------------------------------------------------- */

typedef enum callan_map {
  CALLAN_MAP_PHI = 0,
  CALLAN_MAP_PHI_INV = 1,
  CALLAN_MAP_PSI = 2,
  CALLAN_MAP_PSI_INV = 3,
  CALLAN_MAP_PSI_B = 4,
  CALLAN_MAP_PSI_R = 5,
  CALLAN_MAP_RELABEL = 6,
  CALLAN_MAP_SWAP_COLORS = 7
} callan_map;

/* Applies a map to a JSON object. The result is canonical JSON; case_tag
 * (may be NULL) receives "A1".."B2" for phi/phi-inv, "extra"/"ordinary" for
 * psi/psi-r, and the map name otherwise. psi-b emits, and psi-r expects, the
 * intermediate form tagged "form":"psi-b". */
CALLAN_EXPORT callan_status callan_map_apply(callan_map which, const char* input_json, char** output_json,
                                             char** case_tag);

/* ---- verification --------------------------------------------------------- */

typedef struct callan_report_list callan_report_list;

/* claim: pb-zero, thm1, thm2, prop-rec, partition, phi, psi, relabel,
 * telescope, prop1 or all. max_weight < 0 selects the default sweeps. */
CALLAN_EXPORT callan_status callan_verify(const char* claim, int max_weight, callan_report_list** out);
CALLAN_EXPORT void callan_report_list_free(callan_report_list* r);
CALLAN_EXPORT size_t callan_report_list_size(const callan_report_list* r);
CALLAN_EXPORT size_t callan_report_list_passed(const callan_report_list* r);
/* One JSON object per line. */
CALLAN_EXPORT callan_status callan_report_list_json(const callan_report_list* r, char** out);
CALLAN_EXPORT callan_status callan_report_list_table(const callan_report_list* r, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CALLAN_CALLAN_H */
