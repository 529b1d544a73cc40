#ifndef CKEL_H
#define CKEL_H

/* Generated by cbindgen from the ckel-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every binding call.
typedef enum CkelStatus {
  CKEL_STATUS_OK = 0,
  CKEL_STATUS_NULL_ARGUMENT = 1,
  CKEL_STATUS_INVALID_UTF8 = 2,
  CKEL_STATUS_PARSE_ERROR = 3,
  CKEL_STATUS_INVALID_INPUT = 4,
  CKEL_STATUS_HYPOTHESIS_NOT_CERTIFIED = 5,
  CKEL_STATUS_LEVEL_NOT_COVERED = 6,
  CKEL_STATUS_WRONG_KIND = 7,
  CKEL_STATUS_LEVEL_REQUIRED = 8,
  CKEL_STATUS_INTERNAL = 9,
} CkelStatus;

// Opaque handle to a parsed input document.
typedef struct CkelDocument CkelDocument;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a JSON input document (the `{"kind": "ck" | "seed", ...}` schema)
// into an opaque handle.
//
// # Safety
// `json` must be a valid NUL-terminated string and `out_document` a valid
// pointer; the returned handle must be freed with `ckel_document_free`.
enum CkelStatus ckel_document_parse(const char *json, struct CkelDocument **out_document);

// Releases a document handle. Accepts NULL.
//
// # Safety
// `document` must come from `ckel_document_parse` and not be freed twice.
void ckel_document_free(struct CkelDocument *document);

// Releases a string returned by any report call. Accepts NULL.
//
// # Safety
// `s` must come from a ckel report call and not be freed twice.
void ckel_string_free(char *s);

// Structural validation report: Cuntz-Krieger validity of a matrix, or
// the stability/irreducibility report of a seed.
//
// # Safety
// `document` must be a live handle and `out_report` a valid pointer.
enum CkelStatus ckel_validate(const struct CkelDocument *document, char **out_report);

// K_0 with the unit class and K_1. Negative `level` means the certified
// default; `assume_drs_li` asserts the hypothesis of an explicit tail.
//
// # Safety
// `document` must be a live handle and `out_report` a valid pointer.
enum CkelStatus ckel_k_groups(const struct CkelDocument *document,
                              int64_t level,
                              bool assume_drs_li,
                              char **out_report);

// Strong and weak extension groups of a seed document.
//
// # Safety
// `document` must be a live handle and `out_report` a valid pointer.
enum CkelStatus ckel_ext_groups(const struct CkelDocument *document,
                                int64_t level,
                                bool assume_drs_li,
                                char **out_report);

// Six-term exactness report at a level (negative for the certified
// default).
//
// # Safety
// `document` must be a live handle and `out_report` a valid pointer.
enum CkelStatus ckel_six_term(const struct CkelDocument *document,
                              int64_t level,
                              char **out_report);

// Level-to-level stabilization map report.
//
// # Safety
// `document` must be a live handle and `out_report` a valid pointer.
enum CkelStatus ckel_stabilization(const struct CkelDocument *document,
                                   int64_t level,
                                   char **out_report);

// Reciprocal dual matrix of a seed and the duality verification.
//
// # Safety
// `document` must be a live handle and `out_report` a valid pointer.
enum CkelStatus ckel_dual(const struct CkelDocument *document,
                          bool assume_drs_li,
                          char **out_report);

// Double-dual checks for a Cuntz-Krieger matrix document.
//
// # Safety
// `document` must be a live handle and `out_report` a valid pointer.
enum CkelStatus ckel_double_dual(const struct CkelDocument *document, char **out_report);

// Complete invariant (G1, G2, G3) of a Cuntz-Krieger matrix document.
//
// # Safety
// `document` must be a live handle and `out_report` a valid pointer.
enum CkelStatus ckel_ck_invariant(const struct CkelDocument *document, char **out_report);

// Decides isomorphism of the simple Cuntz-Krieger algebras of two matrix
// documents.  Writes the verdict to `out_isomorphic` when non-NULL.
//
// # Safety
// `first` and `second` must be live handles and `out_report` a valid
// pointer.
enum CkelStatus ckel_compare(const struct CkelDocument *first,
                             const struct CkelDocument *second,
                             bool *out_isomorphic,
                             char **out_report);

// Runs the bundled worked-example corpus; the report is a JSON object
// with one entry per example and an overall verdict.
//
// # Safety
// `out_report` and `out_all_pass` (when non-NULL) must be valid pointers.
enum CkelStatus ckel_run_examples(bool *out_all_pass, char **out_report);

// Version of the underlying library, a static string that must not be
// freed.
const char *ckel_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CKEL_H */
