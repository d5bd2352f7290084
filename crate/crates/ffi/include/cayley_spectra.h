#ifndef CAYLEY_SPECTRA_H
#define CAYLEY_SPECTRA_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CsStatus {
  CS_STATUS_OK = 0,
  CS_STATUS_NULL_POINTER = 1,
  CS_STATUS_INVALID_ARGUMENT = 2,
  CS_STATUS_OUT_OF_RANGE = 3,
  CS_STATUS_SIZE_LIMIT = 4,
  CS_STATUS_VERIFICATION_FAILED = 5,
  CS_STATUS_INTERNAL = 6,
  CS_STATUS_PANIC = 7,
} CsStatus;

/**
 * Recursive 5-cycle certification on `Alt(8)`.
 */
typedef struct CsCertification CsCertification;

/**
 * Exact spectrum of `Γ(n,k)`.
 */
typedef struct CsSpectrum CsSpectrum;

typedef struct CsHypothesisFlags {
  bool in_main_theorem_range;
  bool unique_rimhook_range;
  bool sqrtkfact_bound_holds;
} CsHypothesisFlags;

typedef struct CsCertificationRecord {
  size_t k;
  size_t valency;
  double lambda1_numeric;
  double lambda2_numeric;
  int64_t rhs_exact;
  /**
   * Largest residual among the computed eigenpairs.
   */
  double max_residual;
  size_t iterations;
  bool pass;
} CsCertificationRecord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The most recent error message on this thread, or NULL. Free with
 * [`cs_string_free`].
 */
char *cs_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void cs_string_free(char *s);

/**
 * Library version, static; do not free.
 */
const char *cs_version(void);

/**
 * `χ^λ(τ)` as a decimal string in `*out`.
 *
 * # Safety
 * `partition` and `cycle_type` must be NUL-terminated; `out` must be writable.
 */
enum CsStatus cs_character(const char *partition, const char *cycle_type, char **out);

/**
 * Second eigenvalue of `Γ(n,k)` in `*value`, and the partitions affording
 * it as `"[5,1] [2,2,2]"` in `*witnesses`.
 *
 * # Safety
 * `value` and `witnesses` must be writable.
 */
enum CsStatus cs_lambda2(size_t n, size_t k, char **value, char **witnesses);

/**
 * Closed-form eigenvalue for a low-dimensional shape such as `"n-2,2"`.
 *
 * # Safety
 * `shape` must be NUL-terminated; `out` must be writable.
 */
enum CsStatus cs_closed_form(const char *shape, size_t n, size_t k, char **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum CsStatus cs_hypothesis(size_t n, size_t k, struct CsHypothesisFlags *out);

/**
 * # Safety
 * `out` must be writable. Free the handle with [`cs_spectrum_free`].
 */
enum CsStatus cs_spectrum_new(size_t n, size_t k, struct CsSpectrum **out);

/**
 * # Safety
 * `spectrum` must be NULL or a live handle.
 */
void cs_spectrum_free(struct CsSpectrum *spectrum);

/**
 * Number of irreducibles (one entry each); 0 for NULL.
 *
 * # Safety
 * `spectrum` must be NULL or a live handle.
 */
size_t cs_spectrum_len(const struct CsSpectrum *spectrum);

/**
 * Entry `index` (eigenvalues descending) as three decimal strings.
 *
 * # Safety
 * `spectrum` must be a live handle; the outputs must be writable.
 */
enum CsStatus cs_spectrum_entry(const struct CsSpectrum *spectrum,
                                size_t index,
                                char **partition,
                                char **eigenvalue,
                                char **multiplicity);

/**
 * The spectrum as JSON, or NULL for a NULL handle.
 *
 * # Safety
 * `spectrum` must be NULL or a live handle.
 */
char *cs_spectrum_to_json(const struct CsSpectrum *spectrum);

/**
 * Runs the certification. A report that does not pass is still returned,
 * together with [`CsStatus::VerificationFailed`].
 *
 * # Safety
 * `out` must be writable. Free the handle with [`cs_certification_free`].
 */
enum CsStatus cs_certification_run(double tol,
                                   uint64_t seed,
                                   size_t max_iter,
                                   struct CsCertification **out);

/**
 * # Safety
 * `report` must be NULL or a live handle.
 */
void cs_certification_free(struct CsCertification *report);

/**
 * # Safety
 * `report` must be NULL or a live handle.
 */
bool cs_certification_passed(const struct CsCertification *report);

/**
 * # Safety
 * `report` must be NULL or a live handle.
 */
size_t cs_certification_len(const struct CsCertification *report);

/**
 * # Safety
 * `report` must be a live handle; `out` must be writable.
 */
enum CsStatus cs_certification_record(const struct CsCertification *report,
                                      size_t index,
                                      struct CsCertificationRecord *out);

/**
 * # Safety
 * `report` must be NULL or a live handle.
 */
char *cs_certification_to_json(const struct CsCertification *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CAYLEY_SPECTRA_H */
