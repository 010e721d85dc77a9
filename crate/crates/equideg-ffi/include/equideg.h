#ifndef EQUIDEG_H
#define EQUIDEG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EquidegStatus {
  EQUIDEG_STATUS_OK = 0,
  EQUIDEG_STATUS_NULL_ARGUMENT = 1,
  // Invalid configuration or input, the CLI's exit code 2.
  EQUIDEG_STATUS_CONFIG_ERROR = 2,
  // Failure during computation, the CLI's exit code 3.
  EQUIDEG_STATUS_COMPUTATION_ERROR = 3,
  EQUIDEG_STATUS_INVALID_UTF8 = 4,
  EQUIDEG_STATUS_PANIC = 5,
} EquidegStatus;

// Loaded model.
typedef struct EquidegModel EquidegModel;

// Computed report.
typedef struct EquidegReport EquidegReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failure on this thread, or null. Valid until the next
// failing call on the same thread; do not free.
const char *equideg_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void equideg_string_free(char *s);

// Loads a model from a JSON file.
//
// # Safety
// `path` must be a nul-terminated string and `out` writable.
enum EquidegStatus equideg_model_load(const char *path, struct EquidegModel **out);

// Builds a model from a JSON document.
//
// # Safety
// `json` must be a nul-terminated string and `out` writable.
enum EquidegStatus equideg_model_from_json(const char *json, struct EquidegModel **out);

// # Safety
// `model` must come from a loader here, or be null.
void equideg_model_free(struct EquidegModel *model);

// Number of critical points of the model.
//
// # Safety
// `model` must be a live handle and `out` writable.
enum EquidegStatus equideg_critical_point_count(const struct EquidegModel *model, uintptr_t *out);

// Critical point `index` in increasing `α`: its `(n, m, j)` and `α`.
//
// # Safety
// `model` must be a live handle; every out-pointer writable.
enum EquidegStatus equideg_critical_point(const struct EquidegModel *model,
                                          uintptr_t index,
                                          uint32_t *n,
                                          uint32_t *m,
                                          uintptr_t *j,
                                          double *alpha);

// Basic degree of `V_{m,j}` as JSON terms.
//
// # Safety
// `model` must be a live handle and `out` writable.
enum EquidegStatus equideg_basic_degree_json(const struct EquidegModel *model,
                                             uint32_t m,
                                             uintptr_t j,
                                             char **out);

// Local invariant at `(n, m, j)` as JSON terms; `full` selects the full
// rather than the relative mode.
//
// # Safety
// `model` must be a live handle and `out` writable.
enum EquidegStatus equideg_invariant_json(const struct EquidegModel *model,
                                          uint32_t n,
                                          uint32_t m,
                                          uintptr_t j,
                                          bool full,
                                          char **out);

// Runs the full analysis.
//
// # Safety
// `model` must be a live handle and `out` writable.
enum EquidegStatus equideg_report_run(const struct EquidegModel *model, struct EquidegReport **out);

// # Safety
// `report` must come from [`equideg_report_run`], or be null.
void equideg_report_free(struct EquidegReport *report);

// The report as JSON.
//
// # Safety
// `report` must be a live handle and `out` writable.
enum EquidegStatus equideg_report_json(const struct EquidegReport *report, char **out);

// Squared Bessel zero `s_{nm} = j_{m,n}^2`, `n >= 1`.
//
// # Safety
// `out` must be writable.
enum EquidegStatus equideg_bessel_zero_sq(uint32_t m, uintptr_t n, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EQUIDEG_H */
