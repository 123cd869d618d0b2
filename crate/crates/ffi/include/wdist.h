/* C interface to the wdist weight-distribution library. */

#ifndef WDIST_H
#define WDIST_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Error codes shared by every entry point.
 */
typedef enum WdistStatus {
  WDIST_STATUS_OK = 0,
  WDIST_STATUS_NULL_ARGUMENT = 1,
  WDIST_STATUS_INVALID_UTF8 = 2,
  WDIST_STATUS_UNKNOWN_FAMILY = 3,
  WDIST_STATUS_BAD_PARAMS = 4,
  WDIST_STATUS_INDEX_OUT_OF_RANGE = 5,
  WDIST_STATUS_BUFFER_TOO_SMALL = 6,
  WDIST_STATUS_TRANSFORM_INEXACT = 7,
} WdistStatus;

/**
 * Opaque weight-distribution handle.
 */
typedef struct WdistDistribution WdistDistribution;

/**
 * Log-concavity report with plain scalar fields.
 */
typedef struct WdistGapReport {
  /**
   * Number of strict log-concavity failures among the nonzero counts.
   */
  uint64_t gap_count;
  /**
   * 1 when gap_count is 0.
   */
  int32_t log_concave;
  int32_t unimodal;
  /**
   * Index of the first maximum within the nonzero subsequence.
   */
  uint64_t peak_index;
} WdistGapReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Closed-form weight distribution of a named family. Unused parameters
 * must be passed as -1. On success writes a new handle to `out`.
 */
enum WdistStatus wdist_family(const char *name,
                              int64_t n,
                              int64_t k,
                              int64_t m,
                              int64_t q,
                              struct WdistDistribution **out);

void wdist_distribution_free(struct WdistDistribution *dist);

/**
 * Code length n; the distribution has n + 1 counts, indexed 0..=n.
 */
enum WdistStatus wdist_distribution_length(const struct WdistDistribution *dist, uint64_t *out);

enum WdistStatus wdist_distribution_dimension(const struct WdistDistribution *dist, uint64_t *out);

enum WdistStatus wdist_distribution_field_size(const struct WdistDistribution *dist, uint64_t *out);

/**
 * Writes the count A_weight as a NUL-terminated decimal string into the
 * caller's buffer. `buf_len` is the buffer capacity in bytes. Returns
 * BufferTooSmall without writing when the string (plus NUL) does not fit.
 */
enum WdistStatus wdist_distribution_count(const struct WdistDistribution *dist,
                                          uint64_t weight,
                                          char *buf,
                                          uintptr_t buf_len);

/**
 * MacWilliams transform; writes a new handle holding the dual
 * distribution. Fails with TransformInexact when the input is not a
 * valid weight distribution over its stated field.
 */
enum WdistStatus wdist_macwilliams(const struct WdistDistribution *dist,
                                   struct WdistDistribution **out);

/**
 * Log-concavity report over the nonzero subsequence.
 */
enum WdistStatus wdist_gap_report(const struct WdistDistribution *dist, struct WdistGapReport *out);

/**
 * Log-concavity verdict for the [n, k] MDS distribution over GF(q):
 * writes 1 for log-concave, 0 otherwise.
 */
enum WdistStatus wdist_mds_log_concave(uint64_t n, uint64_t k, uint64_t q, int32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WDIST_H */
