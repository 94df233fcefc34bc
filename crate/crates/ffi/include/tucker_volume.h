#ifndef TUCKER_VOLUME_H
#define TUCKER_VOLUME_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TvStatus {
  TV_STATUS_OK = 0,
  // The call succeeded but at least one check failed.
  TV_STATUS_CHECK_FAILED = 1,
  TV_STATUS_INVALID_INPUT = 2,
  TV_STATUS_NULL_POINTER = 3,
  // A panic was caught at the boundary.
  TV_STATUS_INTERNAL = 4,
} TvStatus;

typedef enum TvScheme {
  TV_SCHEME_BARYCENTRIC = 0,
  TV_SCHEME_EDGE_MIDPOINT = 1,
} TvScheme;

typedef enum TvMode {
  TV_MODE_TUCKER = 0,
  TV_MODE_SPERNER = 1,
} TvMode;

typedef enum TvEnclosure {
  TV_ENCLOSURE_SHELL = 0,
  TV_ENCLOSURE_SQUARE2D = 1,
} TvEnclosure;

// A labeled triangulation.
typedef struct TvInstance TvInstance;

// The outcome of checking an instance.
typedef struct TvReport TvReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. The pointer
// stays valid until the next call into this library on the same thread.
const char *tv_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *tv_version(void);

// # Safety
// `s` must be NULL or a string returned by this library, freed at most once.
void tv_string_free(char *s);

// Parses an instance file from JSON.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum TvStatus tv_instance_from_json(const char *json, struct TvInstance **out);

// Generates a random instance, as `tucker-volume gen` does with uniform
// Tucker labels.
//
// # Safety
// `out` must be writable.
enum TvStatus tv_instance_generate(uint32_t dim,
                                   uint64_t seed,
                                   uint32_t rounds,
                                   enum TvScheme scheme,
                                   enum TvMode mode,
                                   struct TvInstance **out);

// # Safety
// `inst` must be a live handle; `out` must be writable.
enum TvStatus tv_instance_to_json(const struct TvInstance *inst, char **out);

// # Safety
// `inst` must be a live handle; `out` must be writable.
enum TvStatus tv_instance_dimension(const struct TvInstance *inst, uint32_t *out);

// # Safety
// `inst` must be NULL or a handle from this library, freed at most once.
void tv_instance_free(struct TvInstance *inst);

// Runs every check. A report is written to `out` whenever the status is
// `Ok` or `CheckFailed`.
//
// # Safety
// `inst` must be a live handle; `out` must be writable.
enum TvStatus tv_check(const struct TvInstance *inst,
                       enum TvEnclosure enclosure,
                       struct TvReport **out);

// 1 if no check failed, 0 otherwise (including NULL).
//
// # Safety
// `report` must be NULL or a live handle.
int32_t tv_report_passed(const struct TvReport *report);

// # Safety
// `report` must be NULL or a live handle.
size_t tv_report_complementary_edge_count(const struct TvReport *report);

// Degree of the boundary map; `InvalidInput` when it was not computed.
//
// # Safety
// `report` must be a live handle; `out` must be writable.
enum TvStatus tv_report_degree(const struct TvReport *report, int64_t *out);

// # Safety
// `report` must be a live handle; `out` must be writable.
enum TvStatus tv_report_to_json(const struct TvReport *report, char **out);

// # Safety
// `report` must be NULL or a handle from this library, freed at most once.
void tv_report_free(struct TvReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TUCKER_VOLUME_H */
