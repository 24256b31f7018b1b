#ifndef PROJINDEX_H
#define PROJINDEX_H

/* This file is generated by cbindgen from projindex-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum ProjindexStatus {
  /**
   * Success.
   */
  ProjindexStatus_Ok = 0,
  /**
   * Malformed or semantically invalid input.
   */
  ProjindexStatus_InputError = 1,
  /**
   * The computation ran but the verification did not pass.
   */
  ProjindexStatus_VerifyFailed = 2,
  /**
   * A required pointer argument was null.
   */
  ProjindexStatus_NullPointer = 3,
  /**
   * A string argument was not valid UTF-8.
   */
  ProjindexStatus_InvalidUtf8 = 4,
  /**
   * Unexpected internal failure.
   */
  ProjindexStatus_InternalError = 5,
} ProjindexStatus;

/**
 * Opaque handle to a validated homogeneous map.
 */
typedef struct ProjindexMap ProjindexMap;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread. The pointer
 * stays valid until the next projindex call on the same thread.
 */
const char *projindex_last_error_message(void);

/**
 * Release a string returned by this library.
 *
 * # Safety
 * `s` must have been returned by a projindex function and not freed before.
 */
void projindex_string_free(char *s);

/**
 * Parse a map from JSON `{"n": 2, "components": ["z1*z2", ...]}` and hand
 * back an owned handle (release with [`projindex_map_free`]).
 *
 * # Safety
 * `json` must be a valid NUL-terminated string; `out` must be non-null.
 */
enum ProjindexStatus projindex_map_parse_json(const char *json, struct ProjindexMap **out);

/**
 * Release a map handle.
 *
 * # Safety
 * `map` must come from [`projindex_map_parse_json`] and not be used after.
 */
void projindex_map_free(struct ProjindexMap *map);

/**
 * Projective dimension n of the map's source, or -1 on null.
 *
 * # Safety
 * `map` must be a live handle or null.
 */
int projindex_map_dim(const struct ProjindexMap *map);

/**
 * Common degree nu+1 of the components, or -1 on null.
 *
 * # Safety
 * `map` must be a live handle or null.
 */
int projindex_map_degree(const struct ProjindexMap *map);

/**
 * Classify a point; writes one of "FixedPoint", "IndeterminacyPoint",
 * "RegularNonFixed".
 *
 * # Safety
 * `map` must be a live handle; strings as in [`projindex_map_parse_json`].
 */
enum ProjindexStatus projindex_classify(const struct ProjindexMap *map,
                                        const char *point_csv,
                                        char **out_class);

/**
 * Local multiplicity of a singular point (dimension of the local quotient).
 *
 * # Safety
 * As for [`projindex_classify`]; `out_mult` must be non-null.
 */
enum ProjindexStatus projindex_multiplicity(const struct ProjindexMap *map,
                                            const char *point_csv,
                                            int *out_mult);

/**
 * First index residue at a singular point, as a reduced "p/q" string.
 *
 * # Safety
 * As for [`projindex_classify`].
 */
enum ProjindexStatus projindex_residue1(const struct ProjindexMap *map,
                                        const char *point_csv,
                                        char **out_value);

/**
 * Second index residue for the symmetric polynomial `phi` (n variables,
 * degree n; "e1^2" or "z1^2+z2^2" style).
 *
 * # Safety
 * As for [`projindex_classify`].
 */
enum ProjindexStatus projindex_residue2(const struct ProjindexMap *map,
                                        const char *point_csv,
                                        const char *phi,
                                        char **out_value);

/**
 * Third index residue for the symmetric polynomial `psi` (n+1 variables,
 * degree n; requires map degree >= 3).
 *
 * # Safety
 * As for [`projindex_classify`].
 */
enum ProjindexStatus projindex_residue3(const struct ProjindexMap *map,
                                        const char *point_csv,
                                        const char *psi,
                                        char **out_value);

/**
 * Run a verification over a JSON point list `[["1","0","0"], ...]`.
 * `which` is one of "1i", "1ii", "1iii", "ueda", "ueda-poly", "census";
 * `phi`/`psi` may be null when unused. Writes the full report JSON and
 * returns Ok when the verification passed, VerifyFailed when it ran but did
 * not pass.
 *
 * # Safety
 * As for [`projindex_classify`]; `points_json` and `out_report_json` must
 * be non-null.
 */
enum ProjindexStatus projindex_verify(const struct ProjindexMap *map,
                                      const char *points_json,
                                      const char *which,
                                      const char *phi,
                                      const char *psi,
                                      char **out_report_json);

/**
 * Exact check of Abel's identity at rational arguments given as "p/q"
 * strings; writes 1 (holds) or 0 into `out_holds`.
 *
 * # Safety
 * String arguments must be valid NUL-terminated strings.
 */
enum ProjindexStatus projindex_abel(int r,
                                    const char *x,
                                    const char *y,
                                    const char *z,
                                    int *out_holds);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PROJINDEX_H */
