#ifndef BRTKNOT_H
#define BRTKNOT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every entry point.
 */
typedef enum BrtStatus {
  BRT_STATUS_OK = 0,
  /**
   * Malformed PD code, braid word or ribbon data.
   */
  BRT_STATUS_PARSE_ERROR = 1,
  /**
   * Disconnected diagram, size cap exceeded or similar.
   */
  BRT_STATUS_PRECONDITION = 2,
  /**
   * An internal consistency check failed.
   */
  BRT_STATUS_POSTCONDITION = 3,
  BRT_STATUS_NULL_POINTER = 4,
  BRT_STATUS_INVALID_UTF8 = 5,
  BRT_STATUS_PANIC = 6,
} BrtStatus;

/**
 * BRT evaluation strategy.
 */
typedef enum BrtMethod {
  BRT_METHOD_RECURSIVE = 0,
  BRT_METHOD_SUBGRAPH = 1,
  BRT_METHOD_TREE = 2,
} BrtMethod;

/**
 * Opaque diagram handle.
 */
typedef struct BrtDiagram BrtDiagram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a PD code such as `"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"`.
 *
 * # Safety
 * `pd` must be a NUL-terminated string and `out` a writable pointer.
 */
enum BrtStatus brt_diagram_from_pd(const char *pd, struct BrtDiagram **out);

/**
 * Closes a braid word such as `"1 -2 1 -2"`; `strands` of 0 infers the count.
 *
 * # Safety
 * `word` must be a NUL-terminated string and `out` a writable pointer.
 */
enum BrtStatus brt_diagram_from_braid(const char *word, size_t strands, struct BrtDiagram **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `d` must come from this library and not have been freed already.
 */
void brt_diagram_free(struct BrtDiagram *d);

/**
 * # Safety
 * `d` must be a live handle and `out` a writable pointer.
 */
enum BrtStatus brt_diagram_crossings(const struct BrtDiagram *d, size_t *out);

/**
 * # Safety
 * `d` must be a live handle and `out` a writable pointer.
 */
enum BrtStatus brt_diagram_writhe(const struct BrtDiagram *d, int64_t *out);

/**
 * Kauffman bracket as JSON; `statesum` non-zero selects the state-sum oracle.
 *
 * # Safety
 * `d` must be a live handle and `out` a writable pointer.
 */
enum BrtStatus brt_bracket_json(const struct BrtDiagram *d, int32_t statesum, char **out);

/**
 * Jones polynomial as JSON (exponents in quarters of a power of t).
 *
 * # Safety
 * `d` must be a live handle and `out` a writable pointer.
 */
enum BrtStatus brt_jones_json(const struct BrtDiagram *d, char **out);

/**
 * BRT polynomial of the all-A ribbon graph as JSON; `method` is one of
 * the `BrtMethod` values.
 *
 * # Safety
 * `d` must be a live handle and `out` a writable pointer.
 */
enum BrtStatus brt_polynomial_json(const struct BrtDiagram *d, uint32_t method, char **out);

/**
 * Jones polynomial, adequacy, span bounds and genus data in one record.
 *
 * # Safety
 * `d` must be a live handle and `out` a writable pointer.
 */
enum BrtStatus brt_analysis_json(const struct BrtDiagram *d, char **out);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void brt_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null after a
 * success. Valid until the next call into the library on this thread.
 */
const char *brt_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BRTKNOT_H */
