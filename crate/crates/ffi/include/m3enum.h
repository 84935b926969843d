#ifndef M3ENUM_H
#define M3ENUM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum M3Sign {
  M3_SIGN_PLUS = 0,
  M3_SIGN_MINUS = 1,
} M3Sign;

typedef enum M3Status {
  M3_STATUS_OK = 0,
  M3_STATUS_NULL_POINTER = 1,
  M3_STATUS_PARSE = 2,
  M3_STATUS_MATH = 3,
  M3_STATUS_BUDGET = 4,
  M3_STATUS_UTF8 = 5,
  /**
   * The requested quantity does not exist, e.g. a map without a threshold.
   */
  M3_STATUS_NOT_FOUND = 6,
  M3_STATUS_OUT_OF_RANGE = 7,
} M3Status;

typedef struct M3Code M3Code;

typedef struct M3Enumerator M3Enumerator;

typedef struct M3Map M3Map;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread. Valid until the next failure.
 */
const char *m3_last_error(void);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `s` must come from this library or be null.
 */
void m3_string_free(char *s);

/**
 * Parses an `n k` header followed by `k` generator rows.
 *
 * # Safety
 * `src` must be a NUL-terminated string and `out` writable.
 */
enum M3Status m3_code_parse(const char *src, struct M3Code **out);

/**
 * # Safety
 * `code` must come from [`m3_code_parse`] or be null.
 */
void m3_code_free(struct M3Code *code);

/**
 * Code length, 0 for null.
 *
 * # Safety
 * `code` must be a live handle or null.
 */
size_t m3_code_length(const struct M3Code *code);

/**
 * # Safety
 * `code` must be a live handle and `out` writable.
 */
enum M3Status m3_code_shorten(const struct M3Code *code, size_t coord, struct M3Code **out);

/**
 * Weight enumerator by enumerating at most `4^budget` codewords.
 *
 * # Safety
 * `code` must be a live handle and `out` writable.
 */
enum M3Status m3_code_enumerator(const struct M3Code *code,
                                 uint32_t budget,
                                 struct M3Enumerator **out);

/**
 * Reads `{"n": .., "coeffs": [..]}`.
 *
 * # Safety
 * `src` must be a NUL-terminated string and `out` writable.
 */
enum M3Status m3_enumerator_from_json(const char *src, struct M3Enumerator **out);

/**
 * JSON with exact coefficients; free with [`m3_string_free`]. Null on null input.
 *
 * # Safety
 * `e` must be a live handle or null.
 */
char *m3_enumerator_to_json(const struct M3Enumerator *e);

/**
 * # Safety
 * `e` must be a live handle or null.
 */
size_t m3_enumerator_degree(const struct M3Enumerator *e);

/**
 * Coefficient of `y^j` as a double.
 *
 * # Safety
 * `e` must be a live handle and `out` writable.
 */
enum M3Status m3_enumerator_coeff(const struct M3Enumerator *e, size_t j, double *out);

/**
 * # Safety
 * `e` must come from this library or be null.
 */
void m3_enumerator_free(struct M3Enumerator *e);

/**
 * Distillation map of an `[[n, 1]]` stabilizer enumerator.
 *
 * # Safety
 * `e` must be a live handle and `out` writable.
 */
enum M3Status m3_map_build(const struct M3Enumerator *e, enum M3Sign sign, struct M3Map **out);

/**
 * # Safety
 * `map` must come from [`m3_map_build`] or be null.
 */
void m3_map_free(struct M3Map *map);

/**
 * Output error rate for input `eps` in `[0, 1/2]`.
 *
 * # Safety
 * `map` must be a live handle and `out` writable.
 */
enum M3Status m3_map_eps_out(const struct M3Map *map, double eps, double *out);

/**
 * Largest attracting fixed point below `ε_max`; `NotFound` when there is none.
 *
 * # Safety
 * `map` must be a live handle and `out` writable.
 */
enum M3Status m3_map_threshold(const struct M3Map *map, double *out);

/**
 * Noise exponent `ν` and leading coefficient of `ε_out ~ c ε^ν`.
 *
 * # Safety
 * `map` must be a live handle; `nu` and `leading` writable.
 */
enum M3Status m3_map_noise_exponent(const struct M3Map *map, uint32_t *nu, double *leading);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* M3ENUM_H */
