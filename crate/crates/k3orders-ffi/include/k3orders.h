#ifndef K3ORDERS_H
#define K3ORDERS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum K3Status {
  K3_OK = 0,
  K3_NULL_POINTER = 1,
  K3_INVALID_ARGUMENT = 2,
  K3_UNSUPPORTED = 3,
  K3_INTERNAL = 4,
} K3Status;

/**
 * Finite automorphism orders in one characteristic.
 */
typedef struct K3OrderSet K3OrderSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version, a static string that must not be freed.
 */
const char *k3_version(void);

/**
 * Writes whether an automorphism of order `order` exists in `characteristic`.
 *
 * Wild orders are answered for characteristics 5, 7 and 11 only.
 */
enum K3Status k3_classify_order(uint64_t order, uint64_t characteristic, bool *out_feasible);

/**
 * Allocates the set of orders in `characteristic`; free with [`k3_order_set_free`].
 */
enum K3Status k3_order_set_new(uint64_t characteristic, struct K3OrderSet **out);

/**
 * Number of orders in the set; 0 for NULL.
 */
uintptr_t k3_order_set_len(const struct K3OrderSet *set);

/**
 * The `index`-th order in increasing order.
 */
enum K3Status k3_order_set_get(const struct K3OrderSet *set, uintptr_t index, uint64_t *out);

void k3_order_set_free(struct K3OrderSet *set);

/**
 * `β_p`, the largest divisor `N` of `p + 1` with `N != 60` and `φ(N) <= 20`.
 */
enum K3Status k3_beta(uint64_t p, uint64_t *out);

/**
 * Runs one replay script, or all of them when `lemma` is NULL, and writes
 * the JSON report to `out_json` and whether every assertion passed.
 */
enum K3Status k3_replay_json(const char *lemma, char **out_json, bool *out_passed);

/**
 * Verifies one catalog entry; `out_as_designed` is true when a positive
 * entry passes or a negative control fails where intended.
 */
enum K3Status k3_verify_entry(const char *id, uint64_t characteristic, bool *out_as_designed);

/**
 * Copy of the last error message on this thread, or NULL; free with [`k3_string_free`].
 */
char *k3_last_error(void);

void k3_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* K3ORDERS_H */
