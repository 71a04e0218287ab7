#ifndef TRD_H
#define TRD_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result code of every fallible call.
 */
typedef enum TrdStatus {
  TRD_STATUS_OK = 0,
  TRD_STATUS_NULL_POINTER = 1,
  TRD_STATUS_INVALID_UTF8 = 2,
  TRD_STATUS_INPUT = 3,
  TRD_STATUS_PARSE = 4,
  TRD_STATUS_HYPOTHESIS = 5,
  TRD_STATUS_PRECONDITION = 6,
  TRD_STATUS_SIZE = 7,
  TRD_STATUS_TIMEOUT = 8,
  TRD_STATUS_INTERNAL = 9,
  TRD_STATUS_PANIC = 10,
} TrdStatus;

/*
 Opaque graph handle.
 */
typedef struct TrdGraph TrdGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread, or null. Valid until
 the next call into this library on the same thread.
 */
const char *trd_last_error_message(void);

/*
 Parses a graph6 string.

 # Safety
 `text` must be a nul-terminated string and `out` a writable pointer.
 */
enum TrdStatus trd_graph_from_graph6(const char *text, struct TrdGraph **out);

/*
 Builds a graph from family shorthand such as `K3`, `C4`, `K2,3` or
 `prismC3`.

 # Safety
 `text` must be a nul-terminated string and `out` a writable pointer.
 */
enum TrdStatus trd_graph_from_family(const char *text, struct TrdGraph **out);

/*
 Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 `edges` (`2 * edge_count` entries).

 # Safety
 `edges` must point to `2 * edge_count` readable values (it may be null
 when `edge_count` is 0) and `out` must be writable.
 */
enum TrdStatus trd_graph_from_edges(size_t n,
                                    const size_t *edges,
                                    size_t edge_count,
                                    struct TrdGraph **out);

/*
 Releases a graph. Null is ignored.

 # Safety
 `g` must come from this library and not be used afterwards.
 */
void trd_graph_free(struct TrdGraph *g);

/*
 Number of vertices, or 0 for null.

 # Safety
 `g` must be null or a live handle.
 */
size_t trd_graph_order(const struct TrdGraph *g);

/*
 graph6 encoding; release the result with `trd_string_free`.

 # Safety
 `g` must be a live handle and `out` writable.
 */
enum TrdStatus trd_graph_to_graph6(const struct TrdGraph *g, char **out);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must come from this library and not be used afterwards.
 */
void trd_string_free(char *s);

/*
 Direct product `G × H`; vertex `(g, h)` gets id `g * |H| + h`.

 # Safety
 `g`, `h` must be live handles and `out` writable.
 */
enum TrdStatus trd_direct_product(const struct TrdGraph *g,
                                  const struct TrdGraph *h,
                                  struct TrdGraph **out);

/*
 Exact `γ_tR`. A non-positive `budget_secs` means no time limit. When
 `labels` is non-null it receives the witness (one byte per vertex).
 With `max_v2` the witness maximises the number of 2-labels.

 # Safety
 `g` must be a live handle, `value` writable, and `labels` null or
 writable for `trd_graph_order(g)` bytes.
 */
enum TrdStatus trd_gamma_tr(const struct TrdGraph *g,
                            double budget_secs,
                            bool max_v2,
                            uint32_t *value,
                            uint8_t *labels);

/*
 Total domination number `γ_t`.

 # Safety
 `g` must be a live handle and `value` writable.
 */
enum TrdStatus trd_gamma_t(const struct TrdGraph *g, uint32_t *value);

/*
 Packing number `ρ`.

 # Safety
 `g` must be a live handle and `value` writable.
 */
enum TrdStatus trd_rho(const struct TrdGraph *g, uint32_t *value);

/*
 Open packing number `ρ_o`.

 # Safety
 `g` must be a live handle and `value` writable.
 */
enum TrdStatus trd_rho_o(const struct TrdGraph *g, uint32_t *value);

/*
 Small-value classification of `G × H`. `value` receives the decided
 value, or 0 when the product is not among the small cases. When `json`
 is non-null it receives the full verdict (free with `trd_string_free`).

 # Safety
 `g`, `h` must be live handles, `value` writable, `json` null or writable.
 */
enum TrdStatus trd_classify(const struct TrdGraph *g,
                            const struct TrdGraph *h,
                            uint32_t *value,
                            char **json);

/*
 Every bound on `γ_tR(G × H)` as JSON, optionally with the exact value.

 # Safety
 `g`, `h` must be live handles and `out` writable.
 */
enum TrdStatus trd_pair_report_json(const struct TrdGraph *g,
                                    const struct TrdGraph *h,
                                    bool exact,
                                    double budget_secs,
                                    char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRD_H */
