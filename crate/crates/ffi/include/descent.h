#ifndef DESCENT_H
#define DESCENT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DescentRepType {
  DESCENT_REP_TYPE_FINITE = 0,
  DESCENT_REP_TYPE_TAME = 1,
  DESCENT_REP_TYPE_WILD = 2,
} DescentRepType;

typedef enum DescentRoute {
  DESCENT_ROUTE_SEPARATED_QUIVER_EXACT = 0,
  DESCENT_ROUTE_PATH_ALGEBRA = 1,
  DESCENT_ROUTE_WILD_QUOTIENT = 2,
  // No certificate; the verdict is the lookup value.
  DESCENT_ROUTE_LOOKUP = 3,
} DescentRoute;

typedef enum DescentStatus {
  DESCENT_STATUS_OK = 0,
  DESCENT_STATUS_OUT_OF_SCOPE = 2,
  DESCENT_STATUS_BUDGET_EXCEEDED = 3,
  DESCENT_STATUS_INVALID_ARGUMENT = 64,
  DESCENT_STATUS_INCONSISTENCY = 1,
  DESCENT_STATUS_IO = 74,
  DESCENT_STATUS_NULL_POINTER = 100,
  DESCENT_STATUS_PANIC = 101,
} DescentStatus;

// Opaque descent algebra.
typedef struct DescentAlgebraHandle DescentAlgebraHandle;

// Opaque quiver.
typedef struct DescentQuiverHandle DescentQuiverHandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread; empty after success.
// The pointer stays valid until the next call into this library.
const char *descent_last_error(void);

// Build the descent algebra of the group with family letter `family`
// (`'A'`, `'B'`, `'D'`, `'E'`, `'F'`, `'H'`, `'I'`) and parameter `param`
// (the rank, or the bond label for `'I'`).
//
// # Safety
// `out` must be a valid pointer to writable storage for a handle pointer.
enum DescentStatus descent_algebra_new(char family,
                                       uint32_t param,
                                       bool allow_large,
                                       struct DescentAlgebraHandle **out);

// # Safety
// `handle` must come from [`descent_algebra_new`] and not be used afterwards.
void descent_algebra_free(struct DescentAlgebraHandle *handle);

// Dimension of the algebra (number of subsets of the generators), 0 for null.
//
// # Safety
// `handle` must be null or a live algebra handle.
uintptr_t descent_algebra_dim(const struct DescentAlgebraHandle *handle);

// Number of conjugacy classes of parabolic subgroups, 0 for null.
//
// # Safety
// `handle` must be null or a live algebra handle.
uintptr_t descent_algebra_class_count(const struct DescentAlgebraHandle *handle);

// Ext-quiver in characteristic `p` (0 or a prime).
//
// # Safety
// `handle` must be a live algebra handle and `out` writable.
enum DescentStatus descent_ext_quiver(const struct DescentAlgebraHandle *handle,
                                      uint64_t p,
                                      struct DescentQuiverHandle **out);

// # Safety
// `handle` must come from [`descent_ext_quiver`] and not be used afterwards.
void descent_quiver_free(struct DescentQuiverHandle *handle);

// Number of vertices, 0 for null.
//
// # Safety
// `handle` must be null or a live quiver handle.
uintptr_t descent_quiver_vertex_count(const struct DescentQuiverHandle *handle);

// Total number of arrows, 0 for null.
//
// # Safety
// `handle` must be null or a live quiver handle.
uint64_t descent_quiver_arrow_count(const struct DescentQuiverHandle *handle);

// Number of arrows from vertex `from` to vertex `to` (0-based).
//
// # Safety
// `handle` must be a live quiver handle and `out` writable.
enum DescentStatus descent_quiver_arrows(const struct DescentQuiverHandle *handle,
                                         uintptr_t from,
                                         uintptr_t to,
                                         uint32_t *out);

// Representation type in characteristic `p`, with the route that certifies
// it or [`DescentRoute::Lookup`] when none applies. A certificate that
// contradicts the lookup is reported as an inconsistency.
//
// # Safety
// `handle` must be a live algebra handle; `verdict` and `route` writable.
enum DescentStatus descent_classify(const struct DescentAlgebraHandle *handle,
                                    uint64_t p,
                                    enum DescentRepType *verdict,
                                    enum DescentRoute *route);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DESCENT_H */
