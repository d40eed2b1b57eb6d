/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef ASYMMETRY_H
#define ASYMMETRY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible function.
typedef enum AsymStatus {
  ASYM_STATUS_OK = 0,
  ASYM_STATUS_NULL_POINTER = 1,
  ASYM_STATUS_INVALID_ARGUMENT = 2,
  ASYM_STATUS_INVALID_STATE = 3,
  ASYM_STATUS_DIMENSION_MISMATCH = 4,
  ASYM_STATUS_GROUP_MISMATCH = 5,
  ASYM_STATUS_NOT_TRACE_PRESERVING = 6,
  // The requested quantity is infinite (Cramér-Rao value of a symmetric state).
  ASYM_STATUS_INFINITE = 7,
  ASYM_STATUS_NUMERICAL = 8,
  ASYM_STATUS_PANIC = 9,
} AsymStatus;

// A CPTP map given by Kraus operators.
typedef struct AsymChannel AsymChannel;

// A unitary group representation.
typedef struct AsymRep AsymRep;

// A validated density operator.
typedef struct AsymState AsymState;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *asym_version(void);

// Message for the last failure on this thread, or NULL if none. The pointer
// stays valid until the next failing call on the same thread.
const char *asym_last_error_message(void);

// Builds a state from `dim * dim` interleaved complex entries (row-major).
//
// # Safety
// `data` must point to `2 * dim * dim` doubles; `out` must be writable.
enum AsymStatus asym_state_new(size_t dim, const double *data, struct AsymState **out);

// Builds the pure state `|psi><psi|` from `dim` interleaved amplitudes.
// The vector must have unit norm.
//
// # Safety
// `amplitudes` must point to `2 * dim` doubles; `out` must be writable.
enum AsymStatus asym_state_pure(size_t dim, const double *amplitudes, struct AsymState **out);

// # Safety
// `state` must come from this library and not be used afterwards; NULL is ignored.
void asym_state_free(struct AsymState *state);

// Dimension of the state, or 0 for NULL.
//
// # Safety
// `state` must be NULL or a live handle.
size_t asym_state_dim(const struct AsymState *state);

// Copies the `dim * dim` interleaved entries into `out`.
//
// # Safety
// `out` must have room for `2 * dim * dim` doubles.
enum AsymStatus asym_state_matrix(const struct AsymState *state, double *out);

// Spin-j representation of SU(2) with `twice_j = 2j`.
//
// # Safety
// `out` must be writable.
enum AsymStatus asym_rep_spin(uint32_t twice_j, struct AsymRep **out);

// U(1) representation with number operator `diag(spectrum)`.
//
// # Safety
// `spectrum` must point to `len` integers; `out` must be writable.
enum AsymStatus asym_rep_u1(const int64_t *spectrum, size_t len, struct AsymRep **out);

// Left regular representation of the cyclic group Z_n.
//
// # Safety
// `out` must be writable.
enum AsymStatus asym_rep_regular_cyclic(size_t n, struct AsymRep **out);

// Z_n acting by the phases `exp(2 pi i k c / n)` with charges `c`.
//
// # Safety
// `charges` must point to `len` integers; `out` must be writable.
enum AsymStatus asym_rep_cyclic_phase(size_t n,
                                      const int64_t *charges,
                                      size_t len,
                                      struct AsymRep **out);

// Tensor product of two representations of the same group.
//
// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum AsymStatus asym_rep_tensor(const struct AsymRep *a,
                                const struct AsymRep *b,
                                struct AsymRep **out);

// # Safety
// `rep` must come from this library and not be used afterwards; NULL is ignored.
void asym_rep_free(struct AsymRep *rep);

// Dimension of the representation space, or 0 for NULL.
//
// # Safety
// `rep` must be NULL or a live handle.
size_t asym_rep_dim(const struct AsymRep *rep);

// Von Neumann entropy in bits.
//
// # Safety
// Handles must be live; `out` must be writable.
enum AsymStatus asym_entropy(const struct AsymState *state, double *out);

// Holevo asymmetry under the uniform (Haar) twirl, in bits.
//
// # Safety
// Handles must be live; `out` must be writable.
enum AsymStatus asym_holevo_uniform(const struct AsymState *state,
                                    const struct AsymRep *rep,
                                    double *out);

// Trace norm of `[rho, L]` for the named generator (`x`, `y`, `z` for
// SU(2); `n` for U(1)).
//
// # Safety
// Handles must be live; `generator` a NUL-terminated string; `out` writable.
enum AsymStatus asym_commutator(const struct AsymState *state,
                                const struct AsymRep *rep,
                                const char *generator,
                                double *out);

// Wigner-Yanase-Dyson skew information of order `s`.
//
// # Safety
// Handles must be live; `generator` a NUL-terminated string; `out` writable.
enum AsymStatus asym_skew(const struct AsymState *state,
                          const struct AsymRep *rep,
                          const char *generator,
                          double s,
                          double *out);

// Builds a channel from `count` Kraus operators, each `output_dim x
// input_dim`, stored consecutively as interleaved complex entries.
//
// # Safety
// `data` must point to `2 * count * output_dim * input_dim` doubles; `out` writable.
enum AsymStatus asym_channel_from_kraus(size_t count,
                                        size_t output_dim,
                                        size_t input_dim,
                                        const double *data,
                                        struct AsymChannel **out);

// # Safety
// `channel` must come from this library and not be used afterwards; NULL is ignored.
void asym_channel_free(struct AsymChannel *channel);

// Applies the channel; the result is a new state handle.
//
// # Safety
// Handles must be live; `out` must be writable.
enum AsymStatus asym_channel_apply(const struct AsymChannel *channel,
                                   const struct AsymState *state,
                                   struct AsymState **out);

// Tests whether the channel commutes with the group action. Writes the
// verdict and the largest deviation found.
//
// # Safety
// Handles must be live; `symmetric` and `max_deviation` writable.
enum AsymStatus asym_channel_is_symmetric(const struct AsymChannel *channel,
                                          const struct AsymRep *rep,
                                          double tol,
                                          bool *symmetric,
                                          double *max_deviation);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ASYMMETRY_H */
