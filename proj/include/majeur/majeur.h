/*
 * majeur - majorization-based entropic uncertainty bounds for finite
 * dimensional quantum states.
 *
 * C interface of the shared library. All functions return an mj_status;
 * results are written through out-parameters. Objects are opaque handles
 * created and destroyed through the functions below. Handles are immutable
 * after creation, so sharing them between threads is safe; error detail
 * strings are thread-local.
 */

#ifndef MAJEUR_H
#define MAJEUR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MAJEUR_BUILD)
#    define MAJEUR_API __declspec(dllexport)
#  else
#    define MAJEUR_API __declspec(dllimport)
#  endif
#else
#  define MAJEUR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mj_status {
    MJ_OK = 0,
    MJ_ERR_INVALID_INPUT = 1,      /* malformed values (NaN, negative probability, ...) */
    MJ_ERR_CONTRACT_VIOLATION = 2, /* valid shape but broken contract (non-unitary, ...) */
    MJ_ERR_UNSUPPORTED_ORDER = 3,  /* entropy order alpha outside the supported range */
    MJ_ERR_RESOURCE_LIMIT = 4,     /* dimension beyond the enumeration cap */
    MJ_ERR_INVALID_COMPARISON = 5, /* majorization between vectors of unequal total */
    MJ_ERR_INVALID_ARGUMENT = 6,   /* bad selector name, dimension mismatch, ... */
    MJ_ERR_UNAVAILABLE = 7,        /* requested baseline has no implemented formula */
    MJ_ERR_NULL_ARGUMENT = 8,
    MJ_ERR_INTERNAL = 9
} mj_status;

/* Library version, e.g. "0.1.0". */
MAJEUR_API const char* mj_version(void);

/* Stable machine-readable name for a status code, e.g. "resource-limit". */
MAJEUR_API const char* mj_status_name(mj_status status);

/* Detail message for the most recent failure on the calling thread.
 * Empty string if the last call succeeded. */
MAJEUR_API const char* mj_last_error_message(void);

/*
 * Named tolerances:
 *   "unitarity"     max |U*U - I| accepted for measurement unitaries (1e-10)
 *   "hermiticity"   max |M - M*| accepted for Hermitian inputs (1e-10)
 *   "normalization" |sum - 1| accepted for probability vectors (1e-9)
 *   "slack"         additive slack of majorization and verification checks (1e-9)
 * The environment variable MAJEUR_TOLERANCE, when set, overrides "slack"
 * at startup.
 */
MAJEUR_API mj_status mj_set_tolerance(const char* name, double value);
MAJEUR_API mj_status mj_get_tolerance(const char* name, double* out);

/* ---- complex matrices -------------------------------------------------- */

typedef struct mj_matrix mj_matrix;

/* Dense row-major complex matrix from interleaved (re, im) doubles,
 * 2*rows*cols values in total. */
MAJEUR_API mj_status mj_matrix_create(size_t rows, size_t cols,
                                      const double* interleaved,
                                      mj_matrix** out);
MAJEUR_API mj_status mj_matrix_identity(size_t n, mj_matrix** out);
MAJEUR_API mj_status mj_matrix_fourier(size_t n, mj_matrix** out);
MAJEUR_API mj_status mj_matrix_hadamard2(mj_matrix** out);
/* Fixed 3x3 orthogonal matrix used by the qutrit examples:
 * rows (sqrt2,sqrt2,sqrt2), (sqrt3,0,-sqrt3), (1,-2,1), all over sqrt6. */
MAJEUR_API mj_status mj_matrix_o3(mj_matrix** out);
/* Planar rotation ((cos t, sin t), (-sin t, cos t)). */
MAJEUR_API mj_status mj_matrix_rotation(double theta, mj_matrix** out);
/* Haar-distributed random unitary; deterministic for a fixed seed. */
MAJEUR_API mj_status mj_matrix_haar(size_t n, uint64_t seed, mj_matrix** out);

MAJEUR_API size_t mj_matrix_rows(const mj_matrix* m);
MAJEUR_API size_t mj_matrix_cols(const mj_matrix* m);
/* Copies entries back as interleaved (re, im) doubles, row-major. */
MAJEUR_API mj_status mj_matrix_data(const mj_matrix* m, double* interleaved_out);
MAJEUR_API mj_status mj_matrix_is_unitary(const mj_matrix* m, double tolerance,
                                          int* out);
MAJEUR_API void mj_matrix_free(mj_matrix* m);

/* ---- spectra ----------------------------------------------------------- */

typedef struct mj_spectrum mj_spectrum;

/* Probability spectrum (eigenvalues / Schmidt coefficients). Values are
 * clamped at zero, sorted non-increasing, and must sum to 1 within the
 * normalization tolerance. With renormalize != 0, a sum within 1e-6 of 1
 * is rescaled instead of rejected. */
MAJEUR_API mj_status mj_spectrum_create(const double* values, size_t len,
                                        int renormalize, mj_spectrum** out);
MAJEUR_API size_t mj_spectrum_size(const mj_spectrum* s);
MAJEUR_API mj_status mj_spectrum_values(const mj_spectrum* s, double* out);
MAJEUR_API void mj_spectrum_free(mj_spectrum* s);

/* ---- submatrix norm coefficients --------------------------------------- */

typedef struct mj_subcoeffs mj_subcoeffs;

/* Exhaustive maxima s_1 <= ... <= s_N of operator norms over all
 * submatrices with rows+cols = k+1 of a unitary. max_dim caps the
 * enumeration (0 selects the default cap of 10); larger inputs fail with
 * MJ_ERR_RESOURCE_LIMIT. */
MAJEUR_API mj_status mj_subcoeffs_compute(const mj_matrix* u, size_t max_dim,
                                          mj_subcoeffs** out);
MAJEUR_API size_t mj_subcoeffs_dim(const mj_subcoeffs* s);
/* s has dim entries; w holds the consecutive differences
 * (s_1, s_2 - s_1, ...), also dim entries. */
MAJEUR_API mj_status mj_subcoeffs_values(const mj_subcoeffs* s, double* s_out);
MAJEUR_API mj_status mj_subcoeffs_w(const mj_subcoeffs* s, double* w_out);
MAJEUR_API void mj_subcoeffs_free(mj_subcoeffs* s);

/* ---- uncertainty bounds ------------------------------------------------ */

/* Majorant of p (+) q for a state with the given spectrum; out receives
 * 2*dim values. The spectrum may be shorter than dim; it is zero-padded. */
MAJEUR_API mj_status mj_w_lambda(const mj_subcoeffs* s, const mj_spectrum* lam,
                                 double* out);

/* Lower bounds on H(p) + H(q) (nats). Renyi requires 0 <= alpha < 1,
 * Tsallis alpha >= 0. */
MAJEUR_API mj_status mj_bound_shannon(const mj_subcoeffs* s,
                                      const mj_spectrum* lam, double* out);
MAJEUR_API mj_status mj_bound_renyi(const mj_subcoeffs* s,
                                    const mj_spectrum* lam, double alpha,
                                    double* out);
MAJEUR_API mj_status mj_bound_tsallis(const mj_subcoeffs* s,
                                      const mj_spectrum* lam, double alpha,
                                      double* out);

/* Lower bound on H(X|B) + H(Y|B), equal to twice the mutual information of
 * the associated joint distribution; always >= 0. */
MAJEUR_API mj_status mj_bound_conditional(const mj_subcoeffs* s,
                                          const mj_spectrum* lam, double* out);

/* Comparison baselines, clamped at zero. Names: "mu-conditional", "berta",
 * "directsum". The reserved names "kljr" and "kpp" report
 * MJ_ERR_UNAVAILABLE. note_out (optional) receives a static provenance
 * string for the baseline. */
MAJEUR_API mj_status mj_comparison_bound(const mj_subcoeffs* s,
                                         const mj_spectrum* lam,
                                         const char* name, double* out,
                                         const char** note_out);

/* ---- verification suites ----------------------------------------------- */

typedef struct mj_verify_report {
    char claim_id[64];
    uint64_t trials;
    uint64_t violations;
    /* Largest observed (deviation - tolerance) over all checks; a positive
     * value is a violation, a negative value is the surviving margin. */
    double worst_slack;
    uint64_t seed;
} mj_verify_report;

/* Randomized brute-force suites: "majorization" (main majorization
 * relation), "lemma" (scalar-product bound and the eigenvalue identity),
 * "identities" (entropy/mutual-information identities of the joint
 * distribution), "ladder" (exact partial-sum maxima vs. the closed-form
 * ladder). n is the Hilbert-space dimension, 2..6. */
MAJEUR_API mj_status mj_verify(const char* suite, size_t n, uint64_t trials,
                               uint64_t seed, mj_verify_report* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MAJEUR_H */
