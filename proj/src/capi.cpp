#include "majeur/majeur.h"

#include "bounds.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "oracle.hpp"
#include "states.hpp"
#include "tolerances.hpp"

#include <cmath>
#include <complex>
#include <cstring>
#include <exception>
#include <numbers>
#include <string>

struct mj_matrix {
    majeur::linalg::Matrix m;
};

struct mj_spectrum {
    majeur::states::Spectrum s;
};

struct mj_subcoeffs {
    majeur::bounds::SubCoefficients s;
};

namespace {

thread_local std::string g_last_error;

mj_status to_status(majeur::ErrorCode code) {
    switch (code) {
    case majeur::ErrorCode::invalid_input: return MJ_ERR_INVALID_INPUT;
    case majeur::ErrorCode::contract_violation: return MJ_ERR_CONTRACT_VIOLATION;
    case majeur::ErrorCode::unsupported_order: return MJ_ERR_UNSUPPORTED_ORDER;
    case majeur::ErrorCode::resource_limit: return MJ_ERR_RESOURCE_LIMIT;
    case majeur::ErrorCode::invalid_comparison: return MJ_ERR_INVALID_COMPARISON;
    case majeur::ErrorCode::invalid_argument: return MJ_ERR_INVALID_ARGUMENT;
    case majeur::ErrorCode::unavailable: return MJ_ERR_UNAVAILABLE;
    }
    return MJ_ERR_INTERNAL;
}

template <typename F>
mj_status guarded(F&& body) {
    try {
        body();
        g_last_error.clear();
        return MJ_OK;
    } catch (const majeur::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MJ_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return MJ_ERR_INTERNAL;
    }
}

mj_status fail_null(const char* what) {
    g_last_error = std::string(what) + " must not be null";
    return MJ_ERR_NULL_ARGUMENT;
}

mj_status make_matrix(majeur::linalg::Matrix m, mj_matrix** out) {
    *out = new mj_matrix{std::move(m)};
    return MJ_OK;
}

} // namespace

extern "C" {

const char* mj_version(void) { return "0.1.0"; }

const char* mj_status_name(mj_status status) {
    switch (status) {
    case MJ_OK: return "ok";
    case MJ_ERR_INVALID_INPUT: return "invalid-input";
    case MJ_ERR_CONTRACT_VIOLATION: return "contract-violation";
    case MJ_ERR_UNSUPPORTED_ORDER: return "unsupported-order";
    case MJ_ERR_RESOURCE_LIMIT: return "resource-limit";
    case MJ_ERR_INVALID_COMPARISON: return "invalid-comparison";
    case MJ_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case MJ_ERR_UNAVAILABLE: return "unavailable";
    case MJ_ERR_NULL_ARGUMENT: return "null-argument";
    case MJ_ERR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* mj_last_error_message(void) { return g_last_error.c_str(); }

mj_status mj_set_tolerance(const char* name, double value) {
    if (!name) {
        return fail_null("name");
    }
    return guarded([&] {
        if (!(value > 0.0) || !std::isfinite(value)) {
            majeur::raise(majeur::ErrorCode::invalid_argument,
                          "tolerance must be positive and finite");
        }
        auto& t = majeur::tolerances();
        const std::string key(name);
        if (key == "unitarity") {
            t.unitarity = value;
        } else if (key == "hermiticity") {
            t.hermiticity = value;
        } else if (key == "normalization") {
            t.normalization = value;
        } else if (key == "slack") {
            t.slack = value;
        } else {
            majeur::raise(majeur::ErrorCode::invalid_argument,
                          "unknown tolerance name: " + key);
        }
    });
}

mj_status mj_get_tolerance(const char* name, double* out) {
    if (!name) {
        return fail_null("name");
    }
    if (!out) {
        return fail_null("out");
    }
    return guarded([&] {
        const auto& t = majeur::tolerances();
        const std::string key(name);
        if (key == "unitarity") {
            *out = t.unitarity;
        } else if (key == "hermiticity") {
            *out = t.hermiticity;
        } else if (key == "normalization") {
            *out = t.normalization;
        } else if (key == "slack") {
            *out = t.slack;
        } else {
            majeur::raise(majeur::ErrorCode::invalid_argument,
                          "unknown tolerance name: " + key);
        }
    });
}

mj_status mj_matrix_create(size_t rows, size_t cols, const double* interleaved,
                           mj_matrix** out) {
    if (!interleaved) {
        return fail_null("interleaved");
    }
    if (!out) {
        return fail_null("out");
    }
    return guarded([&] {
        if (rows == 0 || cols == 0) {
            majeur::raise(majeur::ErrorCode::invalid_input,
                          "matrix must have at least one row and column");
        }
        majeur::linalg::Matrix m(static_cast<Eigen::Index>(rows),
                                 static_cast<Eigen::Index>(cols));
        for (size_t r = 0; r < rows; ++r) {
            for (size_t c = 0; c < cols; ++c) {
                const size_t base = 2 * (r * cols + c);
                m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                    std::complex<double>(interleaved[base], interleaved[base + 1]);
            }
        }
        majeur::linalg::check_finite(m);
        make_matrix(std::move(m), out);
    });
}

mj_status mj_matrix_identity(size_t n, mj_matrix** out) {
    if (!out) {
        return fail_null("out");
    }
    return guarded([&] {
        if (n == 0) {
            majeur::raise(majeur::ErrorCode::invalid_input, "dimension must be positive");
        }
        make_matrix(majeur::linalg::Matrix::Identity(static_cast<Eigen::Index>(n),
                                                     static_cast<Eigen::Index>(n)),
                    out);
    });
}

mj_status mj_matrix_fourier(size_t n, mj_matrix** out) {
    if (!out) {
        return fail_null("out");
    }
    return guarded([&] {
        if (n == 0) {
            majeur::raise(majeur::ErrorCode::invalid_input, "dimension must be positive");
        }
        const auto dim = static_cast<Eigen::Index>(n);
        majeur::linalg::Matrix m(dim, dim);
        const double norm = 1.0 / std::sqrt(static_cast<double>(n));
        for (Eigen::Index r = 0; r < dim; ++r) {
            for (Eigen::Index c = 0; c < dim; ++c) {
                const double phase = 2.0 * std::numbers::pi *
                                     static_cast<double>(r) * static_cast<double>(c) /
                                     static_cast<double>(n);
                m(r, c) = std::polar(norm, phase);
            }
        }
        make_matrix(std::move(m), out);
    });
}

mj_status mj_matrix_hadamard2(mj_matrix** out) {
    if (!out) {
        return fail_null("out");
    }
    return guarded([&] {
        const double h = 1.0 / std::sqrt(2.0);
        majeur::linalg::Matrix m(2, 2);
        m << h, h, h, -h;
        make_matrix(std::move(m), out);
    });
}

mj_status mj_matrix_o3(mj_matrix** out) {
    if (!out) {
        return fail_null("out");
    }
    return guarded([&] {
        const double inv_sqrt6 = 1.0 / std::sqrt(6.0);
        const double sqrt2 = std::sqrt(2.0);
        const double sqrt3 = std::sqrt(3.0);
        majeur::linalg::Matrix m(3, 3);
        m << sqrt2, sqrt2, sqrt2,
             sqrt3, 0.0, -sqrt3,
             1.0, -2.0, 1.0;
        m *= inv_sqrt6;
        make_matrix(std::move(m), out);
    });
}

mj_status mj_matrix_rotation(double theta, mj_matrix** out) {
    if (!out) {
        return fail_null("out");
    }
    return guarded([&] {
        if (!std::isfinite(theta)) {
            majeur::raise(majeur::ErrorCode::invalid_input, "rotation angle must be finite");
        }
        majeur::linalg::Matrix m(2, 2);
        m << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
        make_matrix(std::move(m), out);
    });
}

mj_status mj_matrix_haar(size_t n, uint64_t seed, mj_matrix** out) {
    if (!out) {
        return fail_null("out");
    }
    return guarded([&] {
        make_matrix(majeur::linalg::haar_unitary(static_cast<Eigen::Index>(n), seed), out);
    });
}

size_t mj_matrix_rows(const mj_matrix* m) {
    return m ? static_cast<size_t>(m->m.rows()) : 0;
}

size_t mj_matrix_cols(const mj_matrix* m) {
    return m ? static_cast<size_t>(m->m.cols()) : 0;
}

mj_status mj_matrix_data(const mj_matrix* m, double* interleaved_out) {
    if (!m) {
        return fail_null("matrix");
    }
    if (!interleaved_out) {
        return fail_null("interleaved_out");
    }
    return guarded([&] {
        const auto rows = static_cast<size_t>(m->m.rows());
        const auto cols = static_cast<size_t>(m->m.cols());
        for (size_t r = 0; r < rows; ++r) {
            for (size_t c = 0; c < cols; ++c) {
                const auto v = m->m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
                const size_t base = 2 * (r * cols + c);
                interleaved_out[base] = v.real();
                interleaved_out[base + 1] = v.imag();
            }
        }
    });
}

mj_status mj_matrix_is_unitary(const mj_matrix* m, double tolerance, int* out) {
    if (!m) {
        return fail_null("matrix");
    }
    if (!out) {
        return fail_null("out");
    }
    return guarded([&] {
        *out = majeur::linalg::is_unitary(m->m, tolerance) ? 1 : 0;
    });
}

void mj_matrix_free(mj_matrix* m) { delete m; }

mj_status mj_spectrum_create(const double* values, size_t len, int renormalize,
                             mj_spectrum** out) {
    if (!values) {
        return fail_null("values");
    }
    if (!out) {
        return fail_null("out");
    }
    return guarded([&] {
        std::vector<double> v(values, values + len);
        *out = new mj_spectrum{majeur::states::Spectrum(std::move(v), renormalize != 0)};
    });
}

size_t mj_spectrum_size(const mj_spectrum* s) { return s ? s->s.size() : 0; }

mj_status mj_spectrum_values(const mj_spectrum* s, double* out) {
    if (!s) {
        return fail_null("spectrum");
    }
    if (!out) {
        return fail_null("out");
    }
    return guarded([&] {
        const auto& v = s->s.values();
        std::memcpy(out, v.data(), v.size() * sizeof(double));
    });
}

void mj_spectrum_free(mj_spectrum* s) { delete s; }

mj_status mj_subcoeffs_compute(const mj_matrix* u, size_t max_dim, mj_subcoeffs** out) {
    if (!u) {
        return fail_null("matrix");
    }
    if (!out) {
        return fail_null("out");
    }
    return guarded([&] {
        *out = new mj_subcoeffs{majeur::bounds::sub_coefficients(u->m, max_dim)};
    });
}

size_t mj_subcoeffs_dim(const mj_subcoeffs* s) { return s ? s->s.dimension() : 0; }

mj_status mj_subcoeffs_values(const mj_subcoeffs* s, double* s_out) {
    if (!s) {
        return fail_null("subcoeffs");
    }
    if (!s_out) {
        return fail_null("s_out");
    }
    return guarded([&] {
        const auto& v = s->s.values();
        std::memcpy(s_out, v.data(), v.size() * sizeof(double));
    });
}

mj_status mj_subcoeffs_w(const mj_subcoeffs* s, double* w_out) {
    if (!s) {
        return fail_null("subcoeffs");
    }
    if (!w_out) {
        return fail_null("w_out");
    }
    return guarded([&] {
        const auto w = majeur::bounds::w_vector(s->s).values();
        std::memcpy(w_out, w.data(), w.size() * sizeof(double));
    });
}

void mj_subcoeffs_free(mj_subcoeffs* s) { delete s; }

mj_status mj_w_lambda(const mj_subcoeffs* s, const mj_spectrum* lam, double* out) {
    if (!s) {
        return fail_null("subcoeffs");
    }
    if (!lam) {
        return fail_null("spectrum");
    }
    if (!out) {
        return fail_null("out");
    }
    return guarded([&] {
        const auto w = majeur::bounds::w_lambda(s->s, lam->s).values.values();
        std::memcpy(out, w.data(), w.size() * sizeof(double));
    });
}

mj_status mj_bound_shannon(const mj_subcoeffs* s, const mj_spectrum* lam, double* out) {
    if (!s) {
        return fail_null("subcoeffs");
    }
    if (!lam) {
        return fail_null("spectrum");
    }
    if (!out) {
        return fail_null("out");
    }
    return guarded([&] {
        *out = majeur::bounds::shannon_bound(majeur::bounds::w_lambda(s->s, lam->s));
    });
}

mj_status mj_bound_renyi(const mj_subcoeffs* s, const mj_spectrum* lam, double alpha,
                         double* out) {
    if (!s) {
        return fail_null("subcoeffs");
    }
    if (!lam) {
        return fail_null("spectrum");
    }
    if (!out) {
        return fail_null("out");
    }
    return guarded([&] {
        *out = majeur::bounds::renyi_bound(majeur::bounds::w_lambda(s->s, lam->s), alpha);
    });
}

mj_status mj_bound_tsallis(const mj_subcoeffs* s, const mj_spectrum* lam, double alpha,
                           double* out) {
    if (!s) {
        return fail_null("subcoeffs");
    }
    if (!lam) {
        return fail_null("spectrum");
    }
    if (!out) {
        return fail_null("out");
    }
    return guarded([&] {
        *out = majeur::bounds::tsallis_bound(majeur::bounds::w_lambda(s->s, lam->s), alpha);
    });
}

mj_status mj_bound_conditional(const mj_subcoeffs* s, const mj_spectrum* lam, double* out) {
    if (!s) {
        return fail_null("subcoeffs");
    }
    if (!lam) {
        return fail_null("spectrum");
    }
    if (!out) {
        return fail_null("out");
    }
    return guarded([&] {
        *out = majeur::bounds::conditional_bound(lam->s, s->s);
    });
}

mj_status mj_comparison_bound(const mj_subcoeffs* s, const mj_spectrum* lam,
                              const char* name, double* out, const char** note_out) {
    if (!s) {
        return fail_null("subcoeffs");
    }
    if (!lam) {
        return fail_null("spectrum");
    }
    if (!name) {
        return fail_null("name");
    }
    if (!out) {
        return fail_null("out");
    }
    // Notes live in static storage so the pointers stay valid.
    static const std::string kNoteMu =
        "max(0, -2 ln c - 2 H(lambda)), c = largest overlap modulus";
    static const std::string kNoteBerta =
        "externally sourced: max(0, -2 ln c - H(lambda)), the conditional form for a "
        "pure bipartite state";
    static const std::string kNoteDirectsum =
        "max(0, H(W) - 2 H(lambda)) from the pure-state direct-sum relation";
    static const std::string kNoteUnavailable = "unavailable: no formula implemented";
    return guarded([&] {
        const std::string which[] = {std::string(name)};
        const auto values = majeur::bounds::comparison_bounds(lam->s, s->s, which);
        const auto& result = values.front();
        if (!result.value.has_value()) {
            if (note_out) {
                *note_out = kNoteUnavailable.c_str();
            }
            majeur::raise(majeur::ErrorCode::unavailable, result.note);
        }
        *out = *result.value;
        if (note_out) {
            if (result.label == "mu-conditional") {
                *note_out = kNoteMu.c_str();
            } else if (result.label == "berta") {
                *note_out = kNoteBerta.c_str();
            } else {
                *note_out = kNoteDirectsum.c_str();
            }
        }
    });
}

mj_status mj_verify(const char* suite, size_t n, uint64_t trials, uint64_t seed,
                    mj_verify_report* out) {
    if (!suite) {
        return fail_null("suite");
    }
    if (!out) {
        return fail_null("out");
    }
    return guarded([&] {
        const std::string which(suite);
        majeur::oracle::VerificationReport report;
        if (which == "majorization") {
            report = majeur::oracle::verify_majorization(n, trials, seed);
        } else if (which == "lemma") {
            report = majeur::oracle::verify_lemma(n, trials, seed);
        } else if (which == "identities") {
            report = majeur::oracle::run_identities_suite(n, trials, seed);
        } else if (which == "ladder") {
            report = majeur::oracle::run_ladder_suite(n, trials, seed);
        } else {
            majeur::raise(majeur::ErrorCode::invalid_argument,
                          "unknown verification suite: " + which);
        }
        std::memset(out->claim_id, 0, sizeof(out->claim_id));
        std::strncpy(out->claim_id, report.claim_id.c_str(), sizeof(out->claim_id) - 1);
        out->trials = report.trials;
        out->violations = report.violations;
        out->worst_slack = report.worst_slack;
        out->seed = report.seed;
    });
}

} // extern "C"
