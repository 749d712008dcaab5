// Command-line front end for the majeur shared library. Talks to the core
// exclusively through the public C interface.

#include "majeur/majeur.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

[[noreturn]] void fail(mj_status status, const std::string& message) {
    json err;
    err["error"]["code"] = mj_status_name(status);
    err["error"]["message"] = message;
    std::cerr << err.dump() << "\n";
    std::exit(static_cast<int>(status));
}

void check(mj_status status) {
    if (status != MJ_OK) {
        fail(status, mj_last_error_message());
    }
}

struct MatrixDeleter {
    void operator()(mj_matrix* m) const { mj_matrix_free(m); }
};
struct SpectrumDeleter {
    void operator()(mj_spectrum* s) const { mj_spectrum_free(s); }
};
struct SubcoeffsDeleter {
    void operator()(mj_subcoeffs* s) const { mj_subcoeffs_free(s); }
};

using MatrixPtr = std::unique_ptr<mj_matrix, MatrixDeleter>;
using SpectrumPtr = std::unique_ptr<mj_spectrum, SpectrumDeleter>;
using SubcoeffsPtr = std::unique_ptr<mj_subcoeffs, SubcoeffsDeleter>;

std::vector<double> parse_csv_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(item, &pos);
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) {
                ++pos;
            }
            if (pos != item.size()) {
                throw std::invalid_argument(item);
            }
            out.push_back(v);
        } catch (const std::exception&) {
            fail(MJ_ERR_INVALID_INPUT, "cannot parse number: '" + item + "'");
        }
    }
    if (out.empty()) {
        fail(MJ_ERR_INVALID_INPUT, "empty number list");
    }
    return out;
}

MatrixPtr load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        fail(MJ_ERR_INVALID_INPUT, "cannot open matrix file: " + path);
    }
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        fail(MJ_ERR_INVALID_INPUT, std::string("matrix file is not valid JSON: ") + e.what());
    }
    if (!doc.is_array() || doc.empty()) {
        fail(MJ_ERR_INVALID_INPUT, "matrix file must be a non-empty array of rows");
    }
    const std::size_t rows = doc.size();
    std::size_t cols = 0;
    std::vector<double> interleaved;
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = doc[r];
        if (!row.is_array() || row.empty()) {
            fail(MJ_ERR_INVALID_INPUT, "matrix rows must be non-empty arrays");
        }
        if (r == 0) {
            cols = row.size();
            interleaved.reserve(2 * rows * cols);
        } else if (row.size() != cols) {
            fail(MJ_ERR_INVALID_INPUT, "matrix rows have inconsistent lengths");
        }
        for (const auto& entry : row) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number()) {
                fail(MJ_ERR_INVALID_INPUT, "matrix entries must be [re, im] pairs");
            }
            interleaved.push_back(entry[0].get<double>());
            interleaved.push_back(entry[1].get<double>());
        }
    }
    mj_matrix* raw = nullptr;
    check(mj_matrix_create(rows, cols, interleaved.data(), &raw));
    return MatrixPtr(raw);
}

json matrix_to_json(const mj_matrix* m) {
    const std::size_t rows = mj_matrix_rows(m);
    const std::size_t cols = mj_matrix_cols(m);
    std::vector<double> interleaved(2 * rows * cols);
    check(mj_matrix_data(m, interleaved.data()));
    json out = json::array();
    for (std::size_t r = 0; r < rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < cols; ++c) {
            const std::size_t base = 2 * (r * cols + c);
            row.push_back(json::array({interleaved[base], interleaved[base + 1]}));
        }
        out.push_back(std::move(row));
    }
    return out;
}

// Builtins: identity[:N], fourier[:N], hadamard2, o3, rotation:<theta>,
// haar:<N>; anything else is a path to a JSON matrix file. inferred_dim
// supplies N for the parameter-free forms (0 = unknown).
MatrixPtr resolve_unitary(const std::string& spec, std::size_t inferred_dim,
                          std::uint64_t seed) {
    mj_matrix* raw = nullptr;
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);

    auto parse_dim = [&](const std::string& text) -> std::size_t {
        if (text.empty()) {
            if (inferred_dim == 0) {
                fail(MJ_ERR_INVALID_ARGUMENT,
                     "'" + head + "' needs a dimension, e.g. '" + head + ":3'");
            }
            return inferred_dim;
        }
        try {
            const long v = std::stol(text);
            if (v < 1) {
                throw std::out_of_range(text);
            }
            return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            fail(MJ_ERR_INVALID_ARGUMENT, "bad dimension in unitary spec: " + spec);
        }
    };

    MatrixPtr out;
    if (head == "identity") {
        check(mj_matrix_identity(parse_dim(arg), &raw));
        out.reset(raw);
    } else if (head == "fourier") {
        check(mj_matrix_fourier(parse_dim(arg), &raw));
        out.reset(raw);
    } else if (head == "hadamard2") {
        check(mj_matrix_hadamard2(&raw));
        out.reset(raw);
    } else if (head == "o3") {
        check(mj_matrix_o3(&raw));
        out.reset(raw);
    } else if (head == "rotation") {
        if (arg.empty()) {
            fail(MJ_ERR_INVALID_ARGUMENT, "rotation needs an angle, e.g. 'rotation:0.5'");
        }
        try {
            check(mj_matrix_rotation(std::stod(arg), &raw));
        } catch (const std::exception&) {
            fail(MJ_ERR_INVALID_ARGUMENT, "bad angle in unitary spec: " + spec);
        }
        out.reset(raw);
    } else if (head == "haar") {
        check(mj_matrix_haar(parse_dim(arg), seed, &raw));
        out.reset(raw);
    } else {
        out = load_matrix_file(spec);
    }

    double tolerance = 1e-10;
    check(mj_get_tolerance("unitarity", &tolerance));
    int unitary = 0;
    check(mj_matrix_is_unitary(out.get(), tolerance, &unitary));
    if (!unitary) {
        fail(MJ_ERR_CONTRACT_VIOLATION, "resolved matrix is not unitary within tolerance");
    }
    return out;
}

struct EntropySelector {
    std::string family; // shannon | renyi | tsallis
    std::optional<double> alpha;
};

EntropySelector parse_entropy(const std::string& text) {
    const auto colon = text.find(':');
    const std::string family = text.substr(0, colon);
    EntropySelector sel{family, std::nullopt};
    if (colon != std::string::npos) {
        try {
            sel.alpha = std::stod(text.substr(colon + 1));
        } catch (const std::exception&) {
            fail(MJ_ERR_INVALID_ARGUMENT, "bad entropy order in: " + text);
        }
    }
    if (family == "shannon") {
        if (sel.alpha) {
            fail(MJ_ERR_INVALID_ARGUMENT, "shannon takes no order");
        }
    } else if (family == "renyi" || family == "tsallis") {
        if (!sel.alpha) {
            fail(MJ_ERR_INVALID_ARGUMENT, family + " needs an order, e.g. '" + family + ":0.5'");
        }
    } else {
        fail(MJ_ERR_INVALID_ARGUMENT, "unknown entropy selector: " + text);
    }
    return sel;
}

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    std::size_t steps = 0;
};

GridSpec parse_grid(const std::string& text) {
    GridSpec grid;
    std::stringstream stream(text);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(stream, part, ':')) {
        parts.push_back(part);
    }
    if (parts.size() != 3) {
        fail(MJ_ERR_INVALID_ARGUMENT, "grid must be min:max:steps");
    }
    try {
        grid.min = std::stod(parts[0]);
        grid.max = std::stod(parts[1]);
        const long steps = std::stol(parts[2]);
        if (steps < 2) {
            throw std::out_of_range(parts[2]);
        }
        grid.steps = static_cast<std::size_t>(steps);
    } catch (const std::exception&) {
        fail(MJ_ERR_INVALID_ARGUMENT, "degenerate grid: " + text);
    }
    if (!(grid.max > grid.min)) {
        fail(MJ_ERR_INVALID_ARGUMENT, "degenerate grid: " + text);
    }
    return grid;
}

std::string format12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        fail(MJ_ERR_INVALID_ARGUMENT, "cannot open output file: " + out_path);
    }
    out << content;
}

double base_factor(const std::string& base) {
    if (base == "nats") {
        return 1.0;
    }
    if (base == "bits") {
        return 1.0 / std::log(2.0);
    }
    fail(MJ_ERR_INVALID_ARGUMENT, "base must be nats or bits");
}

SpectrumPtr make_spectrum(const std::vector<double>& values, bool renormalize) {
    mj_spectrum* raw = nullptr;
    check(mj_spectrum_create(values.data(), values.size(), renormalize ? 1 : 0, &raw));
    return SpectrumPtr(raw);
}

SubcoeffsPtr compute_subcoeffs(const mj_matrix* u, std::size_t max_dim = 0) {
    mj_subcoeffs* raw = nullptr;
    check(mj_subcoeffs_compute(u, max_dim, &raw));
    return SubcoeffsPtr(raw);
}

double comparison(const mj_subcoeffs* s, const mj_spectrum* lam, const char* name,
                  const char** note = nullptr) {
    double value = 0.0;
    check(mj_comparison_bound(s, lam, name, &value, note));
    return value;
}

// ---- subcommands --------------------------------------------------------

struct CommonOptions {
    std::string out_path;
    std::string base = "nats";
    std::uint64_t seed = 0;
};

int cmd_bound(const std::string& unitary_spec, const std::string& lambda_text,
              const std::string& entropy_text, bool conditional, bool renormalize,
              const CommonOptions& common) {
    const std::vector<double> lambda_values = parse_csv_doubles(lambda_text);
    SpectrumPtr lambda = make_spectrum(lambda_values, renormalize);
    const std::size_t n = mj_spectrum_size(lambda.get());
    MatrixPtr u = resolve_unitary(unitary_spec, n, common.seed);
    if (mj_matrix_rows(u.get()) != n) {
        fail(MJ_ERR_INVALID_ARGUMENT, "lambda length must match the unitary dimension");
    }
    SubcoeffsPtr sc = compute_subcoeffs(u.get());

    const EntropySelector selector = parse_entropy(entropy_text);
    double bound = 0.0;
    if (selector.family == "shannon") {
        check(mj_bound_shannon(sc.get(), lambda.get(), &bound));
    } else if (selector.family == "renyi") {
        check(mj_bound_renyi(sc.get(), lambda.get(), *selector.alpha, &bound));
    } else {
        check(mj_bound_tsallis(sc.get(), lambda.get(), *selector.alpha, &bound));
    }

    const double factor = base_factor(common.base);

    std::vector<double> s_values(n);
    std::vector<double> w_values(n);
    std::vector<double> wl_values(2 * n);
    check(mj_subcoeffs_values(sc.get(), s_values.data()));
    check(mj_subcoeffs_w(sc.get(), w_values.data()));
    check(mj_w_lambda(sc.get(), lambda.get(), wl_values.data()));
    std::vector<double> sorted_lambda(n);
    check(mj_spectrum_values(lambda.get(), sorted_lambda.data()));

    json report;
    report["command"] = "bound";
    report["dimension"] = n;
    report["base"] = common.base;
    report["unitary"] = unitary_spec;
    report["lambda"] = sorted_lambda;
    report["s"] = s_values;
    report["w"] = w_values;
    report["w_lambda"] = wl_values;
    report["entropy"]["family"] = selector.family;
    if (selector.alpha) {
        report["entropy"]["alpha"] = *selector.alpha;
    } else {
        report["entropy"]["alpha"] = nullptr;
    }
    // Tsallis values are not entropies in nats; the bits flag only rescales
    // logarithmic quantities.
    const bool logarithmic = selector.family != "tsallis";
    report["bound"] = logarithmic ? bound * factor : bound;

    if (conditional) {
        double cond = 0.0;
        check(mj_bound_conditional(sc.get(), lambda.get(), &cond));
        report["conditional_bound"] = cond * factor;
    }

    json baselines;
    const struct {
        const char* key;
        const char* selector;
    } named[] = {{"B_MU", "mu-conditional"}, {"B_B", "berta"}, {"B_directsum", "directsum"}};
    for (const auto& item : named) {
        const char* note = nullptr;
        const double value = comparison(sc.get(), lambda.get(), item.selector, &note);
        baselines[item.key]["value"] = value * factor;
        baselines[item.key]["note"] = note ? note : "";
    }
    for (const char* reserved : {"B_KLJR", "B_KPP"}) {
        baselines[reserved]["value"] = nullptr;
        baselines[reserved]["reason"] = "unavailable: no formula implemented";
    }
    report["baselines"] = baselines;

    write_output(common.out_path, report.dump(2) + "\n");
    return 0;
}

int cmd_subcoeffs(const std::string& unitary_spec, std::size_t max_dim,
                  const CommonOptions& common) {
    MatrixPtr u = resolve_unitary(unitary_spec, 0, common.seed);
    SubcoeffsPtr sc = compute_subcoeffs(u.get(), max_dim);
    const std::size_t n = mj_subcoeffs_dim(sc.get());
    std::vector<double> s_values(n);
    std::vector<double> w_values(n);
    check(mj_subcoeffs_values(sc.get(), s_values.data()));
    check(mj_subcoeffs_w(sc.get(), w_values.data()));

    json report;
    report["command"] = "subcoeffs";
    report["dimension"] = n;
    report["unitary"] = unitary_spec;
    report["matrix"] = matrix_to_json(u.get());
    report["s"] = s_values;
    report["w"] = w_values;
    write_output(common.out_path, report.dump(2) + "\n");
    return 0;
}

int cmd_sweep_qubit(const std::string& mode, double fixed, const std::string& grid_text,
                    const CommonOptions& common) {
    const GridSpec grid = parse_grid(grid_text);
    const double factor = base_factor(common.base);

    std::string csv = "x,B_PRKZ,B_B,B_MU,B_directsum\n";
    auto emit_row = [&](double x, const mj_subcoeffs* sc, const mj_spectrum* lam) {
        double prkz = 0.0;
        check(mj_bound_conditional(sc, lam, &prkz));
        const double berta = comparison(sc, lam, "berta");
        const double mu = comparison(sc, lam, "mu-conditional");
        const double directsum = comparison(sc, lam, "directsum");
        csv += format12(x);
        csv += ',' + format12(std::max(0.0, prkz) * factor);
        csv += ',' + format12(berta * factor);
        csv += ',' + format12(mu * factor);
        csv += ',' + format12(directsum * factor);
        csv += '\n';
    };

    auto spectrum_for = [&](double small) -> SpectrumPtr {
        if (small < -1e-12 || small > 0.5 + 1e-12) {
            fail(MJ_ERR_INVALID_ARGUMENT,
                 "the smaller eigenvalue must lie in [0, 1/2], got " + format12(small));
        }
        const double clamped = std::min(std::max(small, 0.0), 0.5);
        const std::vector<double> values = {1.0 - clamped, clamped};
        return make_spectrum(values, false);
    };

    if (mode == "theta") {
        SpectrumPtr lambda = spectrum_for(fixed);
        for (std::size_t i = 0; i < grid.steps; ++i) {
            const double theta = grid.min + (grid.max - grid.min) * static_cast<double>(i) /
                                                static_cast<double>(grid.steps - 1);
            mj_matrix* raw = nullptr;
            check(mj_matrix_rotation(theta, &raw));
            MatrixPtr u(raw);
            SubcoeffsPtr sc = compute_subcoeffs(u.get());
            emit_row(theta, sc.get(), lambda.get());
        }
    } else if (mode == "lambda") {
        mj_matrix* raw = nullptr;
        check(mj_matrix_rotation(fixed, &raw));
        MatrixPtr u(raw);
        SubcoeffsPtr sc = compute_subcoeffs(u.get());
        for (std::size_t i = 0; i < grid.steps; ++i) {
            const double x = grid.min + (grid.max - grid.min) * static_cast<double>(i) /
                                            static_cast<double>(grid.steps - 1);
            SpectrumPtr lambda = spectrum_for(x);
            emit_row(x, sc.get(), lambda.get());
        }
    } else {
        fail(MJ_ERR_INVALID_ARGUMENT, "mode must be theta or lambda");
    }

    write_output(common.out_path, csv);
    return 0;
}

int cmd_simplex_qutrit(const std::string& unitary_spec, std::size_t resolution,
                       const CommonOptions& common) {
    if (resolution < 2) {
        fail(MJ_ERR_INVALID_ARGUMENT, "resolution must be at least 2");
    }
    MatrixPtr u = resolve_unitary(unitary_spec, 3, common.seed);
    if (mj_matrix_rows(u.get()) != 3 || mj_matrix_cols(u.get()) != 3) {
        fail(MJ_ERR_INVALID_ARGUMENT, "simplex-qutrit needs a 3x3 unitary");
    }
    SubcoeffsPtr sc = compute_subcoeffs(u.get());
    const double factor = base_factor(common.base);

    std::string csv = "\xce\xbb""1,\xce\xbb""2,\xce\xbb""3,B_PRKZ,B_B,B_directsum\n";
    const auto r = static_cast<double>(resolution);
    for (std::size_t i = resolution;; --i) {
        for (std::size_t j = std::min(i, resolution - i);; --j) {
            const std::size_t rest = resolution - i - j;
            if (rest <= j) {
                const double l1 = static_cast<double>(i) / r;
                const double l2 = static_cast<double>(j) / r;
                const double l3 = static_cast<double>(rest) / r;
                const std::vector<double> values = {l1, l2, l3};
                SpectrumPtr lambda = make_spectrum(values, false);
                double prkz = 0.0;
                check(mj_bound_conditional(sc.get(), lambda.get(), &prkz));
                const double berta = comparison(sc.get(), lambda.get(), "berta");
                const double directsum = comparison(sc.get(), lambda.get(), "directsum");
                csv += format12(l1);
                csv += ',' + format12(l2);
                csv += ',' + format12(l3);
                csv += ',' + format12(std::max(0.0, prkz) * factor);
                csv += ',' + format12(berta * factor);
                csv += ',' + format12(directsum * factor);
                csv += '\n';
            }
            if (j == 0) {
                break;
            }
        }
        if (i == 0) {
            break;
        }
    }

    write_output(common.out_path, csv);
    return 0;
}

int cmd_verify(std::size_t n, std::uint64_t trials, const std::string& suite,
               const CommonOptions& common) {
    std::vector<std::string> suites;
    if (suite == "all") {
        suites = {"majorization", "lemma", "identities", "ladder"};
    } else if (suite == "majorization" || suite == "lemma" || suite == "identities" ||
               suite == "ladder") {
        suites = {suite};
    } else {
        fail(MJ_ERR_INVALID_ARGUMENT, "unknown suite: " + suite);
    }

    double slack = 0.0;
    check(mj_get_tolerance("slack", &slack));

    json report;
    report["command"] = "verify";
    report["n"] = n;
    report["trials"] = trials;
    report["seed"] = common.seed;
    report["suite"] = suite;
    report["slack"] = slack;
    report["reports"] = json::array();
    std::uint64_t total_violations = 0;
    for (const std::string& name : suites) {
        mj_verify_report r{};
        check(mj_verify(name.c_str(), n, trials, common.seed, &r));
        json entry;
        entry["suite"] = name;
        entry["claim"] = r.claim_id;
        entry["trials"] = r.trials;
        entry["violations"] = r.violations;
        entry["worst_slack"] = r.worst_slack;
        entry["seed"] = r.seed;
        report["reports"].push_back(std::move(entry));
        total_violations += r.violations;
    }
    report["total_violations"] = total_violations;
    report["pass"] = total_violations == 0;
    write_output(common.out_path, report.dump(2) + "\n");
    return total_violations == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"majorization-based entropic uncertainty bounds"};
    app.require_subcommand(1);
    // Common flags (--out, --base, --seed) are accepted after the
    // subcommand name as well.
    app.fallthrough();

    CommonOptions common;
    app.add_option("--out", common.out_path, "output file (default: stdout)");
    app.add_option("--base", common.base, "entropy unit: nats or bits")
        ->check(CLI::IsMember({"nats", "bits"}));
    app.add_option("--seed", common.seed, "random seed");

    // bound
    auto* bound = app.add_subcommand("bound", "evaluate the uncertainty bound for one case");
    std::string bound_unitary;
    std::string bound_lambda;
    std::string bound_entropy = "shannon";
    bool bound_conditional = false;
    bool bound_renormalize = false;
    bound->add_option("--unitary", bound_unitary, "builtin name or JSON matrix file")
        ->required();
    bound->add_option("--lambda", bound_lambda, "comma-separated spectrum")->required();
    bound->add_option("--entropy", bound_entropy, "shannon | renyi:<a> | tsallis:<a>");
    bound->add_flag("--conditional", bound_conditional,
                    "also report the conditional-entropy bound");
    bound->add_flag("--renormalize", bound_renormalize,
                    "rescale a spectrum whose sum is within 1e-6 of one");

    // sweep-qubit
    auto* sweep = app.add_subcommand("sweep-qubit", "qubit bound sweep as CSV");
    std::string sweep_mode;
    double sweep_fixed = 0.0;
    std::string sweep_grid;
    sweep->add_option("--mode", sweep_mode, "theta (fixed lambda) or lambda (fixed theta)")
        ->required()
        ->check(CLI::IsMember({"theta", "lambda"}));
    sweep->add_option("--fixed", sweep_fixed, "the fixed parameter value")->required();
    sweep->add_option("--grid", sweep_grid, "sweep grid min:max:steps")->required();

    // simplex-qutrit
    auto* simplex = app.add_subcommand("simplex-qutrit",
                                       "qutrit bounds on the ordered eigenvalue simplex");
    std::string simplex_unitary = "o3";
    std::size_t simplex_resolution = 50;
    simplex->add_option("--unitary", simplex_unitary, "3x3 builtin or JSON matrix file");
    simplex->add_option("--resolution", simplex_resolution, "barycentric grid resolution");

    // subcoeffs
    auto* subcoeffs = app.add_subcommand("subcoeffs", "submatrix norm coefficients and W");
    std::string subcoeffs_unitary;
    std::size_t subcoeffs_max_dim = 0;
    subcoeffs->add_option("--unitary", subcoeffs_unitary, "builtin name or JSON matrix file")
        ->required();
    subcoeffs->add_option("--max-dim", subcoeffs_max_dim,
                          "enumeration cap override (default 10)");

    // verify
    auto* verify = app.add_subcommand("verify", "randomized verification suites");
    std::size_t verify_n = 0;
    std::uint64_t verify_trials = 1000;
    std::string verify_suite = "all";
    verify->add_option("--n", verify_n, "Hilbert-space dimension")->required();
    verify->add_option("--trials", verify_trials, "trials per suite");
    verify->add_option("--suite", verify_suite,
                       "majorization | lemma | identities | ladder | all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help and friends
        }
        fail(MJ_ERR_INVALID_ARGUMENT, e.what());
    }

    if (bound->parsed()) {
        return cmd_bound(bound_unitary, bound_lambda, bound_entropy, bound_conditional,
                         bound_renormalize, common);
    }
    if (sweep->parsed()) {
        return cmd_sweep_qubit(sweep_mode, sweep_fixed, sweep_grid, common);
    }
    if (simplex->parsed()) {
        return cmd_simplex_qutrit(simplex_unitary, simplex_resolution, common);
    }
    if (subcoeffs->parsed()) {
        return cmd_subcoeffs(subcoeffs_unitary, subcoeffs_max_dim, common);
    }
    if (verify->parsed()) {
        return cmd_verify(verify_n, verify_trials, verify_suite, common);
    }
    return 0;
}
