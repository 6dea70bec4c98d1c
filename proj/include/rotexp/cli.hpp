#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "io.hpp"
#include "rotexp.hpp"

// The five tool commands as pure functions from documents to documents. Nothing here
// touches files or streams; tools/rotexp.cpp does the I/O.

namespace rotexp::cli {

using io::json;

enum ExitCode : int { kExitOk = 0, kExitInvalidInput = 1, kExitInternal = 2 };

/// Residuals above this on a computed result mean the library itself went wrong.
inline constexpr double kInternalTol = 1e-6;

struct Options {
    double                     tol = kInputTol;
    std::optional<std::string> select;
    std::size_t                dim    = 5;
    std::size_t                trials = 1000;
    std::uint64_t              seed   = 42;
};

struct CommandResult {
    int                      exit_code = kExitOk;
    std::optional<json>      document;
    std::vector<std::string> warnings;
    std::string              error;
};

namespace detail {

/// Calls f(std::integral_constant<std::size_t, N>{}) for the runtime dimension n.
template<class F>
decltype(auto) with_dim(std::size_t n, F&& f) {
    switch (n) {
    case 3: return f(std::integral_constant<std::size_t, 3>{});
    case 4: return f(std::integral_constant<std::size_t, 4>{});
    case 5: return f(std::integral_constant<std::size_t, 5>{});
    default: throw io::document_error("unsupported dimension n = " + std::to_string(n) + " (supported: 3, 4, 5)");
    }
}

inline json header(std::string_view operation, std::optional<std::string_view> primary) {
    json d;
    d["tool"]      = io::kToolName;
    d["version"]   = io::kToolVersion;
    d["operation"] = operation;
    if (primary) d["primary"] = *primary;
    return d;
}

inline std::string fmt(double x) { return io::format_number(x); }

/// Antisymmetric input for exp/decompose: "general" is skew-symmetrized with a warning,
/// anything else must already be antisymmetric within tol.
template<std::size_t N>
Mat<N> generator_input(const io::MatrixDocument& doc, const Options& opts, CommandResult& res, std::string_view who) {
    const Mat<N> m = io::to_mat<N>(doc);
    if (doc.kind == "rotation") {
        throw io::document_error(std::string(who) + " expects an antisymmetric or general matrix, got kind \"rotation\"");
    }
    const double residual = antisymmetry_residual(m);
    if (doc.kind == "general") {
        if (residual > 0.0) {
            res.warnings.push_back("general input skew-symmetrized (antisymmetry residual " + fmt(residual) + ")");
        }
    } else if (!is_antisymmetric(m, opts.tol)) {
        throw io::document_error("input is not antisymmetric within tol " + fmt(opts.tol) + " (residual " +
                                 fmt(residual) + "); pass kind \"general\" to skew-symmetrize");
    }
    return skew_part(m);
}

template<std::size_t N>
Mat<N> rotation_input(const io::MatrixDocument& doc, const Options& opts) {
    const Mat<N> r = io::to_mat<N>(doc);
    if (doc.kind == "antisymmetric") throw io::document_error("log expects a rotation, got kind \"antisymmetric\"");
    if (!is_rotation(r, opts.tol)) {
        throw io::document_error("input is not a rotation within tol " + fmt(opts.tol) + " (orthogonality residual " +
                                 fmt(orthogonality_residual(r)) + ", determinant " + fmt(determinant(r)) + ")");
    }
    return r;
}

inline void flag_internal(CommandResult& res, bool failed, const std::string& what) {
    if (failed && res.exit_code == kExitOk) {
        res.exit_code = kExitInternal;
        res.error     = what;
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// exp
// ---------------------------------------------------------------------------

template<std::size_t N>
CommandResult cmd_exp(const io::MatrixDocument& doc, const Options& opts = {}) {
    CommandResult res;
    const Mat<N>  f = detail::generator_input<N>(doc, opts, res, "exp");
    const Mat<N>  r = exp_son(f);

    double     theta_plus = 0.0, theta_minus = 0.0, delta = 0.0;
    SplitClass klass = SplitClass::Zero;
    if constexpr (N == 3) {
        // A 3x3 generator is always a single wedge: theta_plus = |f|, Delta = theta^4.
        theta_plus = half_trace_norm(f);
        delta      = theta_plus * theta_plus * theta_plus * theta_plus;
        klass      = theta_plus <= kSplitZeroTol ? SplitClass::Zero : SplitClass::Simple;
    } else {
        const Invariants45 inv = invariants_of(f);
        theta_plus             = std::sqrt(inv.theta_plus_sq);
        theta_minus            = std::sqrt(inv.theta_minus_sq);
        delta                  = inv.delta;
        klass                  = classify(inv, half_trace_norm(f));
    }

    const double orth = orthogonality_residual(r);
    const double det  = determinant(r);

    json d                       = detail::header("exp", "rotation");
    d["input"]                   = io::to_json(doc);
    d["class"]                   = to_string(klass);
    d["outputs"]["rotation"]     = io::matrix_json(r, "rotation");
    d["outputs"]["theta_plus"]   = theta_plus;
    d["outputs"]["theta_minus"]  = theta_minus;
    d["outputs"]["delta"]        = delta;
    d["diagnostics"]["input_antisymmetry_residual"] = antisymmetry_residual(io::to_mat<N>(doc));
    d["diagnostics"]["orthogonality_residual"]      = orth;
    d["diagnostics"]["determinant"]                 = det;
    res.document                                    = std::move(d);

    detail::flag_internal(res, !(orth <= kInternalTol) || !(std::abs(det - 1.0) <= kInternalTol),
                          "exp produced a non-rotation (orthogonality residual " + detail::fmt(orth) + ")");
    return res;
}

// ---------------------------------------------------------------------------
// log
// ---------------------------------------------------------------------------

namespace detail {

inline std::string_view log3_branch(const Log3Outcome& o) {
    constexpr std::array<std::string_view, 3> names{"Identity", "Generic", "SimplePi"};
    return names[o.index()];
}

template<std::size_t N>
void log_payloads(json& out, const LogOutcome<N>& o) {
    if (const auto* g = std::get_if<LogGeneric<N>>(&o)) {
        out["f_plus"]  = io::matrix_json(g->f_plus, "antisymmetric");
        out["f_minus"] = io::matrix_json(g->f_minus, "antisymmetric");
    } else if (const auto* s = std::get_if<LogSimple<N>>(&o)) {
        out["theta"] = s->theta;
    } else if (const auto* p = std::get_if<LogSimplePi<N>>(&o)) {
        out["proj2"] = io::matrix_json(p->proj2, "general");
    } else if (const auto* p4 = std::get_if<LogFourPlanePi<N>>(&o)) {
        out["proj4"] = io::matrix_json(p4->proj4, "general");
    } else if (const auto* m = std::get_if<LogMixedPi<N>>(&o)) {
        out["f_plus"]     = io::matrix_json(m->f_plus, "antisymmetric");
        out["proj_minus"] = io::matrix_json(m->proj_minus, "general");
    }
}

} // namespace detail

template<std::size_t N>
CommandResult cmd_log(const io::MatrixDocument& doc, const Options& opts = {}) {
    CommandResult res;
    const Mat<N>  r = detail::rotation_input<N>(doc, opts);

    json d     = detail::header("log", "log");
    d["input"] = io::to_json(doc);
    json out   = json::object();
    Mat<N> f{};

    if constexpr (N == 3) {
        const Log3Outcome o = log_so3(r, opts.tol);
        f                   = materialize(o);
        d["branch"]         = detail::log3_branch(o);
        out["log"]          = io::matrix_json(f, "antisymmetric");
        if (const auto* g = std::get_if<Log3Generic>(&o)) {
            out["theta"] = g->axis_angle.theta;
            out["axis"]  = io::vector_json(g->axis_angle.axis);
        } else if (const auto* p = std::get_if<Log3Pi>(&o)) {
            out["theta"]           = kPi;
            out["axis_up_to_sign"] = io::vector_json(p->axis_up_to_sign);
            out["proj2"]           = io::matrix_json(Mat<3>(0.5 * (Mat<3>::identity() - r)), "general");
        } else {
            out["theta"] = 0.0;
        }
    } else {
        const LogOutcome<N> o = log45(r, opts.tol);
        const Angles45      a = spectral_angles(r, opts.tol);
        f                     = materialize<N>(o);
        d["branch"]           = branch_name<N>(o);
        out["log"]            = io::matrix_json(f, "antisymmetric");
        detail::log_payloads<N>(out, o);
        out["delta"]       = a.delta;
        out["y_plus"]      = a.y_plus;
        out["y_minus"]     = a.y_minus;
        out["theta_plus"]  = a.theta_plus;
        out["theta_minus"] = a.theta_minus;
    }

    const double round_trip = max_abs_diff(exp_son(f), r);
    d["outputs"]                                  = std::move(out);
    d["diagnostics"]["input_orthogonality_residual"] = orthogonality_residual(r);
    d["diagnostics"]["round_trip_residual"]          = round_trip;
    res.document                                     = std::move(d);

    detail::flag_internal(res, !(round_trip <= kInternalTol),
                          "log round trip residual " + detail::fmt(round_trip) + " exceeds " + detail::fmt(kInternalTol));
    return res;
}

// ---------------------------------------------------------------------------
// decompose
// ---------------------------------------------------------------------------

template<std::size_t N>
CommandResult cmd_decompose(const io::MatrixDocument& doc, const Options& opts = {}) {
    if constexpr (N == 3) {
        (void)doc;
        (void)opts;
        throw io::document_error("decompose requires n ∈ {4,5}");
    } else {
        CommandResult          res;
        const Mat<N>           f = detail::generator_input<N>(doc, opts, res, "decompose");
        const SpectralSplit<N> s = orthogonal_decompose(f);

        json d     = detail::header("decompose", s.f_plus ? std::optional<std::string_view>("f_plus") : std::nullopt);
        d["input"] = io::to_json(doc);
        d["class"] = to_string(s.klass);
        json& out  = d["outputs"];
        out        = json::object();
        out["delta"]       = s.delta;
        out["theta_plus"]  = s.theta_plus;
        out["theta_minus"] = s.theta_minus;
        if (s.f_plus && s.f_minus) {
            out["f_plus"]  = io::matrix_json(*s.f_plus, "antisymmetric");
            out["f_minus"] = io::matrix_json(*s.f_minus, "antisymmetric");
            const double scale         = std::max(1.0, s.theta_plus * s.theta_plus);
            const double reconstruction = max_abs_diff(Mat<N>(*s.f_plus + *s.f_minus), f);
            const double annihilation   = max_abs(Mat<N>(*s.f_plus * *s.f_minus));
            d["diagnostics"]["reconstruction_residual"] = reconstruction;
            d["diagnostics"]["annihilation_residual"]   = annihilation;
            detail::flag_internal(res, !(reconstruction <= kInternalTol * std::max(1.0, s.theta_plus)) ||
                                           !(annihilation <= kInternalTol * scale),
                                  "decomposition residual out of bounds");
        } else {
            d["diagnostics"] = json::object();
        }
        res.document = std::move(d);
        return res;
    }
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

template<std::size_t N>
CommandResult cmd_check(const io::MatrixDocument& doc, const Options& opts = {}) {
    CommandResult res;
    const Mat<N>  m       = io::to_mat<N>(doc);
    const bool    antisym = is_antisymmetric(m, opts.tol);
    const bool    rot     = is_rotation(m, opts.tol);

    json d     = detail::header("check", std::nullopt);
    d["input"] = io::to_json(doc);
    json kinds = json::array();
    if (antisym) kinds.push_back("antisymmetric");
    if (rot) kinds.push_back("rotation");
    if (!antisym && !rot) kinds.push_back("general");

    json& out                     = d["outputs"];
    out                           = json::object();
    out["antisymmetry_residual"]  = antisymmetry_residual(m);
    out["orthogonality_residual"] = orthogonality_residual(m);
    out["determinant"]            = determinant(m);
    out["qualifies"]["antisymmetric"] = antisym;
    out["qualifies"]["rotation"]      = rot;
    out["kinds"]                      = std::move(kinds);
    d["diagnostics"]["tol"]           = opts.tol;
    if (doc.kind && !(*doc.kind == "general" || (*doc.kind == "antisymmetric" && antisym) || (*doc.kind == "rotation" && rot))) {
        res.warnings.push_back("declared kind \"" + *doc.kind + "\" does not hold within tol " + detail::fmt(opts.tol));
    }
    res.document = std::move(d);
    return res;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

struct Latency {
    double median_ns = 0.0;
    double p90_ns    = 0.0;
};

/// Median (mean of the middle pair for even counts) and nearest-rank 90th percentile.
[[nodiscard]] inline Latency summarize(std::vector<double> samples) {
    if (samples.empty()) return {};
    std::sort(samples.begin(), samples.end());
    const std::size_t n   = samples.size();
    const double      med = n % 2 ? samples[n / 2] : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
    const auto        k   = static_cast<std::size_t>(std::ceil(0.9 * static_cast<double>(n)));
    return {med, samples[std::max<std::size_t>(k, 1) - 1]};
}

namespace detail {

struct BenchSamples {
    std::vector<double> exp_ns, series_ns, log_ns;
    double              max_exp_residual = 0.0;
    double              max_log_residual = 0.0;
};

template<class F>
double time_ns(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::nano>(t1 - t0).count();
}

template<std::size_t N>
BenchSamples run_bench(std::size_t trials, std::uint64_t seed) {
    BenchSamples    b;
    oracle::Rng     rng(seed);
    volatile double sink = 0.0;
    b.exp_ns.reserve(trials);
    b.series_ns.reserve(trials);
    b.log_ns.reserve(trials);

    for (std::size_t t = 0; t < trials; ++t) {
        Mat<N>       f     = oracle::random_antisym<N>(1.0, rng);
        const double scale = rng.uniform(0.0, 2 * kPi);
        const double fn    = half_trace_norm(f);
        f                  = fn > 0.0 ? f * (scale / fn) : f;
        const Mat<N> r     = oracle::random_rotation<N>(rng);

        Mat<N> closed{}, series{}, lg{};
        b.exp_ns.push_back(time_ns([&] { closed = exp_son(f); }));
        b.series_ns.push_back(time_ns([&] { series = oracle::series_exp(f); }));
        b.log_ns.push_back(time_ns([&] {
            if constexpr (N == 3) lg = materialize(log_so3(r));
            else lg = materialize<N>(log45(r));
        }));
        sink = sink + closed(0, 0) + series(0, 0) + lg(0, 1);

        b.max_exp_residual = std::max(b.max_exp_residual, max_abs_diff(closed, series));
        b.max_log_residual = std::max(b.max_log_residual, max_abs_diff(exp_son(lg), r));
    }
    return b;
}

} // namespace detail

inline CommandResult cmd_bench(const Options& opts = {}) {
    if (opts.trials < 1) throw io::document_error("bench requires --trials >= 1");
    CommandResult res;
    const auto    b = detail::with_dim(opts.dim, [&](auto dim) { return detail::run_bench<decltype(dim)::value>(opts.trials, opts.seed); });

    const Latency exp_l    = summarize(b.exp_ns);
    const Latency series_l = summarize(b.series_ns);
    const Latency log_l    = summarize(b.log_ns);
    const bool    faster   = exp_l.median_ns <= series_l.median_ns;

    json d                     = detail::header("bench", std::nullopt);
    d["input"]["dim"]          = opts.dim;
    d["input"]["trials"]       = opts.trials;
    d["input"]["seed"]         = opts.seed;
    json& out                  = d["outputs"];
    out["latency_ns"]["exp_son"]         = {{"median", exp_l.median_ns}, {"p90", exp_l.p90_ns}};
    out["latency_ns"]["series_exp"]      = {{"median", series_l.median_ns}, {"p90", series_l.p90_ns}};
    out["latency_ns"]["log_materialize"] = {{"median", log_l.median_ns}, {"p90", log_l.p90_ns}};
    out["max_exp_residual"]              = b.max_exp_residual;
    out["max_log_residual"]              = b.max_log_residual;
    out["exp_speedup"]                   = exp_l.median_ns > 0.0 ? series_l.median_ns / exp_l.median_ns : 0.0;
    out["speed_check"]                   = faster ? "pass" : "fail";

    json notes = json::array();
    if (!faster) {
        const std::string note = "closed-form exp median " + detail::fmt(exp_l.median_ns) +
                                 " ns is slower than the series oracle median " + detail::fmt(series_l.median_ns) + " ns";
        notes.push_back(note);
        res.warnings.push_back(note);
    }
    d["diagnostics"]["notes"] = std::move(notes);
    res.document              = std::move(d);

    const double worst = std::max(b.max_exp_residual, b.max_log_residual);
    detail::flag_internal(res, !(worst <= kInternalTol), "bench residual " + detail::fmt(worst) + " exceeds " + detail::fmt(kInternalTol));
    return res;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

inline bool is_command(std::string_view name) {
    return name == "exp" || name == "log" || name == "decompose" || name == "check" || name == "bench";
}

/// Runs one command on the input text. Every failure becomes an exit code plus a message;
/// nothing escapes.
inline CommandResult run(std::string_view command, std::string_view input_text, const Options& opts = {}) {
    CommandResult fail;
    try {
        if (!is_command(command)) throw io::document_error("unknown command \"" + std::string(command) + "\"");
        if (!(opts.tol > 0.0)) throw io::document_error("--tol must be positive");
        if (command == "bench") return cmd_bench(opts);

        const io::MatrixDocument doc = io::read_matrix(input_text, opts.select);
        return detail::with_dim(doc.n, [&](auto dim) -> CommandResult {
            constexpr std::size_t N = decltype(dim)::value;
            if (command == "exp") return cmd_exp<N>(doc, opts);
            if (command == "log") return cmd_log<N>(doc, opts);
            if (command == "decompose") return cmd_decompose<N>(doc, opts);
            return cmd_check<N>(doc, opts);
        });
    } catch (const io::document_error& e) {
        fail.exit_code = kExitInvalidInput;
        fail.error     = e.what();
    } catch (const std::invalid_argument& e) {
        fail.exit_code = kExitInvalidInput;
        fail.error     = e.what();
    } catch (const std::exception& e) {
        fail.exit_code = kExitInternal;
        fail.error     = std::string("internal failure: ") + e.what();
    }
    return fail;
}

} // namespace rotexp::cli
