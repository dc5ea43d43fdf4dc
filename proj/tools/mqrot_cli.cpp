// Command-line front end: spectra, constraint roots, wavefunction sampling,
// oracle verification, and parameter sweeps, with CSV/JSON output.
//
// Exit codes: 0 success, 2 invalid input, 3 no positive root,
// 4 verification failure, 1 internal error.

#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "mqrot/errors.hpp"
#include "mqrot/heun.hpp"
#include "mqrot/model.hpp"
#include "mqrot/oracle.hpp"
#include "mqrot/output.hpp"
#include "mqrot/quantize.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitNoRoot = 3;
constexpr int kExitVerifyFailed = 4;

struct CommonOpts {
    mqrot::PhysicalParams params;
    std::optional<double> omega;
    std::string format = "csv";
    std::string out;
    std::string config;
    int jobs = 1;
    bool no_meta = false;
    bool seedless = false;  // accepted for compatibility; output is always deterministic
};

void add_common(CLI::App* sub, CommonOpts& o) {
    sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--m", o.params.m, "particle mass (> 0)");
    sub->add_option("--M-quad", o.params.M_quad, "magnetic quadrupole scalar M (> 0)");
    sub->add_option("--lambda", o.params.lambda, "charge-density parameter");
    sub->add_option("--Omega", o.params.Omega, "rotation rate about z");
    sub->add_option("--theta", o.params.theta_pot, "1/rho potential strength");
    sub->add_option("--omega", o.omega, "cyclotron frequency (overrides 2 M lambda / m)");
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--config", o.config, "key = value config file; flags override");
    sub->add_option("--jobs", o.jobs, "worker threads for sweeps")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--no-meta", o.no_meta, "suppress metadata comment lines");
    sub->add_flag("--seedless", o.seedless, "no-op; output is deterministic by construction");
}

double resolve_omega(const CommonOpts& o) {
    if (o.omega) {
        if (o.params.lambda != 0.0)
            std::cerr << "warning: --omega given, ignoring omega = 2 M lambda / m\n";
        return *o.omega;
    }
    return mqrot::cyclotron_frequency(o.params);
}

struct IntRange {
    int lo = 0, hi = 0;
    bool empty() const { return hi < lo; }
    int size() const { return hi - lo + 1; }
};

IntRange parse_range(const std::string& s) {
    IntRange r;
    const auto pos = s.find("..");
    if (pos == std::string::npos) {
        r.lo = r.hi = std::stoi(s);
    } else {
        r.lo = std::stoi(s.substr(0, pos));
        r.hi = std::stoi(s.substr(pos + 2));
    }
    return r;
}

void check_ranges(const IntRange& n, const IntRange& l) {
    if (n.empty() || l.empty()) throw mqrot::InvalidParams("empty n or l range");
    if (n.lo < 1 || n.hi > 12) throw mqrot::InvalidParams("n range must lie in [1, 12]");
    if (std::abs(l.lo) > 20 || std::abs(l.hi) > 20)
        throw mqrot::InvalidParams("|l| must be <= 20");
}

void meta_params(mqrot::Table& t, const CommonOpts& o) {
    t.meta["m"] = o.params.m;
    t.meta["M_quad"] = o.params.M_quad;
    t.meta["lambda"] = o.params.lambda;
    t.meta["Omega"] = o.params.Omega;
    t.meta["theta"] = o.params.theta_pot;
}

void emit(const mqrot::Table& t, const CommonOpts& o) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!o.out.empty()) {
        file.open(o.out, std::ios::binary);
        if (!file) throw mqrot::InvalidParams("cannot open output file: " + o.out);
        os = &file;
    }
    if (o.format == "json")
        mqrot::write_json(*os, t, !o.no_meta);
    else
        mqrot::write_csv(*os, t, !o.no_meta);
}

mqrot::ordered_json mode_row(const mqrot::QuantizedMode& m) {
    mqrot::ordered_json row;
    row["n"] = m.n;
    row["l"] = m.l;
    row["root_index"] = m.root_index;
    row["branch"] = m.branch > 0 ? "+" : "-";
    row["xi_star"] = m.xi_star;
    row["delta"] = m.delta;
    row["omega"] = m.omega;
    row["energy"] = m.energy;
    return row;
}

const std::vector<std::string> kModeColumns = {
    "n", "l", "root_index", "branch", "xi_star", "delta", "omega", "energy"};

mqrot::Table load_json_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mqrot::InvalidParams("cannot open " + path);
    return mqrot::table_from_json(mqrot::ordered_json::parse(in));
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(const CommonOpts& o, const std::string& n_spec, const std::string& l_spec,
                 bool landau, int n_r, const std::string& from_json) {
    if (!from_json.empty()) {
        emit(load_json_table(from_json), o);
        return 0;
    }

    o.params.validate();
    const IntRange nr = parse_range(n_spec), lr = parse_range(l_spec);
    check_ranges(nr, lr);

    mqrot::Table t;
    meta_params(t, o);
    t.meta["command"] = "spectrum";
    t.columns = kModeColumns;

    if (landau) {
        if (o.params.theta_pot != 0.0)
            throw mqrot::InvalidParams("--landau-limit requires --theta 0");
        const double omega = resolve_omega(o);
        const double delta = mqrot::delta_from_omega(o.params, omega);
        for (int l = lr.lo; l <= lr.hi; ++l) {
            mqrot::ordered_json row;
            row["n"] = n_r;
            row["l"] = l;
            row["root_index"] = 0;
            row["branch"] = "+";
            row["xi_star"] = 0.0;
            row["delta"] = delta;
            row["omega"] = omega;
            row["energy"] = mqrot::landau_limit(o.params, n_r, l, omega);
            t.rows.push_back(row);
        }
        emit(t, o);
        return 0;
    }

    for (int n = nr.lo; n <= nr.hi; ++n)
        for (int l = lr.lo; l <= lr.hi; ++l)
            for (const auto& m : mqrot::solve_level(o.params, n, l))
                t.rows.push_back(mode_row(m));
    emit(t, o);
    return 0;
}

// ------------------------------------------------------------------- roots

int cmd_roots(const CommonOpts& o, const std::string& n_spec, const std::string& l_spec,
              bool dump_poly, bool strict) {
    const IntRange nr = parse_range(n_spec), lr = parse_range(l_spec);
    check_ranges(nr, lr);

    mqrot::Table t;
    t.meta["command"] = "roots";
    t.columns = {"n", "l_abs", "degree", "roots"};
    if (dump_poly) t.columns.push_back("poly_coeffs");

    bool any_missing = false;
    for (int n = nr.lo; n <= nr.hi; ++n) {
        for (int l = lr.lo; l <= lr.hi; ++l) {
            const int L = std::abs(l);
            if (l < 0 && lr.lo <= -l && -l <= lr.hi) continue;  // |l| dedup
            const auto poly = mqrot::constraint_polynomial(n, L);
            mqrot::ordered_json row;
            row["n"] = n;
            row["l_abs"] = L;
            row["degree"] = poly.degree();
            std::string joined;
            try {
                for (double r : mqrot::solve_xi(n, L)) {
                    if (!joined.empty()) joined += ';';
                    joined += mqrot::format_double(r);
                }
            } catch (const mqrot::NoPositiveRoot&) {
                any_missing = true;
            }
            row["roots"] = joined;
            if (dump_poly) {
                std::string pc;
                for (double c : poly.poly_coeffs) {
                    if (!pc.empty()) pc += ';';
                    pc += mqrot::format_double(c);
                }
                row["poly_coeffs"] = pc;
            }
            t.rows.push_back(row);
        }
    }
    emit(t, o);
    return (any_missing && strict) ? kExitNoRoot : 0;
}

// ------------------------------------------------------------ wavefunction

int cmd_wavefunction(const CommonOpts& o, int n, int l, int root_index, int samples,
                     double r_max) {
    o.params.validate();
    check_ranges({n, n}, {l, l});
    if (samples < 2) throw mqrot::InvalidParams("--samples must be >= 2");

    const int L = std::abs(l);
    const double Lambda = 2.0 * n + 2.0 + 2.0 * L;
    const auto roots = mqrot::solve_xi(n, L);
    if (root_index < 0 || root_index >= static_cast<int>(roots.size()))
        throw mqrot::InvalidParams("root_index out of range; level has " +
                                   std::to_string(roots.size()) + " root(s)");
    const double sgn = o.params.theta_pot < 0.0 ? -1.0 : 1.0;
    const double xi_star = sgn * roots[root_index];

    if (r_max <= 0.0) r_max = std::max(10.0, std::sqrt(Lambda) + 6.0);
    const auto series = mqrot::coefficients(L, xi_star, Lambda, n);
    const auto raw = mqrot::sample_radial(series, n, r_max, samples);
    const auto normed = mqrot::normalize(raw);

    mqrot::Table t;
    meta_params(t, o);
    t.meta["command"] = "wavefunction";
    t.meta["n"] = n;
    t.meta["l"] = l;
    t.meta["root_index"] = root_index;
    t.meta["xi_star"] = xi_star;
    t.meta["Lambda"] = Lambda;
    t.columns = {"r", "F", "F_normalized"};
    for (int i = 0; i < samples; ++i) {
        mqrot::ordered_json row;
        row["r"] = raw.grid[i];
        row["F"] = raw.values[i];
        row["F_normalized"] = normed.values[i];
        t.rows.push_back(row);
    }
    emit(t, o);
    return 0;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const CommonOpts& o, const std::string& n_spec, const std::string& l_spec,
               double r_max, int n_points, double xi_override, bool oscillator,
               double tolerance) {
    const mqrot::GridSpec grid{r_max, n_points};

    mqrot::Table t;
    meta_params(t, o);
    t.meta["command"] = "verify";
    t.meta["r_max"] = r_max;
    t.meta["n_points"] = n_points;
    t.meta["tolerance"] = tolerance;

    if (oscillator) {
        const IntRange lr = parse_range(l_spec);
        if (lr.empty() || std::abs(lr.lo) > 20 || std::abs(lr.hi) > 20)
            throw mqrot::InvalidParams("bad l range");
        t.columns = {"l_abs", "k", "lambda_numeric", "lambda_exact", "rel_error", "passed"};
        bool all_ok = true;
        for (int l = lr.lo; l <= lr.hi; ++l) {
            const int L = std::abs(l);
            if (l < 0 && lr.lo <= -l && -l <= lr.hi) continue;
            const auto ev = mqrot::lowest_eigenvalues_extrapolated(L, 0.0, grid, 3);
            for (int k = 0; k < 3; ++k) {
                const double exact = 4.0 * k + 2.0 * L + 2.0;
                const double rel = std::abs(ev[k] - exact) / exact;
                const bool ok = rel <= tolerance;
                all_ok = all_ok && ok;
                mqrot::ordered_json row;
                row["l_abs"] = L;
                row["k"] = k;
                row["lambda_numeric"] = ev[k];
                row["lambda_exact"] = exact;
                row["rel_error"] = rel;
                row["passed"] = ok;
                t.rows.push_back(row);
            }
        }
        emit(t, o);
        return all_ok ? 0 : kExitVerifyFailed;
    }

    o.params.validate();
    const IntRange nr = parse_range(n_spec), lr = parse_range(l_spec);
    check_ranges(nr, lr);

    t.columns = {"n", "l", "root_index", "branch", "xi_star", "Lambda_analytic",
                 "Lambda_numeric", "eigenindex", "node_count", "abs_error",
                 "richardson_error_estimate", "passed"};
    bool all_ok = true;
    for (int n = nr.lo; n <= nr.hi; ++n) {
        for (int l = lr.lo; l <= lr.hi; ++l) {
            for (const auto& mode : mqrot::solve_level(o.params, n, l)) {
                mqrot::QuantizedMode probe = mode;
                probe.xi_star *= xi_override;
                mqrot::ordered_json row;
                row["n"] = mode.n;
                row["l"] = mode.l;
                row["root_index"] = mode.root_index;
                row["branch"] = mode.branch > 0 ? "+" : "-";
                row["xi_star"] = probe.xi_star;
                try {
                    const auto rep = mqrot::verify_mode(probe, grid, tolerance);
                    row["Lambda_analytic"] = rep.Lambda_analytic;
                    row["Lambda_numeric"] = rep.Lambda_numeric;
                    row["eigenindex"] = rep.eigenindex;
                    row["node_count"] = rep.node_count;
                    row["abs_error"] = rep.abs_error;
                    row["richardson_error_estimate"] = rep.richardson_error_estimate;
                    row["passed"] = rep.passed;
                    all_ok = all_ok && rep.passed;
                } catch (const mqrot::NoMatchingEigenvalue&) {
                    row["Lambda_analytic"] = 2.0 * mode.n + 2.0 + 2.0 * std::abs(mode.l);
                    row["Lambda_numeric"] = nullptr;
                    row["eigenindex"] = -1;
                    row["node_count"] = -1;
                    row["abs_error"] = nullptr;
                    row["richardson_error_estimate"] = nullptr;
                    row["passed"] = false;
                    all_ok = false;
                }
                t.rows.push_back(row);
            }
        }
    }
    emit(t, o);
    return all_ok ? 0 : kExitVerifyFailed;
}

// ------------------------------------------------------------------- sweep

int cmd_sweep(const CommonOpts& o, const std::string& n_spec, const std::string& l_spec,
              std::vector<double> omega_frame_list, std::vector<double> theta_list,
              bool keep_going, const std::string& from_json) {
    if (!from_json.empty()) {
        emit(load_json_table(from_json), o);
        return 0;
    }

    o.params.validate();
    const IntRange nr = parse_range(n_spec), lr = parse_range(l_spec);
    check_ranges(nr, lr);
    if (omega_frame_list.empty()) omega_frame_list = {o.params.Omega};
    if (theta_list.empty()) theta_list = {o.params.theta_pot};

    struct Task {
        double Omega, theta;
        int n, l;
    };
    std::vector<Task> tasks;
    for (double Om : omega_frame_list)
        for (double th : theta_list)
            for (int n = nr.lo; n <= nr.hi; ++n)
                for (int l = lr.lo; l <= lr.hi; ++l)
                    tasks.push_back({Om, th, n, l});

    struct Result {
        std::vector<mqrot::QuantizedMode> modes;
        std::string error;
        bool no_root = false;
    };
    std::vector<Result> results(tasks.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            mqrot::PhysicalParams p = o.params;
            p.Omega = tasks[i].Omega;
            p.theta_pot = tasks[i].theta;
            try {
                results[i].modes = mqrot::solve_level(p, tasks[i].n, tasks[i].l);
            } catch (const mqrot::NoPositiveRoot& e) {
                results[i].error = e.what();
                results[i].no_root = true;
            } catch (const std::exception& e) {
                results[i].error = e.what();
            }
        }
    };
    const int n_threads = std::max(1, std::min<int>(o.jobs, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    mqrot::Table t;
    meta_params(t, o);
    t.meta["command"] = "sweep";
    t.columns = {"Omega", "theta"};
    t.columns.insert(t.columns.end(), kModeColumns.begin(), kModeColumns.end());
    if (keep_going) t.columns.push_back("error");

    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (!results[i].error.empty()) {
            if (!keep_going) {
                std::cerr << "error: " << results[i].error << "\n";
                return results[i].no_root ? kExitNoRoot : kExitInvalid;
            }
            mqrot::ordered_json row;
            row["Omega"] = tasks[i].Omega;
            row["theta"] = tasks[i].theta;
            for (const auto& c : kModeColumns) row[c] = nullptr;
            row["n"] = tasks[i].n;
            row["l"] = tasks[i].l;
            row["error"] = results[i].error;
            t.rows.push_back(row);
            continue;
        }
        for (const auto& m : results[i].modes) {
            mqrot::ordered_json row;
            row["Omega"] = tasks[i].Omega;
            row["theta"] = tasks[i].theta;
            row.update(mode_row(m));
            if (keep_going) row["error"] = "";
            t.rows.push_back(row);
        }
    }
    emit(t, o);
    return 0;
}

// -------------------------------------------------------------------- main

std::vector<std::string> apply_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string config_path;
    for (std::size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == "--config") config_path = args[i + 1];
    if (config_path.empty()) return args;

    std::ifstream in(config_path);
    if (!in) throw mqrot::InvalidParams("cannot open config file: " + config_path);
    std::vector<std::string> cfg;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        cfg.push_back("--" + key);
        if (val == "true") continue;  // bare flag
        cfg.push_back(val);
    }
    // Config tokens go right after the subcommand so explicit flags win.
    std::vector<std::string> merged;
    merged.push_back(args.front());
    merged.insert(merged.end(), cfg.begin(), cfg.end());
    merged.insert(merged.end(), args.begin() + 1, args.end());
    return merged;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantized cyclotron frequencies and energy levels of a rotating "
                 "magnetic-quadrupole atom with an inverse-radial potential"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string n_spec = "1", l_spec = "0", from_json;
    bool landau = false, dump_poly = false, strict = false, keep_going = false;
    bool oscillator = false;
    int n_r = 0, root_index = 0, samples = 1001, n_points = 4000;
    double r_max_wf = 0.0, r_max = 10.0, xi_override = 1.0, tolerance = 1e-4;
    std::vector<double> omega_frame_list, theta_list;

    auto* sp = app.add_subcommand("spectrum", "allowed frequencies and energies per (n, l)");
    add_common(sp, o);
    sp->add_option("--n", n_spec, "level index or range, e.g. 1 or 1..3");
    sp->add_option("--l", l_spec, "angular momentum or range, e.g. -2..2");
    sp->add_flag("--landau-limit", landau, "theta = 0 oscillator spectrum at fixed omega");
    sp->add_option("--nr", n_r, "radial oscillator index (0-based, landau limit only)");
    sp->add_option("--from-json", from_json, "re-emit a previously written JSON table");

    auto* rt = app.add_subcommand("roots", "positive roots of the truncation constraint");
    add_common(rt, o);
    rt->add_option("--n", n_spec, "level index or range");
    rt->add_option("--l", l_spec, "angular momentum or range");
    rt->add_flag("--dump-poly", dump_poly, "include exact polynomial coefficients");
    rt->add_flag("--strict", strict, "exit 3 if any (n, l) has no positive root");

    auto* wf = app.add_subcommand("wavefunction", "sample the radial wavefunction F(r)");
    add_common(wf, o);
    int wf_n = 1, wf_l = 0;
    wf->add_option("--n", wf_n, "level index");
    wf->add_option("--l", wf_l, "angular momentum");
    wf->add_option("--root-index", root_index, "which positive root (ascending)");
    wf->add_option("--samples", samples, "number of grid points");
    wf->add_option("--r-max", r_max_wf, "grid end (default max(10, sqrt(Lambda)+6))");

    auto* vf = app.add_subcommand("verify", "check modes against the numerical eigensolver");
    add_common(vf, o);
    vf->add_option("--n", n_spec, "level index or range");
    vf->add_option("--l", l_spec, "angular momentum or range");
    vf->add_option("--r-max", r_max, "oracle domain truncation");
    vf->add_option("--n-points", n_points, "oracle interior grid points");
    vf->add_option("--xi-override", xi_override, "multiply xi* by this detuning factor");
    vf->add_flag("--oscillator", oscillator, "check the xi = 0 oscillator ladder instead");
    vf->add_option("--tolerance", tolerance, "relative tolerance after Richardson");

    auto* sw = app.add_subcommand("sweep", "solve_level over (n, l) x parameter lists");
    add_common(sw, o);
    sw->add_option("--n", n_spec, "level range");
    sw->add_option("--l", l_spec, "angular momentum range");
    sw->add_option("--Omega-list", omega_frame_list, "rotation rates to sweep")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    sw->add_option("--theta-list", theta_list, "potential strengths to sweep")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    sw->add_flag("--keep-going", keep_going, "report per-row errors instead of aborting");
    sw->add_option("--from-json", from_json, "re-emit a previously written JSON table");

    try {
        const auto args = apply_config(argc, argv);
        std::vector<const char*> cargs;
        cargs.push_back(argv[0]);
        for (const auto& a : args) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());

        if (sp->parsed())
            return cmd_spectrum(o, n_spec, l_spec, landau, n_r, from_json);
        if (rt->parsed())
            return cmd_roots(o, n_spec, l_spec, dump_poly, strict);
        if (wf->parsed())
            return cmd_wavefunction(o, wf_n, wf_l, root_index, samples, r_max_wf);
        if (vf->parsed())
            return cmd_verify(o, n_spec, l_spec, r_max, n_points, xi_override,
                              oscillator, tolerance);
        if (sw->parsed())
            return cmd_sweep(o, n_spec, l_spec, omega_frame_list, theta_list,
                             keep_going, from_json);
        return kExitInvalid;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    } catch (const mqrot::NoPositiveRoot& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoRoot;
    } catch (const mqrot::InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const mqrot::SolverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
