#pragma once

/**
 * @file cli.hpp
 * @brief Command-line driver. Kept in a header-level run() entry point so
 *        the binary stays a thin wrapper and the whole surface is testable
 *        in-process.
 *
 * Exit codes: 0 success / all checks passed, 1 numeric check failure,
 * 2 usage error. Result values go to stdout; logs go to the error stream;
 * verify suites never write files.
 */

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gksum/checks.hpp"
#include "gksum/equidistribution.hpp"
#include "gksum/geometry.hpp"
#include "gksum/grid.hpp"
#include "gksum/lucas.hpp"
#include "gksum/modular.hpp"
#include "gksum/render.hpp"
#include "gksum/suites.hpp"
#include "gksum/sums.hpp"

namespace gksum::cli {

namespace detail {

/// %.12f with the sign of a sub-resolution negative zeroed out, so printed
/// values are stable golden files.
inline std::string fixed12(double v) {
    if (v < 0.0 && v > -5e-13) v = 0.0;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

inline void print_suite(const SuiteReport& rep, std::ostream& out) {
    for (const auto& check : rep.checks) {
        out << (check.pass ? "PASS" : "FAIL") << "  " << check.name;
        if (!check.detail.empty()) out << "  (" << check.detail << ")";
        out << "\n";
    }
    out << "suite " << rep.suite << ": " << rep.checks.size() << " checks, "
        << rep.failures() << " failures\n";
}

struct CsvRow {
    int64_t a, b;
    double re, im;
    std::int32_t cls;
};

inline bool parse_csv_row(const std::string& line, CsvRow& row) {
    const char* p = line.data();
    const char* end = p + line.size();
    auto field = [&](auto& value) {
        auto res = std::from_chars(p, end, value);
        if (res.ec != std::errc{}) return false;
        p = res.ptr;
        if (p < end && *p == ',') ++p;
        return true;
    };
    return field(row.a) && field(row.b) && field(row.re) && field(row.im) && field(row.cls);
}

}  // namespace detail

/// Runs the CLI on the given arguments (without the program name).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"generalized Kloosterman sum toolkit"};
    app.require_subcommand(1);

    // eval
    int64_t m = 0, omega = 0, a = 0, b = 0;
    auto* eval = app.add_subcommand("eval", "evaluate one sum K(a,b,m,<omega>)");
    eval->add_option("--m", m, "modulus")->required();
    eval->add_option("--omega", omega, "subgroup generator")->required();
    eval->add_option("--a", a, "first argument")->required();
    eval->add_option("--b", b, "second argument")->required();

    // grid
    int64_t grid_m = 0, grid_omega = 0, grid_order = 0, grid_b = -1;
    std::string grid_out;
    int threads = 0;
    bool force = false;
    auto* grid_cmd = app.add_subcommand("grid", "evaluate a full grid and write CSV");
    grid_cmd->add_option("--m", grid_m, "modulus")->required();
    auto* om = grid_cmd->add_option("--omega", grid_omega, "subgroup generator");
    auto* od = grid_cmd->add_option("--order", grid_order, "subgroup order (odd prime power m)");
    om->excludes(od);
    grid_cmd->add_option("--b", grid_b, "restrict to a single b column");
    grid_cmd->add_option("--out", grid_out, "output CSV path")->required();
    grid_cmd->add_option("--threads", threads, "worker threads (default: all cores)");
    grid_cmd->add_flag("--force", force, "allow grids with m > 20000");

    // plot
    std::string plot_in, plot_out, scheme_name;
    int64_t scheme_k = 0, scheme_p = 0, overlay_d = 0;
    double point_radius = 1.4;
    int canvas = 1000;
    auto* plot_cmd = app.add_subcommand("plot", "render a grid CSV as an SVG scatter plot");
    plot_cmd->add_option("--in", plot_in, "input CSV path")->required();
    plot_cmd->add_option("--scheme", scheme_name, "sum-mod-k | legendre-ab | dlog-diff-mod-4 | constant")
        ->required();
    plot_cmd->add_option("--k", scheme_k, "k for sum-mod-k");
    plot_cmd->add_option("--p", scheme_p, "prime for legendre-ab / dlog-diff-mod-4");
    plot_cmd->add_option("--overlay-hypocycloid", overlay_d, "overlay the boundary of H_d");
    plot_cmd->add_option("--out", plot_out, "output SVG path")->required();
    plot_cmd->add_option("--radius", point_radius, "marker radius in px");
    plot_cmd->add_option("--canvas", canvas, "canvas size in px");

    // verify
    std::string suite;
    int64_t verify_p = 0;
    uint64_t seed = kDefaultSeed;
    auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    verify_cmd
        ->add_option("suite", suite,
                     "oracle | symmetry | crt | salie | duke-identity | theorem3 | halving | "
                     "theorem5 | conjecture-report | hypocycloid | tiled | weyl | lucas")
        ->required();
    verify_cmd->add_option("--p", verify_p,
                           "restrict theorem3/theorem5/conjecture-report to one prime");
    verify_cmd->add_option("--seed", seed, "seed for sampled checks");
    verify_cmd->add_option("--threads", threads, "worker threads");

    // spider
    int spider_rows = 0;
    bool spider_csv = false;
    auto* spider_cmd = app.add_subcommand("spider", "print the spider-modulus table");
    spider_cmd->add_option("--rows", spider_rows, "number of table entries (n = 3..rows+2)")
        ->required();
    spider_cmd->add_flag("--csv", spider_csv, "emit CSV instead of aligned text");

    // decompose
    int64_t m1 = 0, m2 = 0;
    auto* dec_cmd = app.add_subcommand("decompose", "multiplicative decomposition of one sum");
    dec_cmd->add_option("--m1", m1, "first factor of the modulus")->required();
    dec_cmd->add_option("--m2", m2, "second factor of the modulus")->required();
    dec_cmd->add_option("--omega", omega, "subgroup generator mod m1*m2")->required();
    dec_cmd->add_option("--a", a, "first argument")->required();
    dec_cmd->add_option("--b", b, "second argument")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (eval->parsed()) {
            Complex v = gks(a, b, subgroup_from_generator(m, omega));
            out << detail::fixed12(v.real()) << ", " << detail::fixed12(v.imag()) << "\n";
            return 0;
        }

        if (grid_cmd->parsed()) {
            if (grid_m > 20000 && !force) {
                err << "grid: m = " << grid_m
                    << " exceeds 20000; pass --force to run a quadratic-size grid\n";
                return 2;
            }
            if (om->count() == 0 && od->count() == 0) {
                err << "grid: one of --omega or --order is required\n";
                return 2;
            }
            UnitSubgroup sub = om->count() ? subgroup_from_generator(grid_m, grid_omega)
                                           : subgroup_of_order(grid_m, grid_order);
            IndexRange brange{0, grid_m};
            if (grid_cmd->count("--b")) {
                if (grid_b < 0 || grid_b >= grid_m) {
                    err << "grid: --b must lie in [0, m)\n";
                    return 2;
                }
                brange = {grid_b, grid_b + 1};
            }
            SumGrid grid = gks_grid(sub, {0, grid_m}, brange, threads);
            std::ofstream fout(grid_out, std::ios::binary);
            if (!fout) {
                err << "grid: cannot open " << grid_out << "\n";
                return 2;
            }
            std::size_t rows = write_csv(grid, fout);
            err << "grid: m=" << grid_m << " order=" << sub.order << " rows=" << rows
                << " -> " << grid_out << "\n";
            return 0;
        }

        if (plot_cmd->parsed()) {
            ColorScheme scheme = ColorScheme::constant();
            if (scheme_name == "sum-mod-k") {
                if (scheme_k < 1) {
                    err << "plot: sum-mod-k requires --k\n";
                    return 2;
                }
                scheme = ColorScheme::sum_mod(scheme_k);
            } else if (scheme_name == "legendre-ab") {
                if (scheme_p < 3) {
                    err << "plot: legendre-ab requires an odd prime --p\n";
                    return 2;
                }
                scheme = ColorScheme::legendre_ab(scheme_p);
            } else if (scheme_name == "dlog-diff-mod-4") {
                if (scheme_p < 3) {
                    err << "plot: dlog-diff-mod-4 requires an odd prime --p\n";
                    return 2;
                }
                scheme = ColorScheme::dlog_diff(scheme_p);
            } else if (scheme_name != "constant") {
                err << "plot: unknown scheme " << scheme_name << "\n";
                return 2;
            }

            HypocycloidRegion overlay;
            SvgOptions options;
            options.point_radius = point_radius;
            options.canvas_size = canvas;
            if (plot_cmd->count("--overlay-hypocycloid")) {
                overlay = boundary_samples(static_cast<int>(overlay_d));
                options.overlay = &overlay;
            }

            std::ifstream fin(plot_in);
            if (!fin) {
                err << "plot: cannot open " << plot_in << "\n";
                return 2;
            }
            ScatterPlot plot(options);
            std::string line;
            std::getline(fin, line);  // header
            std::size_t rows = 0;
            while (std::getline(fin, line)) {
                if (line.empty()) continue;
                detail::CsvRow row{};
                if (!detail::parse_csv_row(line, row)) {
                    err << "plot: malformed CSV row: " << line << "\n";
                    return 2;
                }
                plot.add(row.re, row.im, scheme.classify(row.a, row.b));
                ++rows;
            }
            std::ofstream fout(plot_out, std::ios::binary);
            if (!fout) {
                err << "plot: cannot open " << plot_out << "\n";
                return 2;
            }
            std::size_t bytes = plot.write(fout);
            err << "plot: " << rows << " points -> " << plot_out << " (" << bytes
                << " bytes)\n";
            return 0;
        }

        if (verify_cmd->parsed()) {
            SuiteReport rep;
            bool gating = true;
            if (suite == "oracle") {
                rep = run_oracle_suite(seed);
            } else if (suite == "symmetry") {
                rep = run_symmetry_suite(seed);
            } else if (suite == "crt") {
                rep = run_crt_suite(seed);
            } else if (suite == "salie") {
                rep = run_salie_suite();
            } else if (suite == "duke-identity") {
                rep = run_duke_suite();
            } else if (suite == "theorem3") {
                rep = verify_p ? run_theorem3_suite({verify_p}, threads)
                               : run_theorem3_suite({7, 379, 1907}, threads);
            } else if (suite == "halving") {
                rep = run_halving_suite();
            } else if (suite == "theorem5") {
                if (verify_p) {
                    SuiteReport r("theorem5");
                    Theorem5Report t = theorem5_check(verify_p, verify_p > 200 ? 5000 : 0, seed);
                    r.add(gksum::detail::fmt("p%lld", static_cast<long long>(verify_p)), t.pass(), "");
                    rep = r;
                } else {
                    rep = run_theorem5_suite(seed);
                }
            } else if (suite == "conjecture-report") {
                gating = false;
                if (verify_p) {
                    SuiteReport r("conjecture-report");
                    ConjectureReport c =
                        conjecture_report(verify_p, verify_p > 200 ? 5000 : 0, seed);
                    r.add(gksum::detail::fmt("p%lld", static_cast<long long>(verify_p)), true,
                          gksum::detail::fmt("max|Im| per class {%.4f, %.4f, %.2e, %.4f}",
                                      c.stats.max_abs_im[0], c.stats.max_abs_im[1],
                                      c.stats.max_abs_im[2], c.stats.max_abs_im[3]));
                    rep = r;
                } else {
                    rep = run_conjecture_suite(seed);
                }
            } else if (suite == "hypocycloid") {
                rep = run_hypocycloid_suite(threads, seed);
            } else if (suite == "tiled") {
                rep = run_tiled_suite(seed);
            } else if (suite == "weyl") {
                rep = run_weyl_suite(seed);
            } else if (suite == "lucas") {
                rep = run_lucas_suite();
            } else {
                err << "verify: unknown suite " << suite << "\n";
                return 2;
            }
            detail::print_suite(rep, out);
            return (gating && !rep.pass()) ? 1 : 0;
        }

        if (spider_cmd->parsed()) {
            if (spider_rows < 1) {
                err << "spider: --rows must be positive\n";
                return 2;
            }
            std::vector<LucasRow> rows = spider_table(spider_rows + 2);
            if (spider_csv) {
                out << "n,p,lucas,phi\n";
                for (const LucasRow& r : rows)
                    out << r.n << "," << r.p_n << "," << r.lucas << "," << r.phi << "\n";
            } else {
                char line[128];
                std::snprintf(line, sizeof line, "%4s %6s %12s %12s\n", "n", "p(n)", "L(p(n))",
                              "phi");
                out << line;
                for (const LucasRow& r : rows) {
                    std::snprintf(line, sizeof line, "%4d %6lld %12lld %12lld\n", r.n,
                                  static_cast<long long>(r.p_n),
                                  static_cast<long long>(r.lucas),
                                  static_cast<long long>(r.phi));
                    out << line;
                }
            }
            return 0;
        }

        if (dec_cmd->parsed()) {
            CrtDecomposition d = crt_decompose(a, b, m1, m2, omega);
            out << "left = " << detail::fixed12(d.left.real()) << ", "
                << detail::fixed12(d.left.imag()) << "\n";
            out << "right = " << detail::fixed12(d.right.real()) << ", "
                << detail::fixed12(d.right.imag()) << "\n";
            out << "product = " << detail::fixed12(d.product.real()) << ", "
                << detail::fixed12(d.product.imag()) << "\n";
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace gksum::cli
