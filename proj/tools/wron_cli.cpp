#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "wron/density.hpp"
#include "wron/errors.hpp"
#include "wron/suites.hpp"

namespace {

using wron::SuiteConfig;
using wron::SuiteFormat;

std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw wron::IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out.good()) throw wron::IoError("failed writing '" + path + "'");
}

struct CommonFlags {
    SuiteConfig config;
    std::string format = "csv";

    void attach(CLI::App* cmd) {
        cmd->add_option("--n-max", config.n_max, "Largest family size n")
            ->capture_default_str();
        cmd->add_option("--k-max", config.k_max, "Largest offset k")
            ->capture_default_str();
        cmd->add_option("--tol", config.tol, "Numeric tolerance")->capture_default_str();
        cmd->add_option("--format", format, "Report format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", config.output_path, "Write the report to this path");
        cmd->add_option("--threads", config.threads,
                        "Worker threads (0 = hardware concurrency)")
            ->capture_default_str();
        cmd->add_option("--seed", config.seed, "Seed for randomized checks")
            ->capture_default_str();
    }

    SuiteConfig resolved(const std::string& suite) const {
        SuiteConfig out = config;
        out.suite = suite;
        out.format = format == "json" ? SuiteFormat::Json : SuiteFormat::Csv;
        return out;
    }
};

int run_verify(const SuiteConfig& config) {
    const std::vector<wron::SuiteReport> reports = wron::run_suites(config);
    wron::write_report_file(reports, config);
    bool all_pass = true;
    for (const auto& report : reports) {
        std::cout << report.suite << ": " << report.passed << "/" << report.cells.size()
                  << " cells passed (" << report.wall_time_ms << " ms)\n";
        if (report.failed != 0) all_pass = false;
    }
    if (!all_pass) {
        for (const auto& report : reports) {
            for (const auto& cell : report.cells) {
                if (!cell.pass) {
                    std::cerr << "FAIL " << report.suite << " n=" << cell.n
                              << " k=" << cell.k << " " << cell.detail << "\n";
                }
            }
        }
        return 1;
    }
    return 0;
}

int run_table(const SuiteConfig& config) {
    const std::vector<wron::SuiteReport> reports = wron::run_suites(config);
    write_text(config.output_path, emit_tables(reports, config.format));
    bool all_pass = true;
    for (const auto& report : reports) {
        if (report.failed != 0) all_pass = false;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Wronskian/Gegenbauer identities and the "
                 "killed-Brownian-motion transition density"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read key=value defaults from this file");
    app.allow_config_extras(CLI::config_extras_mode::error);

    std::string suite_help = "Suite name (";
    for (size_t i = 0; i < wron::suite_names().size(); ++i) {
        suite_help += (i ? ", " : "") + wron::suite_names()[i];
    }
    suite_help += ")";

    // verify <suite>
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string verify_suite;
    verify->add_option("suite", verify_suite, suite_help)->required();
    CommonFlags verify_flags;
    verify_flags.attach(verify);

    // table <suite>
    auto* table = app.add_subcommand("table", "Emit a suite's full result table");
    std::string table_suite;
    table->add_option("suite", table_suite, suite_help)->required();
    CommonFlags table_flags;
    table_flags.attach(table);

    // density
    auto* density_cmd = app.add_subcommand("density", "Evaluate the transition density");
    double mu = 0, t = 1, x = 0.5, y = 0.5, tol = 1e-12;
    density_cmd->add_option("--mu", mu, "Killing-rate strength")->capture_default_str();
    density_cmd->add_option("--t", t, "Time")->capture_default_str();
    density_cmd->add_option("--x", x, "Start point in (0,1)")->capture_default_str();
    density_cmd->add_option("--y", y, "End point in (0,1)")->capture_default_str();
    density_cmd->add_option("--tol", tol, "Absolute truncation tolerance")
        ->capture_default_str();
    std::string density_out;
    density_cmd->add_option("--out", density_out, "Write CSV to this path");

    // density-grid
    auto* grid_cmd = app.add_subcommand("density-grid",
                                        "Evaluate the density on a rectangular grid");
    double g_mu = 0, g_t = 1, g_tol = 1e-12;
    int g_nx = 9, g_ny = 9;
    grid_cmd->add_option("--mu", g_mu, "Killing-rate strength")->capture_default_str();
    grid_cmd->add_option("--t", g_t, "Time")->capture_default_str();
    grid_cmd->add_option("--nx", g_nx, "Interior grid points in x")->capture_default_str();
    grid_cmd->add_option("--ny", g_ny, "Interior grid points in y")->capture_default_str();
    grid_cmd->add_option("--tol", g_tol, "Absolute truncation tolerance")
        ->capture_default_str();
    std::string grid_out;
    grid_cmd->add_option("--out", grid_out, "Write CSV to this path");

    // eigen
    auto* eigen_cmd = app.add_subcommand("eigen", "Tabulate eigenfunctions/eigenvalues");
    double e_mu = 0, e_x = 0.5;
    int e_kmax = 8;
    eigen_cmd->add_option("--mu", e_mu, "Killing-rate strength")->capture_default_str();
    eigen_cmd->add_option("--x", e_x, "Evaluation point in (0,1)")->capture_default_str();
    eigen_cmd->add_option("--k-max", e_kmax, "Largest index k")->capture_default_str();
    std::string eigen_out;
    eigen_cmd->add_option("--out", eigen_out, "Write CSV to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) return run_verify(verify_flags.resolved(verify_suite));
        if (*table) return run_table(table_flags.resolved(table_suite));
        if (*density_cmd) {
            const wron::KilledBMModel model = wron::make_model(mu);
            const wron::DensityResult r = wron::density(model, {t, x, y, tol});
            std::string text = "t,x,y,value,terms_used,tail_bound\n";
            text += format_float(t) + "," + format_float(x) + "," + format_float(y) + "," +
                    format_float(r.value) + "," + std::to_string(r.terms_used) + "," +
                    format_float(r.tail_bound) + "\n";
            write_text(density_out, text);
            return 0;
        }
        if (*grid_cmd) {
            if (g_nx < 1 || g_ny < 1) throw wron::ConfigError("--nx/--ny must be positive");
            const wron::KilledBMModel model = wron::make_model(g_mu);
            std::string text = "x,y,value\n";
            for (int i = 1; i <= g_nx; ++i) {
                for (int j = 1; j <= g_ny; ++j) {
                    const double xx = double(i) / (g_nx + 1);
                    const double yy = double(j) / (g_ny + 1);
                    const wron::DensityResult r =
                        wron::density(model, {g_t, xx, yy, g_tol});
                    text += format_float(xx) + "," + format_float(yy) + "," +
                            format_float(r.value) + "\n";
                }
            }
            write_text(grid_out, text);
            return 0;
        }
        if (*eigen_cmd) {
            if (e_kmax < 0) throw wron::ConfigError("--k-max must be nonnegative");
            const wron::KilledBMModel model = wron::make_model(e_mu);
            const double pi = 3.14159265358979323846;
            std::string text = "k,eigenvalue,value\n";
            for (int k = 0; k <= e_kmax; ++k) {
                const double lambda = -0.5 * pi * pi * (model.nu + k) * (model.nu + k);
                text += std::to_string(k) + "," + format_float(lambda) + "," +
                        format_float(wron::eigenfunction_value(model, unsigned(k), e_x)) +
                        "\n";
            }
            write_text(eigen_out, text);
            return 0;
        }
    } catch (const wron::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wron::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
