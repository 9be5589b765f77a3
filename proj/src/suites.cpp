#include "wron/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <thread>

#include "wron/darboux.hpp"
#include "wron/density.hpp"
#include "wron/errors.hpp"
#include "wron/orthopoly.hpp"
#include "wron/serialization.hpp"
#include "wron/sincos_form.hpp"
#include "wron/wronskian.hpp"

namespace wron {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Task = std::function<CellRecord()>;

// (-2)^(n(n-1)/2) * G(n+1), the scalar of the k=0 base row.
Rational larsen_prefactor(int n) {
    const unsigned tri = unsigned(n) * unsigned(n - 1) / 2;
    Integer c = pow2(tri) * barnes_g(unsigned(n) + 1);
    if (tri % 2 == 1) c = -c;
    return Rational(c);
}

std::vector<CellRecord> run_cells(std::vector<Task> tasks, int threads) {
    std::vector<CellRecord> out(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<size_t> next{0};
    const auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                out[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    int n_threads = threads;
    if (n_threads <= 0) n_threads = std::max(1u, std::thread::hardware_concurrency());
    n_threads = int(std::min<size_t>(size_t(n_threads), std::max<size_t>(tasks.size(), 1)));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

std::vector<Task> theorem1_tasks(const SuiteConfig& config) {
    const char* inject_env = std::getenv("WRON_FAULT_INJECT");
    const bool inject = inject_env != nullptr && *inject_env != '\0';
    std::vector<Task> tasks;
    for (int n = 1; n <= config.n_max; ++n) {
        for (int k = 0; k <= config.k_max; ++k) {
            tasks.push_back([n, k, inject] {
                const VerificationRecord rec = verify_theorem1(n, k);
                CellRecord cell{n, k, rec.pass, "degree=" + std::to_string(rec.degree), {}};
                cell.extra = nlohmann::json{
                    {"degree", rec.degree},
                    {"method_times_ms",
                     {{"bruteforce", rec.bruteforce_ms},
                      {"recurrence", rec.recurrence_ms},
                      {"closed_form", rec.closed_ms}}}};
                if (inject && n == 1 && k == 0) {
                    cell.pass = false;
                    cell.detail = "fault-injected";
                }
                return cell;
            });
        }
    }
    return tasks;
}

std::vector<Task> lemma1_tasks(const SuiteConfig& config) {
    std::vector<Task> tasks;
    for (int n = 1; n <= config.n_max; ++n) {
        tasks.push_back([n] {
            const FourierPoly lhs = w_bruteforce(n, 1);
            const unsigned a = unsigned(n) * unsigned(n + 1) / 2;
            const FourierPoly rhs = from_sincos_form(sc_from_sin_power_profile(
                a, UPoly::monomial(1, PiScalar(larsen_prefactor(n) * 2 * n))));
            return CellRecord{n, 1, lhs == rhs, "exact", {}};
        });
    }
    return tasks;
}

std::vector<Task> lemma2_tasks(const SuiteConfig& config) {
    std::vector<Task> tasks;
    for (int n = 2; n <= config.n_max; ++n) {
        for (int k = 0; k <= config.k_max; ++k) {
            tasks.push_back([n, k] {
                // All three values from brute force alone: this certifies the
                // recursion as an identity, not the induction fill.
                Integer c = pow2(unsigned(n) - 1) * (n + k + 1) * factorial(unsigned(n) - 2);
                if ((n - 1) % 2 == 1) c = -c;
                const FourierPoly defect =
                    w_bruteforce(n, k + 2) - w_bruteforce(n, k) -
                    (sin_power_poly(unsigned(n)) * w_bruteforce(n - 1, k + 2))
                        .scaled(PiScalar(Rational(c)));
                return CellRecord{n, k, defect.is_zero(), "exact", {}};
            });
        }
    }
    return tasks;
}

std::vector<Task> cnk_tasks(const SuiteConfig& config) {
    std::vector<Task> tasks;
    for (int n = 2; n <= config.n_max; ++n) {
        for (int k = 0; k <= config.k_max; ++k) {
            tasks.push_back([n, k] {
                const bool rec = verify_cnk_recurrence(unsigned(n), unsigned(k));
                const bool ode = verify_gegenbauer_ode(unsigned(k), Rational(n));
                return CellRecord{n, k, rec && ode,
                                  std::string("recurrence=") + (rec ? "ok" : "FAIL") +
                                      ";ode=" + (ode ? "ok" : "FAIL"),
                                  {}};
            });
        }
    }
    return tasks;
}

std::vector<Task> orthogonality_tasks(const SuiteConfig& config) {
    std::vector<Task> tasks;
    for (int nu = 1; nu <= config.n_max; ++nu) {
        for (int k = 0; k <= config.k_max; ++k) {
            const int l_max = config.k_max;
            tasks.push_back([nu, k, l_max] {
                bool ok = true;
                for (int l = 0; l <= l_max; ++l) {
                    const PiScalar integral =
                        gegenbauer_orthogonality_integral(unsigned(k), unsigned(l), unsigned(nu));
                    const PiScalar expected =
                        l == k ? gegenbauer_norm_closed_form(unsigned(k), unsigned(nu))
                               : PiScalar();
                    if (!(integral == expected)) {
                        ok = false;
                        break;
                    }
                }
                return CellRecord{nu, k, ok, "l=0.." + std::to_string(l_max), {}};
            });
        }
    }
    return tasks;
}

std::vector<Task> darboux_tasks(const SuiteConfig& config) {
    std::vector<Task> tasks;
    for (int n = 2; n <= config.n_max; ++n) {
        for (int k = 0; k <= config.k_max; ++k) {
            tasks.push_back([n, k] {
                const bool residual_zero = eigen_residual(n, k).is_zero();
                const PiScalar c = constant_C(n, k);
                const Rational c_coeff = c.coeff(n - 1);
                const bool c_ok = c.is_monomial() && abs(c_coeff) == 1;
                const bool nu_ok = verify_nu_consistency(n);

                bool intertwine_ok = true;
                if (k >= 1 && n + 1 <= 9) {
                    const ChainFunction g = crum_ratio(n, k);
                    const ChainFunction gt = darboux_apply_groundseed(n, g);
                    const ChainFunction direct = crum_ratio(n + 1, k - 1);
                    intertwine_ok = gt.form == direct.form &&
                                    gt.pi_prefactor == direct.pi_prefactor;
                }

                const PiScalar nsq = norm_sq(crum_ratio(n, k));
                CellRecord cell{n, k, residual_zero && c_ok && nu_ok && intertwine_ok,
                                "C=" + c.str(), {}};
                cell.extra = nlohmann::json{{"residual_zero", residual_zero},
                                            {"norm_sq", pi_scalar_to_json(nsq)},
                                            {"C_sign", c_coeff < 0 ? -1 : 1},
                                            {"C_pi_power", n - 1}};
                return cell;
            });
        }
    }
    return tasks;
}

std::vector<Task> prop3_tasks(const SuiteConfig& config) {
    std::vector<Task> tasks;
    for (int n = 2; n <= config.n_max; ++n) {
        for (int k = 1; k <= config.k_max; ++k) {
            tasks.push_back([n, k] {
                return CellRecord{n, k, verify_prop3(n, k), "exact", {}};
            });
        }
    }
    return tasks;
}

std::vector<Task> norms_tasks(const SuiteConfig& config) {
    std::vector<Task> tasks;
    for (int n = 2; n <= config.n_max; ++n) {
        for (int k = 1; k <= config.k_max; ++k) {
            tasks.push_back([n, k] {
                const bool rec = verify_norm_recurrence(n, k);
                const bool closed =
                    norm_sq(crum_ratio(n, k)) == chain_norm_closed_form(n, k);
                return CellRecord{n, k, rec && closed,
                                  std::string("recurrence=") + (rec ? "ok" : "FAIL") +
                                      ";closed_form=" + (closed ? "ok" : "FAIL"),
                                  {}};
            });
        }
    }
    return tasks;
}

double mu_for_nu(double nu) { return kPi * kPi * nu * (nu - 1.0) / 2.0; }

std::vector<Task> density_tasks(const SuiteConfig& config) {
    const std::vector<double> nus = {1.0, 2.0, 3.7};
    const std::vector<double> ts = {0.05, 0.2, 1.0};
    std::vector<Task> tasks;
    for (size_t i = 0; i < nus.size(); ++i) {
        for (size_t j = 0; j < ts.size(); ++j) {
            const double nu = nus[i], t = ts[j];
            const double oracle_tol = config.tol;
            tasks.push_back([nu, t, i, j, oracle_tol] {
                const KilledBMModel model = make_model(mu_for_nu(nu));

                double sym_defect = 0;
                for (double x : {0.25, 0.5, 0.75}) {
                    for (double y : {0.25, 0.5, 0.75}) {
                        const double pxy = density(model, {t, x, y, 1e-12}).value;
                        const double pyx = density(model, {t, y, x, 1e-12}).value;
                        sym_defect = std::max(sym_defect, std::abs(pxy - pyx));
                    }
                }
                const bool sym_ok = sym_defect <= 1e-14;

                bool mass_ok = true;
                for (double x : {0.1, 0.5, 0.9}) {
                    if (!(density_mass(model, t, x, 1e-8) <= 1.0 + 1e-10)) mass_ok = false;
                }

                const bool ck_ok = ck_check(model, t, t, 0.3, 0.6, 1e-7) < 1e-6;

                bool oracle_ok = true;
                if (model.mu == 0) {
                    for (int xi = 1; xi <= 9 && oracle_ok; ++xi) {
                        for (int yi = 1; yi <= 9; ++yi) {
                            const double x = xi / 10.0, y = yi / 10.0;
                            const double series = density(model, {t, x, y, 1e-12}).value;
                            if (std::abs(series - mu0_oracle(t, x, y)) >= oracle_tol) {
                                oracle_ok = false;
                                break;
                            }
                        }
                    }
                }

                return CellRecord{int(i), int(j),
                                  sym_ok && mass_ok && ck_ok && oracle_ok,
                                  std::string("sym=") + (sym_ok ? "ok" : "FAIL") +
                                      ";mass=" + (mass_ok ? "ok" : "FAIL") +
                                      ";ck=" + (ck_ok ? "ok" : "FAIL") +
                                      ";oracle=" + (oracle_ok ? "ok" : "FAIL"),
                                  {}};
            });
        }
    }

    // Truncation honesty: tightening the tolerance may only move the value
    // within the previously reported tail bound.
    const unsigned long seed = config.seed;
    tasks.push_back([seed] {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> ut(0.05, 1.0), uxy(0.1, 0.9);
        const double nus_local[3] = {1.0, 2.0, 3.7};
        bool ok = true;
        for (int q = 0; q < 5; ++q) {
            const KilledBMModel model = make_model(mu_for_nu(nus_local[q % 3]));
            const double t = ut(rng), x = uxy(rng), y = uxy(rng);
            const DensityResult r1 = density(model, {t, x, y, 1e-9});
            const DensityResult r2 = density(model, {t, x, y, 0.5e-9});
            const DensityResult r3 = density(model, {t, x, y, 0.25e-9});
            if (std::abs(r2.raw_value - r1.raw_value) > r1.tail_bound) ok = false;
            if (std::abs(r3.raw_value - r2.raw_value) > r2.tail_bound) ok = false;
        }
        return CellRecord{9, 9, ok, "honesty", {}};
    });
    return tasks;
}

struct SuiteInfo {
    int n_guard;
    int k_guard;
    std::vector<Task> (*build)(const SuiteConfig&);
};

const std::map<std::string, SuiteInfo>& suite_table() {
    static const std::map<std::string, SuiteInfo> table = {
        {"theorem1", {10, 100, theorem1_tasks}},
        {"lemma2", {10, 100, lemma2_tasks}},
        {"lemma1", {10, 100, lemma1_tasks}},
        {"cnk", {50, 100, cnk_tasks}},
        {"orthogonality", {12, 20, orthogonality_tasks}},
        {"darboux", {8, 50, darboux_tasks}},
        {"prop3", {8, 50, prop3_tasks}},
        {"norms", {8, 50, norms_tasks}},
        {"density", {1000, 1000, density_tasks}},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out = {"theorem1", "lemma2", "lemma1", "cnk",
                                        "orthogonality", "darboux", "prop3",
                                        "norms", "density", "all"};
        return out;
    }();
    return names;
}

SuiteReport run_suite(const SuiteConfig& config) {
    const auto it = suite_table().find(config.suite);
    if (it == suite_table().end()) {
        throw ConfigError("unknown suite '" + config.suite + "'");
    }
    if (config.n_max < 1) throw ConfigError("--n-max must be at least 1");
    if (config.k_max < 0) throw ConfigError("--k-max must be nonnegative");
    if (!(config.tol > 0)) throw ConfigError("--tol must be positive");
    if (config.threads < 0) throw ConfigError("--threads must be nonnegative");
    if (config.n_max > it->second.n_guard) {
        throw ConfigError("suite '" + config.suite + "' caps --n-max at " +
                          std::to_string(it->second.n_guard));
    }
    if (config.k_max > it->second.k_guard) {
        throw ConfigError("suite '" + config.suite + "' caps --k-max at " +
                          std::to_string(it->second.k_guard));
    }

    const auto t0 = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = config.suite;
    report.cells = run_cells(it->second.build(config), config.threads);
    for (const auto& cell : report.cells) {
        (cell.pass ? report.passed : report.failed) += 1;
    }
    report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
    return report;
}

std::vector<SuiteReport> run_suites(const SuiteConfig& config) {
    if (config.suite != "all") return {run_suite(config)};
    std::vector<SuiteReport> reports;
    for (const auto& name : suite_names()) {
        if (name == "all") continue;
        SuiteConfig sub = config;
        sub.suite = name;
        const SuiteInfo& info = suite_table().at(name);
        sub.n_max = std::min(sub.n_max, info.n_guard);
        sub.k_max = std::min(sub.k_max, info.k_guard);
        reports.push_back(run_suite(sub));
    }
    return reports;
}

namespace {

void emit_into(std::string& out, const SuiteReport& report, SuiteFormat format,
               bool tag_suite) {
    if (format == SuiteFormat::Csv) {
        if (tag_suite) out += "# suite=" + report.suite + "\n";
        out += "n,k,pass,detail\n";
        for (const auto& cell : report.cells) {
            out += std::to_string(cell.n) + "," + std::to_string(cell.k) + "," +
                   (cell.pass ? "true" : "false") + "," + cell.detail + "\n";
        }
    } else {
        for (const auto& cell : report.cells) {
            nlohmann::json j =
                cell.extra.is_object() ? cell.extra : nlohmann::json::object();
            j["n"] = cell.n;
            j["k"] = cell.k;
            j["pass"] = cell.pass;
            j["detail"] = cell.detail;
            if (tag_suite) j["suite"] = report.suite;
            out += j.dump() + "\n";
        }
    }
}

}  // namespace

std::string emit_table(const SuiteReport& report, SuiteFormat format) {
    std::string out;
    emit_into(out, report, format, false);
    return out;
}

std::string emit_tables(const std::vector<SuiteReport>& reports, SuiteFormat format) {
    if (reports.size() == 1) return emit_table(reports.front(), format);
    std::string out;
    for (const auto& report : reports) emit_into(out, report, format, true);
    return out;
}

void write_report_file(const std::vector<SuiteReport>& reports, const SuiteConfig& config) {
    if (config.output_path.empty()) return;
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + config.output_path + "' for writing");
    out << emit_tables(reports, config.format);
    if (!out.good()) throw IoError("failed writing '" + config.output_path + "'");
}

}  // namespace wron
