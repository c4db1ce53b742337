// jumpwalk CLI: expected-position tables, spectrum reports, cross-route
// verification and Monte Carlo runs for the reflected walk with jumps at
// the origin. Configuration comes from a JSON document; tabular output is
// RFC-4180 CSV with a mandatory header row and "\n" line endings.

#include <cinttypes>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jumpwalk/jumpwalk.hpp"

namespace jw = jumpwalk;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string output_path;  // overrides config.output when set
    int precision = 5;
    std::optional<std::uint64_t> paths;
    std::optional<std::uint64_t> seed;
    bool as_json = false;
};

jw::RunConfig load_config(const CommonOpts& opts) {
    std::ifstream in(opts.config_path);
    if (!in)
        throw jw::Error(jw::ErrorCode::CONFIG_INVALID,
                        "cannot open config file \"" + opts.config_path + "\"");
    std::stringstream buffer;
    buffer << in.rdbuf();
    jw::RunConfig cfg = jw::parse_config_text(buffer.str());
    if (opts.paths) cfg.paths = opts.paths;
    if (opts.seed) cfg.seed = opts.seed;
    if (!opts.output_path.empty()) cfg.output = opts.output_path;
    return cfg;
}

// Output sink: file when requested, stdout otherwise.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw jw::Error(jw::ErrorCode::CONFIG_INVALID,
                                "cannot open output file \"" + path + "\"");
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

std::string fixed(double x, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, x);
    return buf;
}

std::string fmt_complex(std::complex<double> z, int precision = 6) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.*f%+.*fi", precision, z.real(), precision, z.imag());
    return buf;
}

int cmd_table(const CommonOpts& opts) {
    jw::RunConfig cfg = load_config(opts);
    jw::JumpDistribution d = cfg.distribution();
    Sink sink(cfg.output);

    std::vector<jw::Rational> dp = jw::expected_positions_dp(d, cfg.j, cfg.n_values);
    jw::RationalSeries h = jw::h_series(d, cfg.j, static_cast<int>(cfg.n_values.back()));

    std::ostream& out = sink.out();
    out << "n,I,I+II,I+II+III,exact_dp,exact_series,abs_err,err_times_n32\n";
    for (std::size_t i = 0; i < cfg.n_values.size(); ++i) {
        const std::size_t n = cfg.n_values[i];
        jw::AsymptoticBreakdown a = jw::asymptotic_expectation(d, cfg.j, n);
        const jw::Rational& series_exact = h.coeff(n);
        if (dp[i] != series_exact)
            throw jw::Error(jw::ErrorCode::NONZERO_REMAINDER,
                            "exact routes disagree at n = " + std::to_string(n));
        double exact = jw::to_double(dp[i]);
        double abs_err = std::fabs(exact - a.total);
        out << n << ',' << fixed(a.term1, opts.precision) << ','
            << fixed(a.term1 + a.term2, opts.precision) << ','
            << fixed(a.total, opts.precision) << ',' << fixed(exact, opts.precision) << ','
            << fixed(jw::to_double(series_exact), opts.precision) << ','
            << fixed(abs_err, opts.precision) << ','
            << fixed(abs_err * std::pow(static_cast<double>(n), 1.5), opts.precision) << '\n';
    }
    return 0;
}

std::string repeated_root_message(const jw::SpectrumReport& report) {
    // name the tightest cluster for the diagnostic
    for (std::size_t i = 0; i < report.roots.size(); ++i) {
        std::size_t mult = 1;
        for (std::size_t k = 0; k < report.roots.size(); ++k)
            if (k != i && std::abs(report.roots[i] - report.roots[k]) <= 1e-7) ++mult;
        if (mult > 1) {
            std::complex<double> r = report.roots[i];
            std::string where;
            if (std::fabs(r.imag()) < 1e-7 && std::fabs(r.real() - std::round(r.real())) < 1e-7) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%ld", std::lround(r.real()));
                where = buf;
            } else {
                where = fmt_complex(r);
            }
            const char* count = mult == 2 ? "double" : mult == 3 ? "triple" : "repeated";
            return std::string("A4 violated: ") + count + " root at " + where;
        }
    }
    return "A4 violated: repeated root";
}

int cmd_spectrum(const CommonOpts& opts) {
    jw::RunConfig cfg = load_config(opts);
    jw::JumpDistribution d = cfg.distribution();
    Sink sink(cfg.output);
    std::ostream& out = sink.out();

    jw::SpectrumReport report;
    try {
        report = jw::spectrum_report(d);
    } catch (const jw::Error& e) {
        if (e.code() != jw::ErrorCode::NO_CONVERGENCE) throw;
        std::ostringstream poly;
        for (const auto& c : jw::phi_polynomial(d).coeffs()) poly << ' ' << jw::to_string(c);
        throw jw::Error(jw::ErrorCode::NO_CONVERGENCE,
                        std::string(e.what()) + " for phi coefficients" + poly.str());
    }

    if (opts.as_json) {
        nlohmann::json doc;
        doc["case"] = jw::name(jw::classify_case(d).variant);
        doc["squarefree"] = report.squarefree;
        doc["separation"] = report.separation;
        doc["essential_spectrum"] = {-1.0, 1.0};
        doc["roots"] = nlohmann::json::array();
        for (std::size_t i = 0; i < report.roots.size(); ++i) {
            doc["roots"].push_back({{"re", report.roots[i].real()},
                                    {"im", report.roots[i].imag()},
                                    {"class", jw::name(report.classes[i])},
                                    {"lambda_re", report.lambdas[i].real()},
                                    {"lambda_im", report.lambdas[i].imag()}});
        }
        out << doc.dump(2) << '\n';
        return 0;
    }

    out << "case: " << jw::name(jw::classify_case(d).variant) << '\n';
    out << "root,class,lambda\n";
    for (std::size_t i = 0; i < report.roots.size(); ++i)
        out << fmt_complex(report.roots[i]) << ',' << jw::name(report.classes[i]) << ','
            << fmt_complex(report.lambdas[i]) << '\n';
    if (report.squarefree) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3e", report.separation);
        out << "A4 satisfied: minimum root separation " << buf << '\n';
    } else {
        out << repeated_root_message(report) << '\n';
    }
    out << "essential spectrum: [-1,1]\n";
    return 0;
}

struct CheckResult {
    std::string check;
    std::string status;  // PASS, FAIL, SKIP
    std::string detail;
};

// deterministic points in the closed disk of radius 1/2
std::vector<std::complex<double>> sample_disk_points(std::size_t count, std::uint64_t seed) {
    std::vector<std::complex<double>> out;
    std::uint64_t s = seed;
    auto u01 = [&s]() {
        s += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) / 9007199254740992.0;
    };
    while (out.size() < count) {
        double radius = 0.5 * std::sqrt(u01());
        double angle = 2.0 * M_PI * u01();
        out.push_back(std::polar(radius, angle));
    }
    return out;
}

int cmd_verify(const CommonOpts& opts) {
    jw::RunConfig cfg = load_config(opts);
    jw::JumpDistribution d = cfg.distribution();
    Sink sink(cfg.output);
    std::ostream& out = sink.out();

    const jw::CaseTag tag = jw::classify_case(d);
    std::vector<CheckResult> results;
    auto record = [&](std::string check, bool ok, std::string detail) {
        results.push_back({std::move(check), ok ? "PASS" : "FAIL", std::move(detail)});
    };
    auto skip = [&](std::string check, std::string why) {
        results.push_back({std::move(check), "SKIP", std::move(why)});
    };

    // exact-route agreement through n = 60
    {
        std::vector<std::size_t> marks(61);
        for (std::size_t n = 0; n <= 60; ++n) marks[n] = n;
        auto dp = jw::expected_positions_dp(d, cfg.j, marks);
        auto h = jw::h_series(d, cfg.j, 60);
        bool ok = true;
        std::string detail = "dp == series exactly for n <= 60";
        for (std::size_t n = 0; n <= 60; ++n) {
            if (dp[n] != h.coeff(n)) {
                ok = false;
                detail = "first mismatch at n = " + std::to_string(n) + ": dp = " +
                         jw::to_string(dp[n]) + ", series = " + jw::to_string(h.coeff(n));
                break;
            }
        }
        record("dp_series_equality", ok, detail);
    }

    const bool spectral_eligible =
        tag.variant != jw::CaseVariant::P0_ONE && tag.variant != jw::CaseVariant::SPECIAL_HALF_HALF;
    jw::SpectrumReport report;
    if (spectral_eligible) report = jw::spectrum_report(d);

    // closed-form vs root-sum constants
    if (!spectral_eligible) {
        skip("two_route_constants", jw::name(tag.variant));
    } else if (!report.squarefree) {
        skip("two_route_constants", "A4 violated");
    } else {
        jw::Constants a = jw::constants_closed_form(d);
        jw::Constants b = jw::constants_root_sum(d, report);
        double gap = std::max({std::fabs(a.c1 - b.c1), std::fabs(a.c2 - b.c2),
                               std::fabs(a.c3 - b.c3)});
        char buf[64];
        std::snprintf(buf, sizeof buf, "max |closed - root sum| = %.3e", gap);
        record("two_route_constants", gap < 1e-10, buf);
    }

    // decomposition identity against the exact series at 20 disk points
    if (!spectral_eligible) {
        skip("decomposition_identity", jw::name(tag.variant));
    } else if (!report.squarefree) {
        skip("decomposition_identity", "A4 violated");
    } else {
        const int order = 120;
        auto h0 = jw::h_series(d, 0, order);
        double worst = 0.0;
        for (const auto& z : sample_disk_points(20, 0x5EEDull)) {
            std::complex<double> series(0.0, 0.0), zn(1.0, 0.0);
            for (int k = 0; k <= order; ++k) {
                series += jw::to_double(h0.coeff(k)) * zn;
                zn *= z;
            }
            worst = std::max(worst, std::abs(jw::decomposition_eval(d, report, z) - series));
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "max |decomposition - series| = %.3e", worst);
        record("decomposition_identity", worst < 1e-9, buf);
    }

    // error-order of the asymptotic expansion on the standard grid
    {
        const std::vector<std::size_t> grid = {50, 100, 200, 400};
        bool a4_ok = true;
        try {
            std::vector<jw::Rational> exact = jw::expected_positions_dp(d, cfg.j, grid);
            std::vector<double> residuals;
            for (std::size_t i = 0; i < grid.size(); ++i)
                residuals.push_back(std::fabs(
                    jw::to_double(exact[i]) -
                    jw::asymptotic_expectation(d, cfg.j, grid[i]).total));
            bool all_tiny = true;
            for (double r : residuals) all_tiny = all_tiny && r < 1e-12;
            if (all_tiny) {
                record("residual_ratio", true, "asymptote is exact (residuals < 1e-12)");
            } else {
                std::vector<double> scaled;
                for (std::size_t i = 0; i < grid.size(); ++i)
                    scaled.push_back(residuals[i] *
                                     std::pow(static_cast<double>(grid[i]), 1.5));
                double smin = scaled[0], smax = scaled[0];
                for (double s : scaled) {
                    smin = std::min(smin, s);
                    smax = std::max(smax, s);
                }
                double ratio = residuals[1] / residuals[3];
                char buf[96];
                std::snprintf(buf, sizeof buf,
                              "r(100)/r(400) = %.2f, scaled spread = %.2f", ratio, smax / smin);
                record("residual_ratio", ratio >= 4.0 && ratio <= 16.0 && smax / smin < 4.0, buf);
            }
        } catch (const jw::Error& e) {
            if (e.code() != jw::ErrorCode::A4_VIOLATED) throw;
            a4_ok = false;
        }
        if (!a4_ok) skip("residual_ratio", "A4 violated");
    }

    // Monte Carlo against the exact value, 3 sigma
    {
        const std::uint64_t paths = cfg.paths.value_or(200000);
        const std::uint64_t seed = cfg.seed.value_or(0x1CEB00DAull);
        const std::size_t n = 100;
        jw::MCEstimate est = jw::estimate_expectation(d, cfg.j, n, paths, seed);
        double exact = jw::to_double(jw::expected_position_dp(d, cfg.j, n));
        double gap = std::fabs(est.mean - exact);
        bool ok = est.stderr_ == 0.0 ? gap == 0.0 : gap <= 3.0 * est.stderr_;
        char buf[96];
        std::snprintf(buf, sizeof buf, "|mean - exact| = %.3e, stderr = %.3e", gap, est.stderr_);
        record("monte_carlo_3sigma", ok, buf);
    }

    bool all_ok = true;
    for (const auto& r : results) all_ok = all_ok && r.status != "FAIL";

    if (opts.as_json) {
        nlohmann::json doc = nlohmann::json::array();
        for (const auto& r : results)
            doc.push_back({{"check", r.check}, {"status", r.status}, {"detail", r.detail}});
        out << doc.dump(2) << '\n';
    } else {
        for (const auto& r : results)
            out << '[' << r.status << "] " << r.check << ": " << r.detail << '\n';
    }
    return all_ok ? 0 : 1;
}

int cmd_simulate(const CommonOpts& opts) {
    jw::RunConfig cfg = load_config(opts);
    if (!cfg.paths || !cfg.seed)
        throw jw::Error(jw::ErrorCode::CONFIG_INVALID,
                        "simulate requires both \"paths\" and \"seed\"");
    jw::JumpDistribution d = cfg.distribution();
    Sink sink(cfg.output);
    std::ostream& out = sink.out();

    std::vector<jw::Rational> dp = jw::expected_positions_dp(d, cfg.j, cfg.n_values);
    out << "n,mc_mean,mc_stderr,exact_dp,z_score\n";
    for (std::size_t i = 0; i < cfg.n_values.size(); ++i) {
        const std::size_t n = cfg.n_values[i];
        jw::MCEstimate est = jw::estimate_expectation(d, cfg.j, n, *cfg.paths, *cfg.seed);
        double exact = jw::to_double(dp[i]);
        double z = est.stderr_ > 0.0 ? (est.mean - exact) / est.stderr_ : 0.0;
        out << n << ',' << fixed(est.mean, opts.precision) << ','
            << fixed(est.stderr_, opts.precision) << ',' << fixed(exact, opts.precision) << ','
            << fixed(z, opts.precision) << '\n';
    }
    return 0;
}

int cmd_moments(const CommonOpts& opts, int max_m) {
    if (max_m < 0 || max_m > 16)
        throw jw::Error(jw::ErrorCode::CONFIG_INVALID, "--max-m must lie in [0, 16]");
    jw::RunConfig cfg = load_config(opts);
    jw::JumpDistribution d = cfg.distribution();
    Sink sink(cfg.output);
    std::ostream& out = sink.out();

    out << "m,exact,decimal\n";
    for (int m = 0; m <= max_m; ++m) {
        jw::Rational v = jw::moment(d, static_cast<unsigned>(m));
        out << m << ',' << jw::to_string(v) << ',' << fixed(jw::to_double(v), opts.precision)
            << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reflected random walk with jumps at the origin: exact, asymptotic and "
                 "Monte Carlo routes to E(X_n | X_0 = j)"};
    app.require_subcommand(1);

    CommonOpts opts;
    int max_m = 3;

    auto add_common = [&](CLI::App* cmd, bool with_json) {
        cmd->add_option("--config", opts.config_path, "JSON run configuration")->required();
        cmd->add_option("--output", opts.output_path, "write output to this file");
        cmd->add_option("--precision", opts.precision, "decimal places in numeric fields")
            ->check(CLI::Range(0, 17));
        cmd->add_option("--paths", opts.paths, "Monte Carlo path count override");
        cmd->add_option("--seed", opts.seed, "Monte Carlo seed override");
        if (with_json) cmd->add_flag("--json", opts.as_json, "machine-readable JSON report");
    };

    CLI::App* table = app.add_subcommand("table", "asymptotic vs exact expected-position table");
    add_common(table, false);
    CLI::App* spectrum = app.add_subcommand("spectrum", "roots of phi and their spectral classes");
    add_common(spectrum, true);
    CLI::App* verify = app.add_subcommand("verify", "cross-route consistency checks");
    add_common(verify, true);
    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo estimates per n");
    add_common(simulate, false);
    CLI::App* moments = app.add_subcommand("moments", "exact jump moments E(Y^m)");
    add_common(moments, false);
    moments->add_option("--max-m", max_m, "largest moment order (at most 16)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed()) return cmd_table(opts);
        if (spectrum->parsed()) return cmd_spectrum(opts);
        if (verify->parsed()) return cmd_verify(opts);
        if (simulate->parsed()) return cmd_simulate(opts);
        if (moments->parsed()) return cmd_moments(opts, max_m);
    } catch (const jw::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == jw::ErrorCode::CONFIG_INVALID ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
