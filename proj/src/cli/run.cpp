#include "reslab/cli.hpp"

#include "reslab/extremes.hpp"
#include "reslab/lfunc.hpp"
#include "reslab/numth.hpp"
#include "reslab/oracles.hpp"
#include "reslab/report_io.hpp"
#include "reslab/resonance.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <cmath>
#include <future>
#include <ostream>
#include <variant>

namespace reslab::cli {

namespace {

namespace fs = std::filesystem;

struct Output {
    std::string csv;
    std::string json;
    bool certificate_failed = false;
    std::string summary;
};

Output certify_one(const RunConfig& cfg, std::uint64_t q) {
    ResonanceReport report = cfg.x ? ratio_certificate(q, WeightScheme::linear(*cfg.x), cfg.n, cfg.k, cfg.y)
                                   : ratio_certificate(q, cfg.b, cfg.n, cfg.k, cfg.y);
    std::string note;
    try {
        report = exclude_principal(report, build_group(q));
    } catch (const std::runtime_error& e) {
        note = fmt::format(" (principal exclusion skipped: {})", e.what());
    }
    Output out{resonance_csv(report), to_json(report).dump(2) + "\n", !report.certificate.pass, {}};
    out.summary = fmt::format("certify q={} X={:.6g} ratio={:.9g} target={:.9g} tau_cert={:.6g} {}{}", q, report.x,
                              report.ratio, report.lower_bound, report.certificate.tau_cert,
                              report.certificate.pass ? "PASS" : "FAIL", note);
    return out;
}

Output scan_t1_one(const RunConfig& cfg, std::uint64_t q) {
    const auto report = scan_theorem1(q, cfg.epsilon);
    Output out{scan_csv(report), to_json(report).dump(2) + "\n", false, {}};
    out.summary = fmt::format("scan-t1 q={} max|L|={:.9g} (index {}) bound={:.9g} margin={:.9g}", q, report.max_abs_l,
                              report.argmax_index, report.bound_value, report.margin);
    return out;
}

Output census_one(const RunConfig& cfg, std::uint64_t q) {
    const auto report = phi_delta_census(q, cfg.delta_list);
    Output out{census_csv(report), to_json(report).dump(2) + "\n", false, {}};
    std::string counts;
    for (const auto& row : report.rows)
        counts += fmt::format(" Phi({:g})={}", row.delta, row.count);
    out.summary = fmt::format("census q={}{}", q, counts);
    return out;
}

Output scan_t3_one(const RunConfig& cfg, std::uint64_t q) {
    const double sigma = *cfg.sigma;
    const double a = cfg.a_sigma.value_or(default_a_sigma(sigma));
    const auto report = scan_theorem3(q, sigma, cfg.x_cap, a, cfg.y_min, cfg.tol);
    const bool failed = report.certificate && !report.certificate->certificate.pass;
    Output out{scan_csv(report), to_json(report).dump(2) + "\n", failed, {}};
    out.summary = fmt::format("scan-t3 q={} sigma={:g} max|L|={:.9g} c_hat={:.9g} excluded={} certificate {}", q,
                              sigma, report.max_abs_l, report.c_hat.value_or(0.0), report.excluded_count.value_or(0),
                              failed ? "FAIL" : "PASS");
    return out;
}

Output compute(const RunConfig& cfg, std::uint64_t q) {
    switch (cfg.command) {
    case Command::certify:
        return certify_one(cfg, q);
    case Command::scan_t1:
        return scan_t1_one(cfg, q);
    case Command::census:
        return census_one(cfg, q);
    case Command::scan_t3:
        return scan_t3_one(cfg, q);
    case Command::oracle_check:
        break;
    }
    throw std::logic_error("compute: unsupported command");
}

struct CheckRow {
    std::string name;
    std::uint64_t q;
    double value;
    double tol;
    bool pass;
};

double rel_diff(double a, double b) {
    const double s = std::max(std::fabs(a), std::fabs(b));
    return s > 0.0 ? std::fabs(a - b) / s : 0.0;
}

std::vector<CheckRow> oracle_rows(std::uint64_t q) {
    std::vector<CheckRow> rows;
    const auto group = build_group(q);

    // digamma backend against the partial-summation series, sampled characters
    const auto values = l_value_batch(group, SigmaPoint(1.0));
    double worst = 0.0;
    const std::uint64_t stride = std::max<std::uint64_t>(1, (q - 2) / 24);
    for (std::uint64_t j = 1; j < q - 1; j += stride) {
        const auto chi = group.character(j);
        std::uint64_t n = q * static_cast<std::uint64_t>(std::ceil(std::sqrt(4.0e8 * static_cast<double>(q)) /
                                                                   static_cast<double>(q)));
        const auto est = oracle::abel_l_one(chi, n);
        worst = std::max(worst, std::abs(est.value - values[j - 1].value));
    }
    rows.push_back({"backend L(1,chi) digamma vs series", q, worst, 1e-6, worst <= 1e-6});

    // orthogonality on a few coprime pairs
    double orth = 0.0;
    const double phi = static_cast<double>(q - 1);
    for (std::uint64_t m : {1ULL, 2ULL, 3ULL}) {
        for (std::uint64_t n : {1ULL, 2ULL, 1ULL + q}) {
            if (m % q == 0 || n % q == 0)
                continue;
            const double expected = (m % q == n % q) ? phi : 0.0;
            orth = std::max(orth, std::fabs(orthogonality_sum(group, m, n) - expected) / phi);
        }
    }
    rows.push_back({"orthogonality", q, orth, 1e-9, orth <= 1e-9});

    // fast group DFT against direct evaluation
    if (q <= 5000) {
        std::vector<cplx> f(q - 1);
        for (std::uint64_t a = 1; a < q; ++a)
            f[a - 1] = {std::sin(static_cast<double>(a)), std::cos(0.5 * static_cast<double>(a))};
        const auto fast = dft_over_group(group, std::span<const cplx>(f));
        const auto slow = oracle::naive_group_dft(group, f);
        double err = 0.0;
        double scale = 0.0;
        for (std::size_t j = 0; j < fast.size(); ++j) {
            err = std::max(err, std::abs(fast[j] - slow[j]));
            scale = std::max(scale, std::abs(slow[j]));
        }
        rows.push_back({"group DFT fast vs direct", q, err / scale, 1e-10, err / scale <= 1e-10});
    }

    // S1 and S2 by character sums and by congruence forms
    const double x = q > 11 ? 10.0 : 3.0;
    const auto scheme = WeightScheme::linear(x);
    const auto coeffs = enumerate_coeffs(scheme, 1000);
    const auto l_series = euler_series_coeffs(1.0, std::max(x, 100.0), 1000);
    const double s2_diff = rel_diff(s2_character_sum(group, coeffs), s2_congruence_form(q, coeffs));
    rows.push_back({"S2 character vs congruence", q, s2_diff, 1e-9, s2_diff <= 1e-9});
    const cplx s1c = s1_character_sum(group, coeffs, l_series);
    const double s1k = s1_congruence_form(q, coeffs, l_series);
    const double s1_diff = std::abs(s1c - cplx{s1k, 0.0}) / std::fabs(s1k);
    rows.push_back({"S1 character vs congruence", q, s1_diff, 1e-9, s1_diff <= 1e-9});
    return rows;
}

} // namespace

int oracle_check(const std::vector<std::uint64_t>& q_list, std::ostream& out) {
    if (q_list.empty()) {
        fmt::print(out, "oracle-check: no moduli given\n");
        return exit_config_error;
    }
    for (std::uint64_t q : q_list) {
        if (q < 5 || !is_prime(q)) {
            fmt::print(out, "oracle-check: {} is not a prime >= 5\n", q);
            return exit_config_error;
        }
    }
    bool all = true;
    fmt::print(out, "{:<38} {:>8} {:>12} {:>8}  {}\n", "check", "q", "value", "tol", "status");
    for (std::uint64_t q : q_list) {
        for (const auto& row : oracle_rows(q)) {
            fmt::print(out, "{:<38} {:>8} {:>12.3e} {:>8.0e}  {}\n", row.name, row.q, row.value, row.tol,
                       row.pass ? "PASS" : "FAIL");
            all = all && row.pass;
        }
    }
    return all ? exit_ok : exit_certificate_failed;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.help_requested) {
        out << cfg.help_text;
        return exit_ok;
    }
    if (cfg.command == Command::oracle_check)
        return oracle_check(cfg.q_list, out);

    std::error_code ec;
    fs::create_directories(cfg.output_dir, ec);
    if (ec || !fs::is_directory(cfg.output_dir)) {
        fmt::print(err, "error: cannot use output directory {}\n", cfg.output_dir.string());
        return exit_io_error;
    }

    // one worker per modulus, at most `jobs` in flight; results are written in
    // input order
    std::vector<Output> results(cfg.q_list.size());
    try {
        const std::size_t jobs = std::max(1u, cfg.jobs);
        for (std::size_t start = 0; start < cfg.q_list.size(); start += jobs) {
            std::vector<std::future<Output>> batch;
            const std::size_t stop = std::min(cfg.q_list.size(), start + jobs);
            for (std::size_t i = start; i < stop; ++i)
                batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                           [&cfg, q = cfg.q_list[i]] { return compute(cfg, q); }));
            for (std::size_t i = start; i < stop; ++i)
                results[i] = batch[i - start].get();
        }
    } catch (const std::invalid_argument& e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_config_error;
    } catch (const std::domain_error& e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_config_error;
    } catch (const std::runtime_error& e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_config_error;
    }

    bool failed = false;
    const std::string command{to_string(cfg.command)};
    try {
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto stem = cfg.output_dir / fmt::format("{}_q{}", command, cfg.q_list[i]);
            if (cfg.format != Format::json)
                write_atomic(stem.string() + ".csv", results[i].csv);
            if (cfg.format != Format::csv)
                write_atomic(stem.string() + ".json", results[i].json);
            out << results[i].summary << "\n";
            failed = failed || results[i].certificate_failed;
        }
    } catch (const IoError& e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_io_error;
    }
    return failed ? exit_certificate_failed : exit_ok;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    RunConfig cfg;
    try {
        cfg = parse_config(args);
    } catch (const ConfigError& e) {
        fmt::print(err, "config error: {}\n", e.what());
        return exit_config_error;
    }
    return run(cfg, out, err);
}

} // namespace reslab::cli
