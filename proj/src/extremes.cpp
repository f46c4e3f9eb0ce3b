#include "reslab/extremes.hpp"

#include "reslab/lfunc.hpp"
#include "reslab/numth.hpp"
#include "reslab/special.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace reslab {

namespace {

constexpr double theorem1_b = 1.4;

void require_scan_modulus(std::uint64_t q, const char* who) {
    if (q < 17 || !is_prime(q))
        throw std::invalid_argument(std::string(who) + ": q must be a prime >= 17, got " + std::to_string(q));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// argmax over j = 1..q-2 (outside `skip`, ascending) of log|R(chi_j)|^2,
// ties to the smaller index.
std::uint64_t resonant_character(const CharacterGroup& group, const WeightScheme& scheme,
                                 const std::vector<std::uint64_t>& skip = {}) {
    std::uint64_t best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::uint64_t j = 1; j < group.order(); ++j) {
        if (std::binary_search(skip.begin(), skip.end(), j))
            continue;
        double log_r2 = 0.0;
        for (const auto& [p, w] : scheme.support())
            log_r2 -= std::log(std::norm(1.0 - w * group.value(j, p)));
        if (log_r2 > best_value) {
            best_value = log_r2;
            best = j;
        }
    }
    return best;
}

double max_abs(const std::vector<LValue>& values, std::uint64_t* argmax = nullptr) {
    double best = -1.0;
    for (const auto& v : values) {
        const double a = std::abs(v.value);
        if (a > best) {
            best = a;
            if (argmax)
                *argmax = v.index;
        }
    }
    return best;
}

} // namespace

Constants constants() {
    Constants c;
    c.e_gamma = std::exp(euler_gamma);
    c.c = 1.0 + std::log(std::log(4.0));
    c.c0 = -0.395;
    c.conjectural_offset = c.c0 + 1.0 - std::log(2.0);
    return c;
}

double theorem1_bound(std::uint64_t q, double epsilon) {
    if (q < 17)
        throw std::invalid_argument("theorem1_bound: q must be at least 17");
    const double l2 = std::log(std::log(static_cast<double>(q)));
    const auto k = constants();
    return k.e_gamma * (l2 + std::log(l2) - k.c - epsilon);
}

ScanReport scan_theorem1(std::uint64_t q, double epsilon) {
    require_scan_modulus(q, "scan_theorem1");
    if (!(epsilon >= 0.0))
        throw std::invalid_argument("scan_theorem1: epsilon must be nonnegative");
    const auto start = std::chrono::steady_clock::now();
    const auto group = build_group(q);
    const auto values = l_value_batch(group, SigmaPoint(1.0));

    ScanReport report;
    report.q = q;
    report.sigma = 1.0;
    report.max_abs_l = max_abs(values, &report.argmax_index);
    report.bound_value = theorem1_bound(q, epsilon);
    report.margin = report.max_abs_l - report.bound_value;
    const auto scheme = WeightScheme::linear(theorem1_cutoff(q, theorem1_b));
    report.resonant_index = resonant_character(group, scheme);
    report.resonant_abs_l = std::abs(values[report.resonant_index - 1].value);
    report.runtime_seconds = seconds_since(start);
    return report;
}

CensusReport phi_delta_census(std::uint64_t q, const std::vector<double>& deltas) {
    require_scan_modulus(q, "phi_delta_census");
    for (double d : deltas)
        if (!(d > 0.0))
            throw std::invalid_argument("phi_delta_census: delta values must be positive");
    const auto group = build_group(q);
    const auto values = l_value_batch(group, SigmaPoint(1.0));

    CensusReport report;
    report.q = q;
    report.constants = constants();
    report.max_abs_l = max_abs(values);
    const double log_q = std::log(static_cast<double>(q));
    const double l2 = std::log(log_q);
    for (double delta : deltas) {
        CensusRow row;
        row.delta = delta;
        row.threshold = theorem1_bound(q, delta);
        row.count = static_cast<std::uint64_t>(std::count_if(
            values.begin(), values.end(), [&](const LValue& v) { return std::abs(v.value) > row.threshold; }));
        if (row.count > 0)
            row.exponent_emp = std::log(static_cast<double>(row.count)) / log_q;
        row.exponent_ref = 1.0 - std::exp(-delta);
        row.b_delta = std::exp(delta) * std::exp(-1.0 / std::sqrt(l2)) * std::log(4.0);
        report.rows.push_back(row);
    }
    return report;
}

ScanReport scan_theorem3(std::uint64_t q, double sigma, double x_cap, double a_sigma, double y_min,
                         double tol) {
    if (!(sigma > 0.5 && sigma < 1.0))
        throw std::domain_error("scan_theorem3: sigma must lie in (1/2, 1)");
    require_scan_modulus(q, "scan_theorem3");
    const auto start = std::chrono::steady_clock::now();
    const auto group = build_group(q);
    const auto values = l_value_batch(group, SigmaPoint(sigma));
    const auto params = theorem3_params(q, sigma, a_sigma, y_min, x_cap);
    const auto census = approx_error_census(group, values, sigma, params.x, tol);

    ScanReport report;
    report.q = q;
    report.sigma = sigma;
    report.x_cutoff = params.x;
    report.excluded_count = census.bad.size();

    std::size_t next_bad = 0;
    for (const auto& v : values) {
        if (next_bad < census.bad.size() && census.bad[next_bad] == v.index) {
            ++next_bad;
            continue;
        }
        const double a = std::abs(v.value);
        if (a > report.max_abs_l) {
            report.max_abs_l = a;
            report.argmax_index = v.index;
        }
    }
    if (report.argmax_index == 0)
        throw std::runtime_error("scan_theorem3: every character was excluded by the approximation census");
    const double best = std::log(report.max_abs_l);
    const double log_q = std::log(static_cast<double>(q));
    const double shape = std::pow(log_q, 1.0 - sigma) * std::pow(std::log(log_q), -sigma);
    report.target_shape = shape;
    report.max_log_abs_l = best;
    report.c_hat = best / shape;
    report.bound_value = std::exp(shape);
    report.margin = report.max_abs_l - report.bound_value;

    report.resonant_index = resonant_character(group, WeightScheme::half(params.y), census.bad);
    report.resonant_abs_l = std::abs(values[report.resonant_index - 1].value);
    report.certificate = theorem3_quotient(q, sigma, a_sigma, y_min, x_cap);
    report.runtime_seconds = seconds_since(start);
    return report;
}

GsCheck gs_upper_check(std::uint64_t q, double slack) {
    require_scan_modulus(q, "gs_upper_check");
    const auto group = build_group(q);
    GsCheck out;
    out.max_abs_l = max_abs(l_value_batch(group, SigmaPoint(1.0)));
    out.bound = std::log(static_cast<double>(q)) * (1.0 + slack) / 3.0;
    out.ok = out.max_abs_l <= out.bound;
    return out;
}

} // namespace reslab
