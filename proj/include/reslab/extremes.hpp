#pragma once

#include "reslab/resonance.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace reslab {

struct Constants {
    double e_gamma = 0.0;
    double c = 0.0;                // 1 + log log 4
    double c0 = 0.0;               // -0.395
    double conjectural_offset = 0.0; // C0 + 1 - log 2
};

Constants constants();

struct ScanReport {
    std::uint64_t q = 0;
    double sigma = 1.0;
    double max_abs_l = 0.0;
    std::uint64_t argmax_index = 0;
    double bound_value = 0.0;
    double margin = 0.0; // max_abs_l - bound_value
    std::uint64_t resonant_index = 0;
    double resonant_abs_l = 0.0;
    double runtime_seconds = 0.0;

    // sigma < 1 scans
    std::optional<double> target_shape;   // (log q)^{1-sigma} (log log q)^{-sigma}
    std::optional<double> max_log_abs_l;
    std::optional<double> c_hat;          // max_log_abs_l / target_shape
    std::optional<std::uint64_t> excluded_count;
    std::optional<double> x_cutoff;
    std::optional<ResonanceReport> certificate;
};

struct CensusRow {
    double delta = 0.0;
    double threshold = 0.0;
    std::uint64_t count = 0;
    std::optional<double> exponent_emp; // log count / log q, absent when count = 0
    double exponent_ref = 0.0;          // 1 - e^{-delta}
    double b_delta = 0.0;               // e^delta e^{-1/sqrt(log log q)} log 4
};

struct CensusReport {
    std::uint64_t q = 0;
    double max_abs_l = 0.0;
    std::vector<CensusRow> rows;
    Constants constants;
};

// e^gamma (log log q + log log log q - C - epsilon). Requires q >= 17.
double theorem1_bound(std::uint64_t q, double epsilon);

// |L(1, chi)| over all non-principal chi, with the argmax and the character
// maximising |R(chi)|^2 for linear weights at B = 1.4. Requires prime q >= 17.
ScanReport scan_theorem1(std::uint64_t q, double epsilon);

CensusReport phi_delta_census(std::uint64_t q, const std::vector<double>& deltas);

// log|L(sigma, chi)| over non-principal chi outside the approximation census
// at `tol`, against (log q)^{1-sigma} (log log q)^{-sigma}. bound_value is
// exp(target_shape), so margin compares |L| with the shape on the |L| scale.
ScanReport scan_theorem3(std::uint64_t q, double sigma, double x_cap, double a_sigma, double y_min,
                         double tol = 1.0);

struct GsCheck {
    double max_abs_l = 0.0;
    double bound = 0.0; // (1/3) log q (1 + slack)
    bool ok = false;
};

GsCheck gs_upper_check(std::uint64_t q, double slack = 0.5);

} // namespace reslab
