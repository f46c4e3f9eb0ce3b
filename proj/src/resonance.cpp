#include "reslab/resonance.hpp"

#include "reslab/lfunc.hpp"
#include "reslab/numth.hpp"
#include "reslab/special.hpp"
#include "reslab/summation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace reslab {

namespace {

void require_prime_modulus(std::uint64_t q, const char* who) {
    if (q < 3 || !is_prime(q))
        throw std::invalid_argument(std::string(who) + ": modulus must be an odd prime, got " + std::to_string(q));
}

void require_cutoff_below(const WeightScheme& scheme, std::uint64_t q, const char* who) {
    if (!(scheme.cutoff() < static_cast<double>(q)))
        throw std::invalid_argument(std::string(who) + ": resonator cutoff must be below the modulus");
}

void require_l_cutoff(const WeightScheme& scheme, double y_cutoff, const char* who) {
    if (y_cutoff < scheme.cutoff())
        throw std::invalid_argument(std::string(who) + ": Y must be at least the resonator cutoff X");
}

// f[a-1] = r[a] for a = 1..q-1.
std::vector<double> coprime_part(const std::vector<double>& profile) {
    return {profile.begin() + 1, profile.end()};
}

double relative_difference(double a, double b) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return scale > 0.0 ? std::fabs(a - b) / scale : 0.0;
}

// phi(q) sum_c beta(c) sum_a r(a) r(c a mod q), over c with beta(c) != 0.
double twisted_pair_sum(std::uint64_t q, const std::vector<double>& r, const std::vector<double>& beta) {
    CompensatedSum outer;
    for (std::uint64_t c = 1; c < q; ++c) {
        if (beta[c] == 0.0)
            continue;
        CompensatedSum inner;
        std::uint64_t idx = c;
        for (std::uint64_t a = 1; a < q; ++a) {
            inner += r[a] * r[idx];
            idx += c;
            if (idx >= q)
                idx -= q;
        }
        outer += beta[c] * inner.value();
    }
    return static_cast<double>(q - 1) * outer.value();
}

cplx weighted_power_sum(const CharacterGroup& group, const std::vector<double>& r, const std::vector<double>& beta) {
    const auto rf = coprime_part(r);
    const auto bf = coprime_part(beta);
    const auto big_r = dft_over_group(group, std::span<const double>(rf));
    const auto big_l = dft_over_group(group, std::span<const double>(bf));
    ComplexCompensatedSum sum;
    for (std::size_t j = 0; j < big_r.size(); ++j)
        sum += big_l[j] * std::norm(big_r[j]);
    return sum.value();
}

std::vector<CoeffEntry> smooth_lower_terms(const ResonatorCoeffs& coeffs, std::uint64_t k_limit) {
    // w_k = q_k / k on X-smooth k <= K
    std::vector<CoeffEntry> out;
    const auto ks = enumerate_coeffs(coeffs.scheme, k_limit);
    out.reserve(ks.entries.size());
    for (const auto& [k, qk] : ks.entries)
        out.push_back({k, qk / static_cast<double>(k)});
    return out;
}

void fill_certificate(ResonanceReport& report, const ResonatorCoeffs& coeffs, std::span<const CoeffEntry> lower_terms,
                      double max_tau) {
    auto& cert = report.certificate;
    cert.max_tau = max_tau;
    cert.certified_ratio = finite_relation_bound(report.q, coeffs, lower_terms);
    cert.tau_cert = std::max(0.0, 1.0 - cert.certified_ratio / report.lower_bound);
    cert.margin = report.ratio - (1.0 - cert.tau_cert) * report.lower_bound;
    cert.pass = cert.margin >= 0.0 && cert.tau_cert <= max_tau;
}

double sum_weights(std::span<const CoeffEntry> entries, std::uint64_t q) {
    CompensatedSum s;
    for (const auto& e : entries)
        if (e.n % q != 0)
            s += e.weight;
    return s.value();
}

} // namespace

std::vector<CoeffEntry> euler_series_coeffs(double sigma, double y_cutoff, std::uint64_t k_limit) {
    if (k_limit == 0)
        throw std::invalid_argument("euler_series_coeffs: K must be at least 1");
    std::vector<CoeffEntry> out;
    const auto primes = y_cutoff >= 2.0 ? sieve_primes(static_cast<std::uint64_t>(y_cutoff)).primes
                                        : std::vector<std::uint64_t>{};
    for (std::uint64_t k : smooth_numbers(primes.empty() ? 1 : primes.back(), k_limit))
        out.push_back({k, detail::powm(k, sigma)});
    return out;
}

std::vector<CoeffEntry> prime_series_coeffs(double sigma, double x_cutoff) {
    std::vector<CoeffEntry> out;
    if (x_cutoff < 2.0)
        return out;
    for (std::uint64_t p : sieve_primes(static_cast<std::uint64_t>(x_cutoff)).primes)
        out.push_back({p, detail::powm(p, sigma)});
    return out;
}

std::vector<double> residue_profile(std::span<const CoeffEntry> entries, std::uint64_t q) {
    std::vector<CompensatedSum> acc(q);
    for (const auto& e : entries)
        acc[e.n % q] += e.weight;
    std::vector<double> out(q);
    for (std::uint64_t a = 0; a < q; ++a)
        out[a] = acc[a].value();
    return out;
}

double s2_character_sum(const CharacterGroup& group, const ResonatorCoeffs& coeffs) {
    const std::uint64_t q = group.modulus();
    require_cutoff_below(coeffs.scheme, q, "s2_character_sum");
    const auto r = coprime_part(residue_profile(coeffs.entries, q));
    const auto big_r = dft_over_group(group, std::span<const double>(r));
    CompensatedSum sum;
    for (const auto& v : big_r)
        sum += std::norm(v);
    return sum.value();
}

double s2_congruence_form(std::uint64_t q, const ResonatorCoeffs& coeffs) {
    require_prime_modulus(q, "s2_congruence_form");
    require_cutoff_below(coeffs.scheme, q, "s2_congruence_form");
    const auto r = residue_profile(coeffs.entries, q);
    CompensatedSum sum;
    for (std::uint64_t a = 1; a < q; ++a)
        sum += r[a] * r[a];
    return static_cast<double>(q - 1) * sum.value();
}

cplx s1_character_sum(const CharacterGroup& group, const ResonatorCoeffs& coeffs,
                      std::span<const CoeffEntry> l_series) {
    const std::uint64_t q = group.modulus();
    require_cutoff_below(coeffs.scheme, q, "s1_character_sum");
    return weighted_power_sum(group, residue_profile(coeffs.entries, q), residue_profile(l_series, q));
}

double s1_congruence_form(std::uint64_t q, const ResonatorCoeffs& coeffs, std::span<const CoeffEntry> l_series) {
    require_prime_modulus(q, "s1_congruence_form");
    require_cutoff_below(coeffs.scheme, q, "s1_congruence_form");
    return twisted_pair_sum(q, residue_profile(coeffs.entries, q), residue_profile(l_series, q));
}

double s2_character_sum(const CharacterGroup& group, const WeightScheme& scheme, std::uint64_t n_limit) {
    require_cutoff_below(scheme, group.modulus(), "s2_character_sum");
    return s2_character_sum(group, enumerate_coeffs(scheme, n_limit));
}

double s2_congruence_form(std::uint64_t q, const WeightScheme& scheme, std::uint64_t n_limit) {
    require_cutoff_below(scheme, q, "s2_congruence_form");
    return s2_congruence_form(q, enumerate_coeffs(scheme, n_limit));
}

cplx s1_character_sum(const CharacterGroup& group, const WeightScheme& scheme, double sigma, double y_cutoff,
                      std::uint64_t n_limit, std::uint64_t k_limit) {
    require_cutoff_below(scheme, group.modulus(), "s1_character_sum");
    require_l_cutoff(scheme, y_cutoff, "s1_character_sum");
    const auto l_series = euler_series_coeffs(sigma, y_cutoff, k_limit);
    return s1_character_sum(group, enumerate_coeffs(scheme, n_limit), l_series);
}

double s1_congruence_form(std::uint64_t q, const WeightScheme& scheme, double sigma, double y_cutoff,
                          std::uint64_t n_limit, std::uint64_t k_limit) {
    require_cutoff_below(scheme, q, "s1_congruence_form");
    require_l_cutoff(scheme, y_cutoff, "s1_congruence_form");
    const auto l_series = euler_series_coeffs(sigma, y_cutoff, k_limit);
    return s1_congruence_form(q, enumerate_coeffs(scheme, n_limit), l_series);
}

double finite_relation_bound(std::uint64_t q, const ResonatorCoeffs& coeffs, std::span<const CoeffEntry> lower_terms) {
    const auto r = residue_profile(coeffs.entries, q);
    const auto& entries = coeffs.entries;

    // prefix[i] = sum_{idx < i} q_n r(n mod q); S2(N, M) / phi = prefix[#{n <= M}]
    std::vector<double> prefix(entries.size() + 1, 0.0);
    CompensatedSum running;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        running += entries[i].weight * r[entries[i].n % q];
        prefix[i + 1] = running.value();
    }
    const double full = prefix.back();
    if (!(full > 0.0))
        throw std::runtime_error("finite_relation_bound: S2 vanished");

    CompensatedSum bound;
    for (const auto& [k, w] : lower_terms) {
        if (k % q == 0 || w == 0.0)
            continue;
        const std::uint64_t m = coeffs.limit / k;
        const auto it = std::upper_bound(entries.begin(), entries.end(), m,
                                         [](std::uint64_t value, const CoeffEntry& e) { return value < e.n; });
        bound += w * prefix[static_cast<std::size_t>(it - entries.begin())] / full;
    }
    return bound.value();
}

double theorem1_cutoff(std::uint64_t q, double b) {
    const double l = std::log(static_cast<double>(q));
    return l * std::log(l) / b;
}

ResonanceReport ratio_certificate(std::uint64_t q, const WeightScheme& scheme, std::uint64_t n_limit,
                                  std::uint64_t k_limit, double y_cutoff, double max_tau) {
    require_prime_modulus(q, "ratio_certificate");
    if (scheme.kind() != SchemeKind::linear)
        throw std::invalid_argument("ratio_certificate: requires the linear weight scheme");
    require_cutoff_below(scheme, q, "ratio_certificate");
    require_l_cutoff(scheme, y_cutoff, "ratio_certificate");
    if (n_limit == 0 || k_limit == 0)
        throw std::invalid_argument("ratio_certificate: N and K must be at least 1");

    const auto group = build_group(q);
    const auto coeffs = enumerate_coeffs(scheme, n_limit);
    const auto l_series = euler_series_coeffs(1.0, y_cutoff, k_limit);

    ResonanceReport report;
    report.q = q;
    report.sigma = 1.0;
    report.scheme = SchemeKind::linear;
    report.x = scheme.cutoff();
    report.y = y_cutoff;
    report.n = n_limit;
    report.k = k_limit;

    report.s2 = s2_congruence_form(q, coeffs);
    const double s1 = s1_congruence_form(q, coeffs, l_series);
    report.s1 = {s1, 0.0};
    report.ratio = std::abs(report.s1) / report.s2;
    report.tail_fraction = coeffs.tail_fraction();

    const double s2_chars = s2_character_sum(group, coeffs);
    const cplx s1_chars = s1_character_sum(group, coeffs, l_series);
    report.dual_oracle_rel_diff = std::max(relative_difference(report.s2, s2_chars),
                                           std::abs(s1_chars - report.s1) / std::abs(report.s1));

    report.principal_terms.r0_squared = coeffs.partial * coeffs.partial;
    report.principal_terms.l_r0_squared = sum_weights(l_series, q) * report.principal_terms.r0_squared;

    report.lower_bound = lower_bound_product(scheme).product;
    if (scheme.cutoff() > 1.0) {
        const double log_x = std::log(scheme.cutoff());
        report.mertens_target = std::exp(euler_gamma) * log_x * (1.0 - 1.0 / log_x);
    }

    const auto lower_terms = smooth_lower_terms(coeffs, k_limit);
    fill_certificate(report, coeffs, lower_terms, max_tau);
    return report;
}

ResonanceReport ratio_certificate(std::uint64_t q, double b, std::uint64_t n_limit, std::uint64_t k_limit,
                                  double y_cutoff, double max_tau) {
    if (!(b > std::log(4.0)))
        throw std::invalid_argument("ratio_certificate: B must exceed log 4");
    require_prime_modulus(q, "ratio_certificate");
    auto report = ratio_certificate(q, WeightScheme::linear(theorem1_cutoff(q, b)), n_limit, k_limit, y_cutoff,
                                    max_tau);
    report.b = b;
    return report;
}

ResonanceReport exclude_principal(const ResonanceReport& report, const CharacterGroup& group) {
    if (group.modulus() != report.q)
        throw std::invalid_argument("exclude_principal: group modulus does not match the report");
    const bool linear = report.scheme == SchemeKind::linear;
    const auto scheme = linear ? WeightScheme::linear(report.x) : WeightScheme::half(report.y);
    const auto coeffs = enumerate_coeffs(scheme, report.n);
    const auto l_series = linear ? euler_series_coeffs(report.sigma, report.y, report.k)
                                 : prime_series_coeffs(report.sigma, report.x);

    const Character chi0 = group.principal();
    ComplexCompensatedSum r0;
    for (const auto& [n, w] : coeffs.entries)
        r0 += w * chi0(n);
    ComplexCompensatedSum l0;
    for (const auto& [k, b] : l_series)
        l0 += b * chi0(k);
    const double r0_squared = std::norm(r0.value());

    ResonanceReport out = report;
    PrincipalExclusion ex;
    ex.s1_star = report.s1 - l0.value() * r0_squared;
    ex.s2_star = report.s2 - r0_squared;
    if (!(ex.s2_star > 0.0))
        throw std::runtime_error("exclude_principal: S2 without the principal character is not positive "
                                 "(modulus too small for the chosen cutoff)");
    ex.ratio_star = std::abs(ex.s1_star) / ex.s2_star;
    ex.relative_change = (ex.ratio_star - report.ratio) / report.ratio;
    ex.log_r0_squared = std::log(r0_squared);
    ex.log_s2_star = std::log(ex.s2_star);
    if (report.b) {
        const double log_q = std::log(static_cast<double>(report.q));
        ex.order1_log_bound = (1.0 + (2.0 - std::log(4.0)) / *report.b) * log_q;
        ex.order2_log_bound = 2.0 * log_q / *report.b;
    }
    out.principal_terms.r0_squared = r0_squared;
    out.principal_terms.l_r0_squared = std::abs(l0.value()) * r0_squared;
    out.exclusion = ex;
    return out;
}

double default_a_sigma(double sigma) { return (2.0 * sigma - 1.0) / (2.0 - sigma); }

Theorem3Params theorem3_params(std::uint64_t q, double sigma, double a_sigma, double y_min, double x_cap) {
    const double l = std::log(static_cast<double>(q));
    const double y = std::max(0.5 * a_sigma * l * std::log(l), y_min);
    const double x = std::min(std::pow(l, 3.0 / (sigma - 0.5)), x_cap);
    return {y, x};
}

ResonanceReport theorem3_quotient(std::uint64_t q, double sigma, double a_sigma, double y_min, double x_cap,
                                  std::uint64_t n_limit, double max_tau) {
    if (!(sigma > 0.5 && sigma < 1.0))
        throw std::domain_error("theorem3_quotient: sigma must lie in (1/2, 1)");
    require_prime_modulus(q, "theorem3_quotient");
    if (!(a_sigma > 0.0 && a_sigma < 1.0))
        throw std::invalid_argument("theorem3_quotient: a_sigma must lie in (0, 1)");
    const auto params = theorem3_params(q, sigma, a_sigma, y_min, x_cap);
    if (!(params.y < static_cast<double>(q)))
        throw std::invalid_argument("theorem3_quotient: Y must be below the modulus");
    if (!(params.x >= 2.0))
        throw std::invalid_argument("theorem3_quotient: X must be at least 2");

    const auto scheme = WeightScheme::half(params.y);
    const std::uint64_t n = n_limit == 0 ? truncation_for_tail(scheme, 1e-3) : n_limit;
    const auto group = build_group(q);
    const auto coeffs = enumerate_coeffs(scheme, n);
    const auto l_series = prime_series_coeffs(sigma, params.x);

    ResonanceReport report;
    report.q = q;
    report.sigma = sigma;
    report.scheme = SchemeKind::half;
    report.x = params.x;
    report.y = params.y;
    report.n = n;
    report.k = static_cast<std::uint64_t>(params.x);

    report.s2 = s2_congruence_form(q, coeffs);
    report.s1 = {s1_congruence_form(q, coeffs, l_series), 0.0};
    report.ratio = std::abs(report.s1) / report.s2;
    report.tail_fraction = coeffs.tail_fraction();

    const double s2_chars = s2_character_sum(group, coeffs);
    const cplx s1_chars = s1_character_sum(group, coeffs, l_series);
    report.dual_oracle_rel_diff = std::max(relative_difference(report.s2, s2_chars),
                                           std::abs(s1_chars - report.s1) / std::abs(report.s1));

    report.principal_terms.r0_squared = coeffs.partial * coeffs.partial;
    report.principal_terms.l_r0_squared = sum_weights(l_series, q) * report.principal_terms.r0_squared;

    std::vector<CoeffEntry> lower_terms;
    CompensatedSum target;
    for (const auto& [p, w] : scheme.support()) {
        target += w * detail::powm(p, sigma);
        if (static_cast<double>(p) <= params.x)
            lower_terms.push_back({p, w * detail::powm(p, sigma)});
    }
    report.lower_bound = target.value();
    fill_certificate(report, coeffs, lower_terms, max_tau);
    return report;
}

BadSetBudget bad_set_budget(std::uint64_t q, double sigma, double a_sigma, double y_cutoff) {
    if (!(sigma > 0.5 && sigma < 1.0))
        throw std::domain_error("bad_set_budget: sigma must lie in (1/2, 1)");
    BadSetBudget out;
    const double qd = static_cast<double>(q);
    out.bound_count = std::pow(qd, 1.0 - a_sigma);
    const auto count = y_cutoff >= 2.0 ? sieve_primes(static_cast<std::uint64_t>(y_cutoff)).primes.size() : 0;
    out.r_bound = std::ldexp(1.0, static_cast<int>(2 * count));
    out.bad_mass = out.bound_count * out.r_bound;
    out.s2_floor = qd - 1.0;
    return out;
}

} // namespace reslab
