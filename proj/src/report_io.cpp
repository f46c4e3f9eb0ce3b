#include "reslab/report_io.hpp"

#include <fmt/format.h>

#include <cstdio>
#include <fstream>
#include <optional>

namespace reslab {

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> opt_from(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<T>();
}

json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

cplx complex_from(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

std::string num(double v) { return fmt::format("{:.17g}", v); }

std::string num(const std::optional<double>& v) { return v ? num(*v) : std::string{}; }

} // namespace

json to_json(const ResonanceReport& r) {
    json j;
    j["q"] = r.q;
    j["sigma"] = r.sigma;
    j["scheme"] = std::string(to_string(r.scheme));
    j["x"] = r.x;
    j["y"] = r.y;
    j["n"] = r.n;
    j["k"] = r.k;
    j["s1"] = complex_json(r.s1);
    j["s2"] = r.s2;
    j["ratio"] = r.ratio;
    j["lower_bound"] = r.lower_bound;
    j["tail_fraction"] = r.tail_fraction;
    j["principal_terms"] = {{"r0_squared", r.principal_terms.r0_squared},
                            {"l_r0_squared", r.principal_terms.l_r0_squared}};
    j["certificate"] = {{"pass", r.certificate.pass},
                        {"margin", r.certificate.margin},
                        {"tau_cert", r.certificate.tau_cert},
                        {"max_tau", r.certificate.max_tau},
                        {"certified_ratio", r.certificate.certified_ratio}};
    j["b"] = opt(r.b);
    j["mertens_target"] = opt(r.mertens_target);
    j["dual_oracle_rel_diff"] = r.dual_oracle_rel_diff;
    if (r.exclusion) {
        const auto& e = *r.exclusion;
        j["exclusion"] = {{"s1_star", complex_json(e.s1_star)},
                          {"s2_star", e.s2_star},
                          {"ratio_star", e.ratio_star},
                          {"relative_change", e.relative_change},
                          {"log_r0_squared", e.log_r0_squared},
                          {"log_s2_star", e.log_s2_star},
                          {"order1_log_bound", opt(e.order1_log_bound)},
                          {"order2_log_bound", opt(e.order2_log_bound)}};
    } else {
        j["exclusion"] = nullptr;
    }
    return j;
}

ResonanceReport resonance_report_from_json(const json& j) {
    ResonanceReport r;
    r.q = j.at("q").get<std::uint64_t>();
    r.sigma = j.at("sigma").get<double>();
    r.scheme = scheme_kind_from_string(j.at("scheme").get<std::string>());
    r.x = j.at("x").get<double>();
    r.y = j.at("y").get<double>();
    r.n = j.at("n").get<std::uint64_t>();
    r.k = j.at("k").get<std::uint64_t>();
    r.s1 = complex_from(j.at("s1"));
    r.s2 = j.at("s2").get<double>();
    r.ratio = j.at("ratio").get<double>();
    r.lower_bound = j.at("lower_bound").get<double>();
    r.tail_fraction = j.at("tail_fraction").get<double>();
    const auto& pt = j.at("principal_terms");
    r.principal_terms = {pt.at("r0_squared").get<double>(), pt.at("l_r0_squared").get<double>()};
    const auto& c = j.at("certificate");
    r.certificate = {c.at("pass").get<bool>(), c.at("margin").get<double>(), c.at("tau_cert").get<double>(),
                     c.at("max_tau").get<double>(), c.at("certified_ratio").get<double>()};
    r.b = opt_from<double>(j, "b");
    r.mertens_target = opt_from<double>(j, "mertens_target");
    r.dual_oracle_rel_diff = j.at("dual_oracle_rel_diff").get<double>();
    if (j.contains("exclusion") && !j.at("exclusion").is_null()) {
        const auto& e = j.at("exclusion");
        PrincipalExclusion ex;
        ex.s1_star = complex_from(e.at("s1_star"));
        ex.s2_star = e.at("s2_star").get<double>();
        ex.ratio_star = e.at("ratio_star").get<double>();
        ex.relative_change = e.at("relative_change").get<double>();
        ex.log_r0_squared = e.at("log_r0_squared").get<double>();
        ex.log_s2_star = e.at("log_s2_star").get<double>();
        ex.order1_log_bound = opt_from<double>(e, "order1_log_bound");
        ex.order2_log_bound = opt_from<double>(e, "order2_log_bound");
        r.exclusion = ex;
    }
    return r;
}

json to_json(const ScanReport& r) {
    json j;
    j["q"] = r.q;
    j["sigma"] = r.sigma;
    j["max_abs_l"] = r.max_abs_l;
    j["argmax_index"] = r.argmax_index;
    j["bound_value"] = r.bound_value;
    j["margin"] = r.margin;
    j["resonant_index"] = r.resonant_index;
    j["resonant_abs_l"] = r.resonant_abs_l;
    j["runtime_seconds"] = r.runtime_seconds;
    j["target_shape"] = opt(r.target_shape);
    j["max_log_abs_l"] = opt(r.max_log_abs_l);
    j["c_hat"] = opt(r.c_hat);
    j["excluded_count"] = opt(r.excluded_count);
    j["x_cutoff"] = opt(r.x_cutoff);
    j["certificate"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
    return j;
}

ScanReport scan_report_from_json(const json& j) {
    ScanReport r;
    r.q = j.at("q").get<std::uint64_t>();
    r.sigma = j.at("sigma").get<double>();
    r.max_abs_l = j.at("max_abs_l").get<double>();
    r.argmax_index = j.at("argmax_index").get<std::uint64_t>();
    r.bound_value = j.at("bound_value").get<double>();
    r.margin = j.at("margin").get<double>();
    r.resonant_index = j.at("resonant_index").get<std::uint64_t>();
    r.resonant_abs_l = j.at("resonant_abs_l").get<double>();
    r.runtime_seconds = j.at("runtime_seconds").get<double>();
    r.target_shape = opt_from<double>(j, "target_shape");
    r.max_log_abs_l = opt_from<double>(j, "max_log_abs_l");
    r.c_hat = opt_from<double>(j, "c_hat");
    r.excluded_count = opt_from<std::uint64_t>(j, "excluded_count");
    r.x_cutoff = opt_from<double>(j, "x_cutoff");
    if (j.contains("certificate") && !j.at("certificate").is_null())
        r.certificate = resonance_report_from_json(j.at("certificate"));
    return r;
}

json to_json(const CensusReport& r) {
    json j;
    j["q"] = r.q;
    j["max_abs_l"] = r.max_abs_l;
    j["rows"] = json::array();
    for (const auto& row : r.rows) {
        j["rows"].push_back({{"delta", row.delta},
                             {"threshold", row.threshold},
                             {"count", row.count},
                             {"exponent_emp", opt(row.exponent_emp)},
                             {"exponent_ref", row.exponent_ref},
                             {"b_delta", row.b_delta}});
    }
    j["constants"] = {{"e_gamma", r.constants.e_gamma},
                      {"c", r.constants.c},
                      {"c0", r.constants.c0},
                      {"conjectural_offset", r.constants.conjectural_offset}};
    return j;
}

CensusReport census_report_from_json(const json& j) {
    CensusReport r;
    r.q = j.at("q").get<std::uint64_t>();
    r.max_abs_l = j.at("max_abs_l").get<double>();
    for (const auto& row : j.at("rows")) {
        CensusRow c;
        c.delta = row.at("delta").get<double>();
        c.threshold = row.at("threshold").get<double>();
        c.count = row.at("count").get<std::uint64_t>();
        c.exponent_emp = opt_from<double>(row, "exponent_emp");
        c.exponent_ref = row.at("exponent_ref").get<double>();
        c.b_delta = row.at("b_delta").get<double>();
        r.rows.push_back(c);
    }
    const auto& k = j.at("constants");
    r.constants = {k.at("e_gamma").get<double>(), k.at("c").get<double>(), k.at("c0").get<double>(),
                   k.at("conjectural_offset").get<double>()};
    return r;
}

std::string resonance_csv(const ResonanceReport& r) {
    std::string out = "q,sigma,scheme,x,y,n,k,s1_re,s1_im,s2,ratio,lower_bound,tail_fraction,r0_squared,"
                      "l_r0_squared,pass,margin,tau_cert,max_tau,certified_ratio,ratio_star,relative_change\n";
    const auto ex = r.exclusion;
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.q, num(r.sigma),
                       to_string(r.scheme), num(r.x), num(r.y), r.n, r.k, num(r.s1.real()), num(r.s1.imag()),
                       num(r.s2), num(r.ratio), num(r.lower_bound), num(r.tail_fraction),
                       num(r.principal_terms.r0_squared), num(r.principal_terms.l_r0_squared),
                       r.certificate.pass ? "true" : "false", num(r.certificate.margin), num(r.certificate.tau_cert),
                       num(r.certificate.max_tau), num(r.certificate.certified_ratio),
                       ex ? num(ex->ratio_star) : std::string{}, ex ? num(ex->relative_change) : std::string{});
    return out;
}

std::string scan_csv(const ScanReport& r) {
    return fmt::format("{}\n{},{},,,,{},{},{},,\n", extremes_csv_header, r.q, num(r.sigma), num(r.max_abs_l),
                       num(r.bound_value), num(r.margin));
}

std::string census_csv(const CensusReport& r) {
    std::string out = std::string(extremes_csv_header) + "\n";
    for (const auto& row : r.rows) {
        out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", r.q, num(1.0), num(row.delta), num(row.threshold),
                           row.count, num(r.max_abs_l), num(row.threshold), num(r.max_abs_l - row.threshold),
                           num(row.exponent_emp), num(row.exponent_ref));
    }
    return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) {
            std::error_code ignored;
            fs::remove(tmp, ignored);
            throw IoError("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw IoError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

} // namespace reslab
