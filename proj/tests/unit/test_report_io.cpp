#include "reslab/report_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace reslab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("reslab_io_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("resonance report round trip") {
    auto r = ratio_certificate(7, WeightScheme::linear(3.0), 8, 8, 3.0);
    r = exclude_principal(r, build_group(7));
    const auto text = to_json(r).dump();
    const auto back = resonance_report_from_json(json::parse(text));
    CHECK(to_json(back) == to_json(r));
    CHECK(back.s2 == r.s2);
    CHECK(back.s1 == r.s1);
    CHECK(back.exclusion->ratio_star == r.exclusion->ratio_star);
    const auto j = json::parse(text);
    CHECK(j.at("s1").at("re").get<double>() == r.s1.real());
    CHECK(j.at("b").is_null());
    CHECK(j.contains("tail_fraction"));
    CHECK(j.contains("principal_terms"));
}

TEST_CASE("scan and census round trip") {
    const auto s = scan_theorem3(101, 0.75, 1e3, 0.4, 20.0);
    const auto s_back = scan_report_from_json(json::parse(to_json(s).dump()));
    CHECK(to_json(s_back) == to_json(s));
    CHECK(std::fabs(*s_back.c_hat - *s.c_hat) <= 1e-12);

    const auto c = phi_delta_census(101, {0.5, 1.0, 2.0});
    const auto c_back = census_report_from_json(json::parse(to_json(c).dump()));
    CHECK(to_json(c_back) == to_json(c));
}

TEST_CASE("CSV layout") {
    const auto c = phi_delta_census(1009, {0.5, 1.0});
    const auto text = census_csv(c);
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);
    CHECK(header == "q,sigma,delta,threshold,count,max_abs_l,bound,margin,exponent_emp,exponent_ref");
    std::string row;
    int rows = 0;
    while (std::getline(in, row)) {
        ++rows;
        CHECK(std::count(row.begin(), row.end(), ',') == 9);
    }
    CHECK(rows == 2);
    CHECK(census_csv(phi_delta_census(1009, {0.5, 1.0})) == text);

    const auto scan = scan_csv(scan_theorem1(101, 0.0));
    const auto second_line = scan.substr(scan.find('\n') + 1);
    CHECK(std::count(second_line.begin(), second_line.end(), ',') == 9);

    const auto res = resonance_csv(ratio_certificate(7, WeightScheme::linear(3.0), 8, 8, 3.0));
    CHECK(std::count(res.begin(), res.end(), '\n') == 2);
}

TEST_CASE("atomic writes") {
    const auto dir = scratch("atomic");
    const auto target = dir / "out.csv";
    write_atomic(target, "a,b\n1,2\n");
    CHECK(slurp(target) == "a,b\n1,2\n");
    write_atomic(target, "replaced\n");
    CHECK(slurp(target) == "replaced\n");
    CHECK_FALSE(fs::exists(dir / "out.csv.tmp"));

    CHECK_THROWS_AS(write_atomic(dir / "missing" / "x.csv", "data"), IoError);
    CHECK_FALSE(fs::exists(dir / "missing"));
    fs::remove_all(dir);
}
