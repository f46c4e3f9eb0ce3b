#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace reslab::cli {

enum class Command { certify, scan_t1, census, scan_t3, oracle_check };
enum class Format { csv, json, both };

std::string_view to_string(Command command);

enum ExitCode : int {
    exit_ok = 0,
    exit_certificate_failed = 1,
    exit_config_error = 2,
    exit_io_error = 3,
};

struct RunConfig {
    Command command = Command::certify;
    std::vector<std::uint64_t> q_list;
    std::optional<double> sigma;
    std::vector<double> delta_list{0.5, 1.0, 2.0, 3.0};
    double b = 1.4;
    double epsilon = 0.0;
    std::optional<double> a_sigma; // defaults to (2 sigma - 1)/(2 - sigma)
    double x_cap = 1e5;
    double y_min = 20.0;
    std::uint64_t n = 10000;
    std::uint64_t k = 10000;
    double y = 10000.0;
    std::optional<double> x; // explicit resonator cutoff for certify
    double tol = 1.0;
    std::filesystem::path output_dir = ".";
    Format format = Format::both;
    unsigned jobs = 1;
    bool help_requested = false;
    std::string help_text;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// args excludes the program name. Values from --config are applied first and
// then overridden by flags. Throws ConfigError naming the violated rule.
RunConfig parse_config(const std::vector<std::string>& args);

// Flat `key = value` text with `#` comments; keys are flag names without the
// leading dashes. Throws ConfigError on unknown keys or malformed lines.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Backend agreement, orthogonality, fast/naive DFT and dual-form S1/S2 checks
// for each modulus; prints one table row per check.
int oracle_check(const std::vector<std::uint64_t>& q_list, std::ostream& out);

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace reslab::cli
