#include "reslab/cli.hpp"

#include "reslab/numth.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace reslab::cli {

namespace {

const std::vector<std::string>& known_keys() {
    static const std::vector<std::string> keys{"q",     "sigma", "delta", "B",   "epsilon",    "a-sigma",
                                               "x-cap", "y-min", "N",     "K",   "Y",          "X",
                                               "tol",   "format", "jobs", "output-dir"};
    return keys;
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::string normalize_key(std::string key) {
    for (auto& c : key)
        if (c == '_')
            c = '-';
    return key;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!item.empty())
                out.push_back(item);
            item.clear();
        } else {
            item.push_back(c);
        }
    }
    if (!item.empty())
        out.push_back(item);
    return out;
}

double to_double(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v))
            throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + ": expected a number, got '" + text + "'");
    }
}

std::uint64_t to_count(const std::string& key, const std::string& text) {
    const double v = to_double(key, text);
    if (v < 1.0 || v != std::floor(v) || v > 9.0e15)
        throw ConfigError(key + ": expected a positive integer, got '" + text + "'");
    return static_cast<std::uint64_t>(v);
}

Command command_from(const std::string& name) {
    if (name == "certify")
        return Command::certify;
    if (name == "scan-t1")
        return Command::scan_t1;
    if (name == "census")
        return Command::census;
    if (name == "scan-t3")
        return Command::scan_t3;
    return Command::oracle_check;
}

void apply(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "q") {
        cfg.q_list.clear();
        for (const auto& item : split_list(value))
            cfg.q_list.push_back(to_count("q", item));
    } else if (key == "sigma") {
        cfg.sigma = to_double(key, value);
    } else if (key == "delta") {
        cfg.delta_list.clear();
        for (const auto& item : split_list(value))
            cfg.delta_list.push_back(to_double(key, item));
    } else if (key == "B") {
        cfg.b = to_double(key, value);
    } else if (key == "epsilon") {
        cfg.epsilon = to_double(key, value);
    } else if (key == "a-sigma") {
        cfg.a_sigma = to_double(key, value);
    } else if (key == "x-cap") {
        cfg.x_cap = to_double(key, value);
    } else if (key == "y-min") {
        cfg.y_min = to_double(key, value);
    } else if (key == "N") {
        cfg.n = to_count(key, value);
    } else if (key == "K") {
        cfg.k = to_count(key, value);
    } else if (key == "Y") {
        cfg.y = to_double(key, value);
    } else if (key == "X") {
        cfg.x = to_double(key, value);
    } else if (key == "tol") {
        cfg.tol = to_double(key, value);
    } else if (key == "output-dir") {
        cfg.output_dir = value;
    } else if (key == "format") {
        if (value == "csv")
            cfg.format = Format::csv;
        else if (value == "json")
            cfg.format = Format::json;
        else if (value == "both")
            cfg.format = Format::both;
        else
            throw ConfigError("format: expected csv, json or both, got '" + value + "'");
    } else if (key == "jobs") {
        cfg.jobs = static_cast<unsigned>(to_count(key, value));
    } else {
        throw ConfigError("unknown key '" + key + "'");
    }
}

void validate(const RunConfig& cfg) {
    const bool oracle = cfg.command == Command::oracle_check;
    const bool toy = cfg.command == Command::certify && cfg.x.has_value();
    if (cfg.q_list.empty())
        throw ConfigError("q: at least one modulus is required");
    for (std::uint64_t q : cfg.q_list) {
        if (q < 3 || !is_prime(q))
            throw ConfigError("q: " + std::to_string(q) + " is not an odd prime");
        if (q >= (std::uint64_t{1} << 31))
            throw ConfigError("q: " + std::to_string(q) + " exceeds the supported range (< 2^31)");
        const std::uint64_t floor = oracle ? 5 : (toy ? 3 : 17);
        if (q < floor)
            throw ConfigError("q: " + std::to_string(q) + " is below the minimum " + std::to_string(floor) +
                              " for " + std::string(to_string(cfg.command)));
    }
    switch (cfg.command) {
    case Command::certify:
        if (!toy && !(cfg.b > std::log(4.0)))
            throw ConfigError("B: must exceed log 4 = 1.386294");
        if (cfg.x && !(*cfg.x >= 0.0))
            throw ConfigError("X: must be nonnegative");
        break;
    case Command::scan_t1:
        if (!(cfg.epsilon >= 0.0))
            throw ConfigError("epsilon: must be nonnegative");
        break;
    case Command::census:
        for (double d : cfg.delta_list)
            if (!(d > 0.0))
                throw ConfigError("delta: values must be positive");
        if (cfg.delta_list.empty())
            throw ConfigError("delta: at least one value is required");
        break;
    case Command::scan_t3:
        if (!cfg.sigma)
            throw ConfigError("sigma: required for scan-t3");
        if (!(*cfg.sigma > 0.5 && *cfg.sigma < 1.0))
            throw ConfigError("sigma: must lie in (1/2, 1) for scan-t3");
        if (cfg.a_sigma && !(*cfg.a_sigma > 0.0 && *cfg.a_sigma < 1.0))
            throw ConfigError("a-sigma: must lie in (0, 1)");
        if (!(cfg.tol >= 0.0))
            throw ConfigError("tol: must be nonnegative");
        break;
    case Command::oracle_check:
        break;
    }
}

} // namespace

std::string_view to_string(Command command) {
    switch (command) {
    case Command::certify:
        return "certify";
    case Command::scan_t1:
        return "scan-t1";
    case Command::census:
        return "census";
    case Command::scan_t3:
        return "scan-t3";
    case Command::oracle_check:
        return "oracle-check";
    }
    return "unknown";
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot read " + path.string());
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const std::string body = trim(line);
        if (body.empty())
            continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = normalize_key(trim(body.substr(0, eq)));
        const std::string value = trim(body.substr(eq + 1));
        if (std::find(known_keys().begin(), known_keys().end(), key) == known_keys().end())
            throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        out.emplace_back(key, value);
    }
    return out;
}

RunConfig parse_config(const std::vector<std::string>& args) {
    CLI::App app{"Resonance-method experiments for Dirichlet L-functions modulo a prime", "reslab"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    app.add_option("--config", config_path, "flat key = value file; flags override it");
    std::map<std::string, std::string> raw;
    std::vector<std::string> q_raw;
    std::vector<std::string> delta_raw;
    app.add_option("--q", q_raw, "prime moduli")->delimiter(',');
    app.add_option("--delta", delta_raw, "census delta grid")->delimiter(',');
    for (const auto& key : known_keys()) {
        if (key == "q" || key == "delta")
            continue;
        app.add_option("--" + key, raw[key]);
    }

    const std::vector<std::pair<std::string, std::string>> subcommands{
        {"certify", "finite resonance-ratio certificate (linear weights)"},
        {"scan-t1", "max |L(1, chi)| against e^gamma (log2 q + log3 q - C - epsilon)"},
        {"census", "counts of |L(1, chi)| above the Phi(delta) thresholds"},
        {"scan-t3", "max log|L(sigma, chi)| for 1/2 < sigma < 1 with the half-weight certificate"},
        {"oracle-check", "cross-check the numerical backends"},
    };
    for (const auto& [name, description] : subcommands)
        app.add_subcommand(name, description);

    std::vector<const char*> argv{"reslab"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        RunConfig cfg;
        cfg.help_requested = true;
        cfg.help_text = app.help();
        return cfg;
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    RunConfig cfg;
    cfg.command = command_from(app.get_subcommands().front()->get_name());
    if (!config_path.empty())
        for (const auto& [key, value] : read_config_file(config_path))
            apply(cfg, key, value);

    if (app.count("--q") > 0) {
        std::string joined;
        for (const auto& item : q_raw)
            joined += item + ",";
        apply(cfg, "q", joined);
    }
    if (app.count("--delta") > 0) {
        std::string joined;
        for (const auto& item : delta_raw)
            joined += item + ",";
        apply(cfg, "delta", joined);
    }
    for (const auto& key : known_keys())
        if (key != "q" && key != "delta" && app.count("--" + key) > 0)
            apply(cfg, key, raw[key]);

    validate(cfg);
    return cfg;
}

} // namespace reslab::cli
