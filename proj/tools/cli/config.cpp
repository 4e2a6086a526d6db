#include "config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace htlab::cli {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long parse_long(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        long x = std::stol(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw UsageError("config: " + key + " expects an integer, got '" + v + "'");
    }
}

}  // namespace

void RunConfig::validate() const {
    if (precision_digits < 16) throw UsageError("precision must be at least 16 digits");
    if (precision_digits > 100000) throw UsageError("precision is unreasonably large");
    if (worker_count < 1) throw UsageError("workers must be at least 1");
    if (output_dir.empty()) throw UsageError("output directory must not be empty");
}

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw UsageError("format must be csv or json, got '" + s + "'");
}

std::string to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

void apply_config_text(RunConfig& cfg, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key == "precision") {
            cfg.precision_digits = static_cast<int>(parse_long(key, value));
        } else if (key == "workers") {
            long w = parse_long(key, value);
            if (w < 1) throw UsageError("config: workers must be at least 1");
            cfg.worker_count = static_cast<unsigned>(w);
        } else if (key == "seed") {
            cfg.seed = static_cast<unsigned long>(parse_long(key, value));
        } else if (key == "out") {
            cfg.output_dir = value;
        } else if (key == "format") {
            cfg.format = parse_format(value);
        } else {
            throw UsageError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read config file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    apply_config_text(cfg, ss.str());
}

std::string canonical(const Params& p) {
    std::string out;
    for (const auto& [k, v] : p) out += k + "=" + v + "\n";
    return out;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string output_stem(const std::string& experiment, const Params& p) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canonical(p))));
    return experiment + "-" + buf;
}

}  // namespace htlab::cli
