#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace htlab::cli {

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

struct RunConfig {
    int precision_digits = 40;
    unsigned worker_count = 1;
    unsigned long seed = 0;
    std::string output_dir = ".";
    Format format = Format::csv;

    /// Throws UsageError on out-of-range fields.
    void validate() const;
};

/// Applies "key = value" lines (keys: precision, workers, seed, out,
/// format); '#' starts a comment. Unknown keys and bad values are usage
/// errors.
void apply_config_text(RunConfig& cfg, const std::string& text);
void apply_config_file(RunConfig& cfg, const std::string& path);

Format parse_format(const std::string& s);
std::string to_string(Format f);

/// Canonical "key=value" lines, sorted by key. Used for file naming.
using Params = std::map<std::string, std::string>;
std::string canonical(const Params& p);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& s);

/// "<experiment>-<16 hex digits>", hashed over the canonical parameters.
/// The worker count and output directory are not part of the hash.
std::string output_stem(const std::string& experiment, const Params& p);

}  // namespace htlab::cli
