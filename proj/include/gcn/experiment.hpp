#pragma once

#include <cstdint>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcn {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& known_commands() {
    static const std::vector<std::string> cmds{"gen",     "play",    "solve",    "boxgame", "ballsbins",
                                               "arrange", "formulas", "estimate", "sweep"};
    return cmds;
}

// A run is fully described by the command, its parameters and the master
// seed. Worker count and output directory affect where and how fast results
// are produced, never their content.
struct ExperimentConfig {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    std::uint64_t seed = 0;
    unsigned workers = 0;  // 0: GCN_WORKERS or hardware concurrency
    std::string out_dir = "out";

    nlohmann::json to_json() const;
    static ExperimentConfig from_json(const nlohmann::json& j);
};

ExperimentConfig load_config_file(const std::string& path);

// 16 hex digits, FNV-1a over the canonical JSON of command, params and seed.
std::string config_hash(const ExperimentConfig& config);

// Dispatches to the command. Returns kExitOk, kExitConfig or kExitRuntime;
// messages go to err.
int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

// Drops the trailing wall-clock column from a records.csv body so runs can be
// compared byte for byte.
std::string strip_metadata_column(const std::string& csv);

// --- parameter access (throws ConfigError) ---
int param_int(const nlohmann::json& params, const std::string& key);
int param_int(const nlohmann::json& params, const std::string& key, int fallback);
double param_double(const nlohmann::json& params, const std::string& key);
double param_double(const nlohmann::json& params, const std::string& key, double fallback);
std::string param_string(const nlohmann::json& params, const std::string& key);
std::string param_string(const nlohmann::json& params, const std::string& key, const std::string& fallback);
bool param_bool(const nlohmann::json& params, const std::string& key, bool fallback);
// Accepts a JSON array, "a,b,c", or "lo:hi:step".
std::vector<int> param_int_list(const nlohmann::json& params, const std::string& key);
std::vector<std::int64_t> param_int64_list(const nlohmann::json& params, const std::string& key);
std::vector<std::string> param_string_list(const nlohmann::json& params, const std::string& key,
                                           const std::vector<std::string>& fallback);

// Converts a command-line value to JSON: integer, real, true/false, else string.
nlohmann::json parse_flag_value(const std::string& text);

}  // namespace gcn
