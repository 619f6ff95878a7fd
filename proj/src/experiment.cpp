#include "gcn/experiment.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "commands.hpp"

namespace gcn {

namespace {

// Keys that steer execution but not results; left out of the hash.
bool is_execution_key(const std::string& key) { return key == "max_new_records" || key == "out"; }

const nlohmann::json* find(const nlohmann::json& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end() || it->is_null()) return nullptr;
    return &*it;
}

[[noreturn]] void bad(const std::string& key, const std::string& what) {
    throw ConfigError("parameter '" + key + "': " + what);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    return parts;
}

std::int64_t to_int64(const std::string& key, const std::string& s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) bad(key, "expected an integer, got '" + s + "'");
    return v;
}

}  // namespace

nlohmann::json ExperimentConfig::to_json() const {
    return {{"command", command}, {"params", params}, {"seed", seed}, {"workers", workers}, {"out_dir", out_dir}};
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config: expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "command" && it.key() != "params" && it.key() != "seed" && it.key() != "workers" &&
            it.key() != "out_dir")
            throw ConfigError("config: unknown field '" + it.key() + "'");
    ExperimentConfig c;
    try {
        if (j.contains("command")) c.command = j.at("command").get<std::string>();
        if (j.contains("params")) c.params = j.at("params");
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("workers")) c.workers = j.at("workers").get<unsigned>();
        if (j.contains("out_dir")) c.out_dir = j.at("out_dir").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (!c.params.is_object()) throw ConfigError("config: 'params' must be an object");
    return c;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    return ExperimentConfig::from_json(j);
}

std::string config_hash(const ExperimentConfig& config) {
    nlohmann::json params = nlohmann::json::object();
    for (auto it = config.params.begin(); it != config.params.end(); ++it)
        if (!is_execution_key(it.key())) params[it.key()] = it.value();
    const std::string canonical = nlohmann::json{{"command", config.command}, {"params", params}, {"seed", config.seed}}.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : canonical) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const auto& c = config.command;
        if (c == "gen") return detail::cmd_gen(config, out, err);
        if (c == "play") return detail::cmd_play(config, out, err);
        if (c == "solve") return detail::cmd_solve(config, out, err);
        if (c == "boxgame") return detail::cmd_boxgame(config, out, err);
        if (c == "ballsbins") return detail::cmd_ballsbins(config, out, err);
        if (c == "arrange") return detail::cmd_arrange(config, out, err);
        if (c == "formulas") return detail::cmd_formulas(config, out, err);
        if (c == "estimate") return detail::cmd_estimate(config, out, err);
        if (c == "sweep") return detail::cmd_sweep(config, out, err);
        err << "error: unknown command '" << c << "'\n";
        return kExitConfig;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

std::string strip_metadata_column(const std::string& csv) {
    std::string out;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.rfind(',');
        out += (pos == std::string::npos ? line : line.substr(0, pos));
        out += '\n';
    }
    return out;
}

int param_int(const nlohmann::json& params, const std::string& key) {
    const auto* v = find(params, key);
    if (!v) bad(key, "required");
    if (v->is_number_integer()) return v->get<int>();
    if (v->is_string()) return static_cast<int>(to_int64(key, v->get<std::string>()));
    bad(key, "expected an integer");
}

int param_int(const nlohmann::json& params, const std::string& key, int fallback) {
    return find(params, key) ? param_int(params, key) : fallback;
}

double param_double(const nlohmann::json& params, const std::string& key) {
    const auto* v = find(params, key);
    if (!v) bad(key, "required");
    if (v->is_number()) return v->get<double>();
    if (v->is_string()) {
        try {
            std::size_t used = 0;
            double d = std::stod(v->get<std::string>(), &used);
            if (used == v->get<std::string>().size()) return d;
        } catch (const std::exception&) {
        }
    }
    bad(key, "expected a number");
}

double param_double(const nlohmann::json& params, const std::string& key, double fallback) {
    return find(params, key) ? param_double(params, key) : fallback;
}

std::string param_string(const nlohmann::json& params, const std::string& key) {
    const auto* v = find(params, key);
    if (!v) bad(key, "required");
    if (v->is_string()) return v->get<std::string>();
    return v->dump();
}

std::string param_string(const nlohmann::json& params, const std::string& key, const std::string& fallback) {
    return find(params, key) ? param_string(params, key) : fallback;
}

bool param_bool(const nlohmann::json& params, const std::string& key, bool fallback) {
    const auto* v = find(params, key);
    if (!v) return fallback;
    if (v->is_boolean()) return v->get<bool>();
    if (v->is_string()) {
        const auto s = v->get<std::string>();
        if (s == "true" || s == "1") return true;
        if (s == "false" || s == "0") return false;
    }
    if (v->is_number_integer()) return v->get<int>() != 0;
    bad(key, "expected true or false");
}

std::vector<std::int64_t> param_int64_list(const nlohmann::json& params, const std::string& key) {
    const auto* v = find(params, key);
    if (!v) bad(key, "required");
    std::vector<std::int64_t> out;
    if (v->is_array()) {
        for (const auto& x : *v) {
            if (!x.is_number_integer()) bad(key, "expected integers");
            out.push_back(x.get<std::int64_t>());
        }
        return out;
    }
    if (v->is_number_integer()) return {v->get<std::int64_t>()};
    if (!v->is_string()) bad(key, "expected a list of integers");
    const auto s = v->get<std::string>();
    if (s.find(':') != std::string::npos) {
        auto parts = split(s, ':');
        if (parts.size() != 3) bad(key, "range must be lo:hi:step");
        const auto lo = to_int64(key, parts[0]), hi = to_int64(key, parts[1]), step = to_int64(key, parts[2]);
        if (step <= 0 || hi < lo) bad(key, "range needs lo <= hi and step > 0");
        for (auto x = lo; x <= hi; x += step) out.push_back(x);
        return out;
    }
    for (const auto& part : split(s, ',')) out.push_back(to_int64(key, part));
    if (out.empty()) bad(key, "empty list");
    return out;
}

std::vector<int> param_int_list(const nlohmann::json& params, const std::string& key) {
    std::vector<int> out;
    for (auto x : param_int64_list(params, key)) out.push_back(static_cast<int>(x));
    return out;
}

std::vector<std::string> param_string_list(const nlohmann::json& params, const std::string& key,
                                           const std::vector<std::string>& fallback) {
    const auto* v = find(params, key);
    if (!v) return fallback;
    std::vector<std::string> out;
    if (v->is_array()) {
        for (const auto& x : *v) {
            if (!x.is_string()) bad(key, "expected strings");
            out.push_back(x.get<std::string>());
        }
    } else if (v->is_string()) {
        out = split(v->get<std::string>(), ',');
    } else {
        bad(key, "expected a list of strings");
    }
    if (out.empty()) bad(key, "empty list");
    return out;
}

nlohmann::json parse_flag_value(const std::string& text) {
    if (text == "true") return true;
    if (text == "false") return false;
    {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec == std::errc() && ptr == text.data() + text.size() && !text.empty()) return v;
    }
    {
        double d = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
        if (ec == std::errc() && ptr == text.data() + text.size() && !text.empty()) return d;
    }
    return text;
}

namespace detail {

std::filesystem::path run_directory(const ExperimentConfig& cfg) {
    auto dir = std::filesystem::path(cfg.out_dir) / cfg.command / config_hash(cfg);
    std::filesystem::create_directories(dir);
    return dir;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace detail

}  // namespace gcn
