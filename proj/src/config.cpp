#include "bohm/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "bohm/errors.hpp"

namespace bohm::config {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text) {
    const std::string s(trim(text));
    if (s.empty()) throw ConfigError("expected a number");
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE || std::isnan(v)) {
        throw ConfigError("'" + s + "' is not a number");
    }
    return v;
}

std::int64_t parse_int(std::string_view text) {
    const std::string s(trim(text));
    char* end = nullptr;
    errno = 0;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
        throw ConfigError("'" + s + "' is not an integer");
    }
    return v;
}

bool parse_bool(std::string_view text) {
    const auto s = trim(text);
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw ConfigError("'" + std::string(s) + "' is not a boolean");
}

std::vector<double> parse_list(std::string_view text) {
    std::vector<double> out;
    const auto s = trim(text);
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto comma = s.find(',', pos);
        const auto item = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        out.push_back(parse_double(item));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string format_list(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += format_double(v[i]);
    }
    return s;
}

std::string require_one_of(std::string_view text, std::initializer_list<std::string_view> allowed) {
    const auto s = trim(text);
    for (auto a : allowed) {
        if (s == a) return std::string(s);
    }
    std::string msg = "'" + std::string(s) + "' must be one of:";
    for (auto a : allowed) msg += " " + std::string(a);
    throw ConfigError(msg);
}

struct Key {
    std::string name;
    std::function<void(RunConfig&, std::string_view)> set;
    std::function<std::string(const RunConfig&)> get;
};

template <class T>
Key real_key(std::string name, T RunConfig::*field) {
    return {std::move(name), [field](RunConfig& c, std::string_view v) { c.*field = parse_double(v); },
            [field](const RunConfig& c) { return format_double(c.*field); }};
}

const std::vector<Key>& key_table() {
    static const std::vector<Key> keys = {
        {"model",
         [](RunConfig& c, std::string_view v) {
             c.model = require_one_of(
                 v, {"harmonic", "isospectral", "square_well", "harmonic_limit", "square_well_limit"});
         },
         [](const RunConfig& c) { return c.model; }},
        real_key("a0", &RunConfig::a0),
        real_key("a1", &RunConfig::a1),
        real_key("lambda", &RunConfig::lambda),
        real_key("mu", &RunConfig::mu),
        real_key("r0", &RunConfig::r0),
        real_key("r1", &RunConfig::r1),
        real_key("x0", &RunConfig::x0),
        real_key("y0", &RunConfig::y0),
        real_key("t_end", &RunConfig::t_end),
        real_key("dt", &RunConfig::dt),
        real_key("max_speed", &RunConfig::max_speed),
        {"stride", [](RunConfig& c, std::string_view v) { c.stride = parse_int(v); },
         [](const RunConfig& c) { return std::to_string(c.stride); }},
        {"strobe_align", [](RunConfig& c, std::string_view v) { c.strobe_align = parse_bool(v); },
         [](const RunConfig& c) { return std::string(c.strobe_align ? "true" : "false"); }},
        real_key("d0", &RunConfig::d0),
        real_key("renorm_interval", &RunConfig::renorm_interval),
        {"out", [](RunConfig& c, std::string_view v) { c.out = std::string(trim(v)); },
         [](const RunConfig& c) { return c.out; }},
        {"svg", [](RunConfig& c, std::string_view v) { c.svg = parse_bool(v); },
         [](const RunConfig& c) { return std::string(c.svg ? "true" : "false"); }},
        {"jobs", [](RunConfig& c, std::string_view v) { c.jobs = static_cast<int>(parse_int(v)); },
         [](const RunConfig& c) { return std::to_string(c.jobs); }},
        {"seed", [](RunConfig& c, std::string_view v) { c.seed = static_cast<std::uint64_t>(parse_int(v)); },
         [](const RunConfig& c) { return std::to_string(c.seed); }},
        {"ensemble", [](RunConfig& c, std::string_view v) { c.ensemble = static_cast<int>(parse_int(v)); },
         [](const RunConfig& c) { return std::to_string(c.ensemble); }},
        real_key("ensemble_spread", &RunConfig::ensemble_spread),
        {"sweep_param",
         [](RunConfig& c, std::string_view v) { c.sweep_param = require_one_of(v, {"A", "a", "lambda", "mu"}); },
         [](const RunConfig& c) { return c.sweep_param; }},
        {"sweep_values", [](RunConfig& c, std::string_view v) { c.sweep_values = parse_list(v); },
         [](const RunConfig& c) { return format_list(c.sweep_values); }},
        {"sweep_mode",
         [](RunConfig& c, std::string_view v) { c.sweep_mode = require_one_of(v, {"strobe", "lyapunov"}); },
         [](const RunConfig& c) { return c.sweep_mode; }},
        real_key("ratio0", &RunConfig::ratio0),
        real_key("ratio1", &RunConfig::ratio1),
    };
    return keys;
}

const Key* find_key(std::string_view name) {
    for (const auto& k : key_table()) {
        if (k.name == name) return &k;
    }
    return nullptr;
}

void assign(RunConfig& cfg, std::string_view line, const std::string& where) {
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where + ": expected 'key = value'");
    const auto name = trim(line.substr(0, eq));
    const Key* key = find_key(name);
    if (!key) throw ConfigError(where + ": unknown key '" + std::string(name) + "'");
    try {
        key->set(cfg, line.substr(eq + 1));
    } catch (const ConfigError& e) {
        throw ConfigError(where + ": " + std::string(name) + ": " + e.what());
    }
}

}  // namespace

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void apply_text(RunConfig& cfg, std::string_view text, std::string_view origin) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        assign(cfg, line, std::string(origin) + ":" + std::to_string(line_no));
    }
}

void apply_assignment(RunConfig& cfg, std::string_view assignment, std::string_view origin) {
    assign(cfg, trim(assignment), std::string(origin));
}

RunConfig load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    RunConfig cfg;
    apply_text(cfg, buf.str(), path);
    return cfg;
}

std::string emit(const RunConfig& cfg) {
    std::string out;
    for (const auto& k : key_table()) out += k.name + " = " + k.get(cfg) + "\n";
    return out;
}

const std::vector<std::string>& known_keys() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& k : key_table()) n.push_back(k.name);
        return n;
    }();
    return names;
}

fields::FieldModel build_model(const RunConfig& cfg) {
    using fields::FieldModel;
    if (cfg.model == "harmonic") return FieldModel::harmonic({cfg.a0, cfg.a1});
    if (cfg.model == "isospectral") {
        return FieldModel::isospectral(
            {cfg.a0, cfg.a1, susy::DeformationParam(cfg.lambda), susy::DeformationParam(cfg.mu)});
    }
    if (cfg.model == "square_well") return FieldModel::square_well({cfg.a0, cfg.a1});
    if (cfg.model == "harmonic_limit") return FieldModel::harmonic_limit({cfg.r0, cfg.r1});
    if (cfg.model == "square_well_limit") return FieldModel::square_well_limit({cfg.r0, cfg.r1});
    throw ConfigError("unknown model '" + cfg.model + "'");
}

dynamics::IntegratorConfig build_integrator(const RunConfig& cfg) {
    dynamics::IntegratorConfig ic;
    ic.dt_requested = cfg.dt;
    ic.t_end = cfg.t_end;
    ic.strobe_align = cfg.strobe_align;
    ic.max_speed = cfg.max_speed;
    ic.stride = cfg.stride;
    ic.validate();
    return ic;
}

std::vector<fields::Point2> initial_points(const RunConfig& cfg, const fields::FieldModel& model) {
    if (cfg.ensemble < 1) throw ConfigError("ensemble must be >= 1");
    if (!(cfg.ensemble_spread >= 0.0)) throw ConfigError("ensemble_spread must be >= 0");
    const fields::Point2 seed_point{cfg.x0, cfg.y0};
    if (!model.in_domain(seed_point)) throw ConfigError("initial point outside the model domain");
    std::vector<fields::Point2> pts{seed_point};
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> jitter(0.0, cfg.ensemble_spread);
    while (static_cast<int>(pts.size()) < cfg.ensemble) {
        const fields::Point2 p{cfg.x0 + jitter(rng), cfg.y0 + jitter(rng)};
        if (model.in_domain(p)) pts.push_back(p);
    }
    return pts;
}

}  // namespace bohm::config
