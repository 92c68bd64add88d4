#include "swiptnet/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace swipt {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

struct KeyValue {
    std::string value;
    int line;
    bool used = false;
};

using Section = std::map<std::string, KeyValue>;

struct RawConfig {
    std::map<std::string, Section> sections;
    std::string source;

    const KeyValue* find(const std::string& sec, const std::string& key) const {
        auto s = sections.find(sec);
        if (s == sections.end())
            return nullptr;
        auto k = s->second.find(key);
        return k == s->second.end() ? nullptr : &k->second;
    }
};

RawConfig tokenize(const std::string& text, const std::string& source) {
    RawConfig raw;
    raw.source = source;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';')
            continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ParseError(source + ":" + std::to_string(lineno) + ": unterminated section header");
            section = trim(t.substr(1, t.size() - 2));
            if (section.empty())
                throw ParseError(source + ":" + std::to_string(lineno) + ": empty section name");
            raw.sections[section];
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError(source + ":" + std::to_string(lineno) + ": expected key = value");
        if (section.empty())
            throw ParseError(source + ":" + std::to_string(lineno) + ": key outside any [section]");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ParseError(source + ":" + std::to_string(lineno) + ": empty key or value");
        if (!raw.sections[section].emplace(key, KeyValue{value, lineno}).second)
            throw ParseError(source + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
    return raw;
}

class Reader {
public:
    Reader(RawConfig& raw) : raw_(raw) {}

    bool has(const std::string& sec, const std::string& key) {
        return raw_.find(sec, key) != nullptr;
    }

    std::optional<std::string> get_str(const std::string& sec, const std::string& key) {
        auto s = raw_.sections.find(sec);
        if (s == raw_.sections.end())
            return std::nullopt;
        auto k = s->second.find(key);
        if (k == s->second.end())
            return std::nullopt;
        k->second.used = true;
        return k->second.value;
    }

    std::optional<double> get_num(const std::string& sec, const std::string& key) {
        auto v = get_str(sec, key);
        if (!v)
            return std::nullopt;
        try {
            std::size_t pos = 0;
            double out = std::stod(*v, &pos);
            if (pos != v->size())
                throw std::invalid_argument("trailing");
            return out;
        } catch (const std::exception&) {
            fail(sec, key, "not a number: '" + *v + "'");
        }
        return std::nullopt; // unreachable
    }

    std::optional<long long> get_int(const std::string& sec, const std::string& key) {
        auto v = get_num(sec, key);
        if (!v)
            return std::nullopt;
        if (*v != std::floor(*v))
            fail(sec, key, "must be an integer");
        return static_cast<long long>(*v);
    }

    std::optional<bool> get_bool(const std::string& sec, const std::string& key) {
        auto v = get_str(sec, key);
        if (!v)
            return std::nullopt;
        if (*v == "true" || *v == "1" || *v == "yes" || *v == "on")
            return true;
        if (*v == "false" || *v == "0" || *v == "no" || *v == "off")
            return false;
        fail(sec, key, "not a boolean: '" + *v + "'");
        return std::nullopt;
    }

    // A quantity with a linear key and a dB-scaled alternative.
    std::optional<double> get_power(const std::string& sec, const std::string& lin_key,
                                    const std::string& db_key) {
        const bool has_lin = has(sec, lin_key);
        const bool has_db = has(sec, db_key);
        if (has_lin && has_db)
            fail(sec, lin_key, "give either " + lin_key + " or " + db_key + ", not both");
        if (has_db)
            return db_to_linear(*get_num(sec, db_key));
        if (has_lin)
            return get_num(sec, lin_key);
        return std::nullopt;
    }

    [[noreturn]] void fail(const std::string& sec, const std::string& key, const std::string& msg) {
        const KeyValue* kv = raw_.find(sec, key);
        std::string where = kv ? raw_.source + ":" + std::to_string(kv->line) : raw_.source;
        throw ParseError(where + ": [" + sec + "] " + key + ": " + msg);
    }

    void reject_unknown() {
        for (const auto& [sec, entries] : raw_.sections)
            for (const auto& [key, kv] : entries)
                if (!kv.used)
                    throw ParseError(raw_.source + ":" + std::to_string(kv.line) + ": unknown key '" +
                                     key + "' in section [" + sec + "]");
    }

private:
    RawConfig& raw_;
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ','))
        if (!trim(cur).empty())
            out.push_back(trim(cur));
    return out;
}

const std::set<std::string> kMetrics = {"p_s", "p_o", "p_e", "p_J", "joint_mpe"};
const std::set<std::string> kVariables = {"P_t", "tau", "p_L", "lambda"};

} // namespace

Config parse_config(const std::string& text, const std::string& source_name) {
    RawConfig raw = tokenize(text, source_name);
    Reader rd(raw);
    Config cfg;

    // --- scenario ---
    std::string preset = rd.get_str("scenario", "preset").value_or("mmwave");
    cfg.scenario = preset_by_name(preset);
    NetworkParams& p = cfg.scenario.params;
    if (auto v = rd.get_num("scenario", "lambda"))
        p.lam = *v;
    if (auto v = rd.get_num("scenario", "p_L"))
        p.p_L = *v;
    if (auto v = rd.get_num("scenario", "alpha"))
        p.alpha = *v;
    if (auto v = rd.get_int("scenario", "mu"))
        p.mu = static_cast<int>(*v);
    if (auto v = rd.get_num("scenario", "d0"))
        p.d0 = *v;
    if (auto v = rd.get_num("scenario", "P_t"))
        p.P_t = *v;
    if (auto v = rd.get_num("scenario", "omega"))
        p.antenna.omega = *v;
    if (auto v = rd.get_power("scenario", "M", "M_dBi"))
        p.antenna.M = *v;
    if (auto v = rd.get_power("scenario", "m", "m_dBi"))
        p.antenna.m = *v;
    if (auto v = rd.get_power("scenario", "N0_W", "N0_dBW"))
        p.N0 = *v;
    if (auto v = rd.get_power("scenario", "N_C_W", "N_C_dBW"))
        p.N_C = *v;
    if (auto v = rd.get_num("scenario", "rho"))
        p.rho = *v;
    if (auto v = rd.get_num("scenario", "a_bar"))
        p.rectenna.a_bar = *v;
    if (auto v = rd.get_num("scenario", "b_bar"))
        p.rectenna.b_bar = *v;
    if (auto v = rd.get_num("scenario", "c_bar"))
        p.rectenna.c_bar = *v;
    p.validate();

    // --- thresholds ---
    cfg.thresholds = cfg.scenario.thresholds;
    if (auto v = rd.get_num("thresholds", "tau"))
        cfg.thresholds.tau = *v;
    if (auto v = rd.get_power("thresholds", "gamma", "gamma_dB"))
        cfg.thresholds.gamma = *v;
    if (auto v = rd.get_power("thresholds", "eps_W", "eps_dBW"))
        cfg.thresholds.eps = *v;
    if (cfg.thresholds.tau < 0.0)
        throw RangeError("[thresholds] tau must be non-negative");
    if (cfg.thresholds.gamma < 0.0)
        throw RangeError("[thresholds] gamma must be non-negative");
    if (cfg.thresholds.eps < 0.0)
        throw RangeError("[thresholds] eps must be non-negative");
    if (cfg.thresholds.eps >= p.rectenna.saturation())
        throw RangeError("[thresholds] eps must stay below the rectenna saturation level a_bar - b_bar/c_bar = " +
                         std::to_string(p.rectenna.saturation()) + " W");
    cfg.scenario.thresholds = cfg.thresholds;

    // --- sweep ---
    cfg.sweep.variable = rd.get_str("sweep", "variable").value_or("P_t");
    if (!kVariables.count(cfg.sweep.variable) && cfg.sweep.variable != "lam")
        throw RangeError("[sweep] variable must be one of P_t, tau, p_L, lambda");
    if (cfg.sweep.variable == "lam")
        cfg.sweep.variable = "lambda";
    cfg.sweep.start = rd.get_num("sweep", "start").value_or(0.5);
    cfg.sweep.stop = rd.get_num("sweep", "stop").value_or(20.0);
    cfg.sweep.steps = static_cast<int>(rd.get_int("sweep", "steps").value_or(10));
    if (cfg.sweep.steps < 2)
        throw RangeError("[sweep] steps must be at least 2");
    if (!(cfg.sweep.start < cfg.sweep.stop))
        throw RangeError("[sweep] start must be less than stop");
    auto metrics = rd.get_str("sweep", "metrics");
    cfg.sweep.metrics = metrics ? split_list(*metrics)
                                : std::vector<std::string>{"p_s", "p_o", "p_e", "p_J"};
    for (const auto& mname : cfg.sweep.metrics)
        if (!kMetrics.count(mname))
            throw RangeError("[sweep] unknown metric '" + mname + "'");

    // --- mc (optional) ---
    if (raw.sections.count("mc")) {
        McSettings mc;
        if (auto v = rd.get_int("mc", "trials"))
            mc.trials = *v;
        if (auto v = rd.get_int("mc", "seed"))
            mc.seed = static_cast<std::uint64_t>(*v);
        if (auto v = rd.get_num("mc", "disk_radius"))
            mc.disk_radius = *v;
        if (auto v = rd.get_bool("mc", "parallel"))
            mc.parallel = *v;
        if (auto v = rd.get_bool("mc", "tail_compensation"))
            mc.tail_compensation = *v;
        mc.validate(p);
        cfg.sweep.mc = mc;
    }

    rd.reject_unknown();
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

} // namespace swipt
