#include "nsdecay/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "nsdecay/errors.hpp"

namespace nsdecay {

namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': expected a number, got '" + v + "'");
    }
}

long long to_integer(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long long x = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': expected an integer, got '" + v + "'");
    }
}

ModelKind to_model(const std::string& key, const std::string& v) {
    try {
        return model_kind_from_string(v);
    } catch (const InvalidArgument& e) {
        throw ConfigError("key '" + key + "': " + e.what());
    }
}

using Setter = std::function<void(const std::string&, const std::string&)>;

void apply(const std::map<std::string, std::string>& kv, const std::map<std::string, Setter>& setters) {
    for (const auto& [k, v] : kv) {
        const auto it = setters.find(k);
        if (it == setters.end()) throw ConfigError("unknown config key '" + k + "'");
        it->second(k, v);
    }
}

// Ratio x / step must be a nonnegative integer up to round-off.
long long whole_multiple(double x, double step, const char* what) {
    const double q = x / step;
    const double r = std::round(q);
    if (std::abs(q - r) > 1e-9 * std::max(1.0, q)) throw ConfigError(std::string(what) + " must be a multiple of run.dt");
    return static_cast<long long>(r);
}

}  // namespace

std::map<std::string, std::string> parse_flat_config(const std::string& text) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ConfigError(std::string("config is not valid YAML: ") + e.what());
    }
    std::map<std::string, std::string> out;
    if (root.IsNull()) return out;
    if (!root.IsMap()) throw ConfigError("config must be a flat map of dotted keys");
    for (const auto& item : root) {
        const std::string key = item.first.as<std::string>();
        if (!item.second.IsScalar()) throw ConfigError("key '" + key + "' must map to a scalar");
        if (!out.emplace(key, item.second.as<std::string>()).second) throw ConfigError("duplicate key '" + key + "'");
    }
    return out;
}

std::map<std::string, std::string> read_flat_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_flat_config(ss.str());
}

void RunConfig::validate() const {
    if (grid_n < 8 || grid_n % 2 != 0) throw ConfigError("grid.n must be even and >= 8");
    if (!(box_length > 0.0 && std::isfinite(box_length))) throw ConfigError("grid.L must be positive");
    try {
        params.validate();
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    }
    if (!(init.cutoff > 0.0)) throw ConfigError("init.cutoff must be positive");
    if (!(init.sigma > -1.5)) throw ConfigError("init.sigma must exceed -3/2");
    if (!(init.amp_a >= 0.0 && init.amp_u >= 0.0 && init.amp_theta >= 0.0))
        throw ConfigError("init amplitudes must be nonnegative");
    if (!(dt > 0.0)) throw ConfigError("run.dt must be positive");
    if (!(t_end >= 0.0)) throw ConfigError("run.t_end must be nonnegative");
    if (!(cadence > 0.0)) throw ConfigError("run.cadence must be positive");
    whole_multiple(t_end, dt, "run.t_end");
    whole_multiple(cadence, dt, "run.cadence");
    const double slope = params.pressure_slope();
    const double d0 = diag.delta0 > 0.0 ? diag.delta0 : 0.1 * std::min(1.0, slope);
    if (!(d0 < 0.5 * std::min(1.0, slope))) throw ConfigError("diag.delta0 must lie in (0, min(1, P'(1)) / 2)");
    if (!(diag.delta > 0.0 && diag.delta < 1.0)) throw ConfigError("diag.delta must lie in (0, 1)");
    if (!(diag.split_R > 0.0)) throw ConfigError("diag.R must be positive");
    if (out_dir.empty()) throw ConfigError("run.out_dir must not be empty");
}

long long RunConfig::total_steps() const { return whole_multiple(t_end, dt, "run.t_end"); }
long long RunConfig::steps_per_sample() const { return whole_multiple(cadence, dt, "run.cadence"); }

std::map<std::string, std::string> RunConfig::resolved() const {
    return {
        {"grid.n", std::to_string(grid_n)},
        {"grid.L", num(box_length)},
        {"model.kind", to_string(params.model)},
        {"model.mu", num(params.mu)},
        {"model.lambda", num(params.lambda_v)},
        {"model.gamma", num(params.gamma)},
        {"init.kind", init.kind == InitKind::spectrum ? "spectrum" : "manufactured"},
        {"init.sigma", num(init.sigma)},
        {"init.cutoff", num(init.cutoff)},
        {"init.amp_a", num(init.amp_a)},
        {"init.amp_u", num(init.amp_u)},
        {"init.amp_theta", num(init.amp_theta)},
        {"seed", std::to_string(seed)},
        {"run.dt", num(dt)},
        {"run.t_end", num(t_end)},
        {"run.cadence", num(cadence)},
        {"run.out_dir", out_dir},
        {"diag.delta0", num(diag.delta0 > 0.0 ? diag.delta0 : 0.1 * std::min(1.0, params.pressure_slope()))},
        {"diag.delta", num(diag.delta)},
        {"diag.R", num(diag.split_R)},
    };
}

void OracleConfig::validate() const {
    try {
        profile.validate();
        params.validate();
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    }
    if (!(t0 > 0.0 && t1 > t0)) throw ConfigError("oracle.t0 / oracle.t1 must satisfy 0 < t0 < t1");
    if (n_times < 2) throw ConfigError("oracle.n_times must be >= 2");
}

RunConfig run_config_from(const std::map<std::string, std::string>& kv) {
    RunConfig c;
    const auto d = [](double& field) { return [&field](const std::string& k, const std::string& v) { field = to_double(k, v); }; };
    apply(kv, {
        {"grid.n", [&c](const std::string& k, const std::string& v) { c.grid_n = static_cast<int>(to_integer(k, v)); }},
        {"grid.L", d(c.box_length)},
        {"model.kind", [&c](const std::string& k, const std::string& v) { c.params.model = to_model(k, v); }},
        {"model.mu", d(c.params.mu)},
        {"model.lambda", d(c.params.lambda_v)},
        {"model.gamma", d(c.params.gamma)},
        {"init.kind",
         [&c](const std::string& k, const std::string& v) {
             if (v == "spectrum") c.init.kind = InitKind::spectrum;
             else if (v == "manufactured") c.init.kind = InitKind::manufactured;
             else throw ConfigError("key '" + k + "': expected spectrum or manufactured");
         }},
        {"init.sigma", d(c.init.sigma)},
        {"init.cutoff", d(c.init.cutoff)},
        {"init.amp_a", d(c.init.amp_a)},
        {"init.amp_u", d(c.init.amp_u)},
        {"init.amp_theta", d(c.init.amp_theta)},
        {"seed",
         [&c](const std::string& k, const std::string& v) {
             const long long s = to_integer(k, v);
             if (s < 0) throw ConfigError("seed must be nonnegative");
             c.seed = static_cast<std::uint64_t>(s);
         }},
        {"run.dt", d(c.dt)},
        {"run.t_end", d(c.t_end)},
        {"run.cadence", d(c.cadence)},
        {"run.out_dir", [&c](const std::string&, const std::string& v) { c.out_dir = v; }},
        {"diag.delta0", d(c.diag.delta0)},
        {"diag.delta", d(c.diag.delta)},
        {"diag.R", d(c.diag.split_R)},
    });
    c.validate();
    return c;
}

OracleConfig oracle_config_from(const std::map<std::string, std::string>& kv) {
    OracleConfig c;
    const auto d = [](double& field) { return [&field](const std::string& k, const std::string& v) { field = to_double(k, v); }; };
    apply(kv, {
        {"model.kind", [&c](const std::string& k, const std::string& v) { c.params.model = to_model(k, v); }},
        {"model.mu", d(c.params.mu)},
        {"model.lambda", d(c.params.lambda_v)},
        {"model.gamma", d(c.params.gamma)},
        {"profile.sigma", d(c.profile.sigma)},
        {"profile.cutoff", d(c.profile.cutoff)},
        {"profile.amplitude", d(c.profile.amplitude)},
        {"profile.w_a", d(c.profile.w_a)},
        {"profile.w_long", d(c.profile.w_long)},
        {"profile.w_trans", d(c.profile.w_trans)},
        {"profile.w_theta", d(c.profile.w_theta)},
        {"oracle.t0", d(c.t0)},
        {"oracle.t1", d(c.t1)},
        {"oracle.n_times", [&c](const std::string& k, const std::string& v) { c.n_times = static_cast<int>(to_integer(k, v)); }},
        {"oracle.out", [&c](const std::string&, const std::string& v) { c.out = v; }},
    });
    c.validate();
    return c;
}

RunConfig load_run_config(const std::string& path) { return run_config_from(read_flat_config(path)); }
OracleConfig load_oracle_config(const std::string& path) { return oracle_config_from(read_flat_config(path)); }

}  // namespace nsdecay
