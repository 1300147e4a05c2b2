#include "nsdecay/run.hpp"

#include <filesystem>
#include <fstream>

#include "json.hpp"

#include "nsdecay/fitting.hpp"
#include "nsdecay/initial_data.hpp"
#include "nsdecay/integrator.hpp"
#include "nsdecay/series_io.hpp"

namespace nsdecay {

namespace {

using ordered_json = nlohmann::ordered_json;

class EventLog {
public:
    explicit EventLog(const std::string& path) {
        if (!path.empty()) out_.open(path, std::ios::trunc);
    }
    void add(double t, const std::string& what) {
        if (!out_.is_open()) return;
        out_ << "t=" << format_number(t) << ' ' << what << '\n';
        out_.flush();
    }

private:
    std::ofstream out_;
};

ordered_json manifest_json(const RunConfig& c, const RunOutcome& r, double t_box) {
    ordered_json m;
    m["schema_version"] = kSchemaVersion;
    m["nsdecay_version"] = NSDECAY_VERSION;
    ordered_json cfg = ordered_json::object();
    for (const auto& [k, v] : c.resolved()) cfg[k] = v;
    m["config"] = cfg;
    m["seed"] = c.seed;
    m["grid"] = {{"n", c.grid_n}, {"L", c.box_length}, {"dx", c.box_length / c.grid_n}};
    m["params"] = {{"model", to_string(c.params.model)},
                   {"mu", c.params.mu},
                   {"lambda", c.params.lambda_v},
                   {"gamma", c.params.gamma},
                   {"decay_regime", c.params.in_decay_regime()}};
    m["t_box"] = t_box;
    m["negative_indices"] = std::vector<double>(kNegativeIndices.begin(), kNegativeIndices.end());
    m["x_functionals"] = "canonical representatives: ||u||_H1^2 + ||a||_H1^2 + ||u_dot||^2 (+ ||theta||_H1^2 for X2)";
    m["status"] = r.abort_cause ? "aborted" : (r.exit_code == kExitOk ? "completed" : "failed");
    m["exit_code"] = r.exit_code;
    if (r.abort_cause) {
        m["abort"] = {{"cause", to_string(*r.abort_cause)}, {"t", r.abort_time}, {"detail", r.detail}};
    } else if (!r.detail.empty()) {
        m["abort"] = {{"cause", "initial_data"}, {"t", 0.0}, {"detail", r.detail}};
    } else {
        m["abort"] = nullptr;
    }
    m["records"] = r.records.size();
    m["propagator_fallback_shells"] = r.fallback_shells;
    return m;
}

}  // namespace

std::string to_string(RunAborted::Cause cause) {
    switch (cause) {
        case RunAborted::Cause::density: return "density";
        case RunAborted::Cause::temperature: return "temperature";
        case RunAborted::Cause::cfl: return "cfl";
    }
    return "unknown";
}

RunOutcome run_experiment(const RunConfig& config, bool write_files) {
    config.validate();
    namespace fs = std::filesystem;
    const fs::path dir(config.out_dir);
    if (write_files) fs::create_directories(dir);

    const double t_box = box_horizon(config.box_length, config.params.mu);
    const GridPtr grid = make_grid(config.grid_n, config.box_length);
    RunOutcome outcome;
    EventLog events(write_files ? (dir / "events.log").string() : std::string());

    const auto write_manifest = [&] {
        if (!write_files) return;
        std::ofstream m(dir / "manifest.json", std::ios::trunc);
        m << manifest_json(config, outcome, t_box).dump(2) << '\n';
    };

    State state;
    try {
        state = synthesize_initial_data(config.init, grid, config.params.model, config.seed);
    } catch (const PositivityUnachievable& e) {
        outcome.exit_code = kExitPositivity;
        outcome.detail = e.what();
        events.add(0.0, std::string("initial data rejected: ") + e.what());
        write_manifest();
        return outcome;
    }

    const PropagatorCache cache(grid, config.params, config.dt);
    outcome.fallback_shells = cache.fallback_count();
    std::optional<SeriesWriter> csv;
    if (write_files)
        csv.emplace((dir / "series.csv").string(), diag_schema(),
                    std::map<std::string, std::string>{{"t_box", format_number(t_box)}, {"model", to_string(config.params.model)}});

    const auto sample = [&](const State& s) {
        DiagRecord rec = snapshot(s, config.params, config.diag);
        if (csv) csv->write(rec);
        outcome.records.push_back(std::move(rec));
    };

    events.add(0.0, "start");
    const long long total = config.total_steps();
    const long long every = config.steps_per_sample();
    try {
        sample(state);
        for (long long i = 1; i <= total; ++i) {
            state = step(state, cache);
            state.t = static_cast<double>(i) * config.dt;
            if (i % every == 0 || i == total) sample(state);
        }
        events.add(state.t, "completed");
    } catch (const RunAborted& e) {
        outcome.abort_cause = e.cause();
        outcome.abort_time = e.time();
        outcome.detail = e.what();
        outcome.exit_code = e.cause() == RunAborted::Cause::cfl ? kExitCfl : kExitPositivity;
        events.add(e.time(), std::string("aborted: ") + e.what());
    } catch (const DensityNonpositive& e) {
        outcome.abort_cause = RunAborted::Cause::density;
        outcome.abort_time = state.t;
        outcome.detail = e.what();
        outcome.exit_code = kExitPositivity;
        events.add(state.t, std::string("aborted: ") + e.what());
    } catch (const TemperatureNonpositive& e) {
        outcome.abort_cause = RunAborted::Cause::temperature;
        outcome.abort_time = state.t;
        outcome.detail = e.what();
        outcome.exit_code = kExitPositivity;
        events.add(state.t, std::string("aborted: ") + e.what());
    }
    write_manifest();
    return outcome;
}

std::vector<std::vector<double>> run_oracle(const OracleConfig& config, bool write_file) {
    config.validate();
    const auto times = log_times(config.t0, config.t1, config.n_times);
    auto rows = oracle_table(config.profile, config.params, times);
    if (write_file) {
        const std::filesystem::path out(config.out);
        if (out.has_parent_path()) std::filesystem::create_directories(out.parent_path());
        write_series(config.out, oracle_columns(), rows,
                     {{"source", "oracle"},
                      {"model", to_string(config.params.model)},
                      {"profile.sigma", format_number(config.profile.sigma)},
                      {"profile.cutoff", format_number(config.profile.cutoff)}});
    }
    return rows;
}

}  // namespace nsdecay
