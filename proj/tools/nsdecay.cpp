// nsdecay: decay-rate laboratory for the compressible Navier-Stokes perturbation systems.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>

#include "CLI11.hpp"
#include "json.hpp"

#include "nsdecay/config.hpp"
#include "nsdecay/errors.hpp"
#include "nsdecay/fitting.hpp"
#include "nsdecay/inequalities.hpp"
#include "nsdecay/parallel.hpp"
#include "nsdecay/run.hpp"
#include "nsdecay/series_io.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace nsdecay;

namespace {

json read_json(const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw SchemaError("cannot open '" + p.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw SchemaError("'" + p.string() + "' is not valid JSON: " + e.what());
    }
}

void emit(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(out, std::ios::trunc);
    if (!f) throw Error("cannot write '" + out + "'");
    f << j.dump(2) << '\n';
}

int cmd_run(const std::string& path) {
    const RunConfig cfg = load_run_config(path);
    const RunOutcome r = run_experiment(cfg);
    std::cerr << "nsdecay run: " << r.records.size() << " records in " << cfg.out_dir;
    if (r.exit_code != kExitOk) std::cerr << " (" << r.detail << ")";
    std::cerr << '\n';
    return r.exit_code;
}

int cmd_oracle(const std::string& path) {
    const OracleConfig cfg = load_oracle_config(path);
    const auto rows = run_oracle(cfg);
    std::cerr << "nsdecay oracle: " << rows.size() << " rows in " << cfg.out << '\n';
    return kExitOk;
}

int cmd_fit(const std::string& csv, const std::string& rates_path, bool one_sided, const std::string& out) {
    const SeriesTable table = read_series(csv);
    const json rates = read_json(rates_path);
    if (!rates.contains("rates") || !rates["rates"].is_array()) throw SchemaError("rates file needs a 'rates' array");
    const auto times = table.column("t");
    double t_box = std::numeric_limits<double>::infinity();
    if (const auto it = table.meta.find("t_box"); it != table.meta.end()) t_box = std::stod(it->second);
    FitWindow window = default_window(times, t_box);
    if (rates.contains("window")) {
        window.t_lo = rates["window"].at(0).get<double>();
        window.t_hi = rates["window"].at(1).get<double>();
    }
    json verdicts = json::array();
    bool all = true;
    for (const auto& r : rates["rates"]) {
        const std::string col = r.at("column").get<std::string>();
        const double expo = r.at("exponent").get<double>();
        const double tol = r.value("tol", 0.05);
        FitResult fit = fit_exponent(times, table.column(col), window);
        flag_box(fit, t_box);
        const Verdict v = compare_rates(fit, expo, tol, one_sided, col);
        const auto onset = stable_onset(times, table.column(col), {times.front(), times.back()});
        all = all && v.pass;
        verdicts.push_back({{"quantity", col},
                            {"exponent", fit.exponent},
                            {"stderr", fit.stderr_},
                            {"intercept", fit.intercept},
                            {"window", {fit.window.t_lo, fit.window.t_hi}},
                            {"n_points", fit.n_points},
                            {"theoretical", expo},
                            {"tol", tol},
                            {"one_sided", one_sided},
                            {"box_warning", fit.box_warning},
                            {"stable_from", onset ? json(*onset) : json(nullptr)},
                            {"pass", v.pass}});
    }
    emit(json{{"series", csv}, {"t_box", std::isfinite(t_box) ? json(t_box) : json(nullptr)}, {"all_pass", all}, {"verdicts", verdicts}},
         out);
    return kExitOk;
}

int cmd_verify(std::uint64_t seed, int samples, const std::string& out) {
    const auto reports = run_inequality_battery(seed, samples);
    json arr = json::array();
    bool all = true;
    for (const auto& r : reports) {
        all = all && r.pass;
        arr.push_back({{"name", r.name},
                       {"samples", r.samples},
                       {"max_ratio", r.max_ratio},
                       {"limit", r.limit > 0.0 ? json(r.limit) : json(nullptr)},
                       {"pass", r.pass}});
    }
    emit(json{{"seed", seed}, {"all_pass", all}, {"reports", arr}}, out);
    return all ? kExitOk : kExitError;
}

int cmd_report(const std::string& dir) {
    const fs::path d(dir);
    if (!fs::exists(d / "manifest.json")) throw SchemaError("'" + dir + "' has no manifest.json");
    json rep;
    rep["schema_version"] = 1;
    rep["manifest"] = read_json(d / "manifest.json");
    if (fs::exists(d / "series.csv")) {
        const SeriesTable t = read_series((d / "series.csv").string());
        json cols = json::object();
        for (const auto& c : t.columns) {
            json vals = json::array();
            for (double v : t.column(c)) vals.push_back(std::isfinite(v) ? json(v) : json(nullptr));
            cols[c] = vals;
        }
        rep["series"] = cols;
    }
    if (fs::exists(d / "verdicts.json")) rep["verdicts"] = read_json(d / "verdicts.json");
    const fs::path out = d / "report.json";
    emit(rep, out.string());
    std::cerr << "nsdecay report: wrote " << out.string() << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    apply_thread_cap();
    CLI::App app{"Decay-rate laboratory for compressible Navier-Stokes perturbation systems"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "integrate an experiment config");
    run->add_option("config", config_path, "config file")->required();

    auto* oracle = app.add_subcommand("oracle", "whole-space linear decay curves for a profile config");
    oracle->add_option("config", config_path, "config file")->required();

    std::string csv, rates, out;
    bool one_sided = false;
    auto* fit = app.add_subcommand("fit", "fit decay exponents and compare with theoretical rates");
    fit->add_option("csv", csv, "series CSV")->required();
    fit->add_option("--rates", rates, "rates JSON")->required();
    fit->add_flag("--one-sided", one_sided, "upper-bound comparison");
    fit->add_option("--out", out, "write verdicts here instead of stdout");

    std::uint64_t seed = 1;
    int samples = 200;
    auto* verify = app.add_subcommand("verify", "run the inequality battery");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--samples", samples, "fields per inequality")->check(CLI::PositiveNumber);
    verify->add_option("--out", out, "write reports here instead of stdout");

    std::string dir;
    auto* report = app.add_subcommand("report", "bundle a run directory into report.json");
    report->add_option("dir", dir, "run directory")->required();

    CLI11_PARSE(app, argc, argv);
    try {
        if (*run) return cmd_run(config_path);
        if (*oracle) return cmd_oracle(config_path);
        if (*fit) return cmd_fit(csv, rates, one_sided, out);
        if (*verify) return cmd_verify(seed, samples, out);
        if (*report) return cmd_report(dir);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return kExitSchema;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
