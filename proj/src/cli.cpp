#include "ivr/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "ivr/analytic.hpp"
#include "ivr/csv.hpp"
#include "ivr/dgp.hpp"
#include "ivr/errors.hpp"
#include "ivr/estimate.hpp"
#include "ivr/grids.hpp"
#include "ivr/interp.hpp"

namespace ivr::cli {

namespace {

using Json = nlohmann::ordered_json;

struct SpecFlags {
    std::string model;
    double alpha = 0.0;
    double theta = 0.0;
    double mu = 0.0;
    double sigma2 = 1.0;

    [[nodiscard]] DgpSpec spec() const { return {parse_model(model), alpha, theta, mu, sigma2}; }
};

void add_spec_options(CLI::App* sub, SpecFlags& f) {
    sub->add_option("--model", f.model, "ar1 | ma1 | arma11 | rw | rw-arma11")->required();
    sub->add_option("--alpha", f.alpha, "autoregressive coefficient");
    sub->add_option("--theta", f.theta, "moving-average coefficient");
    sub->add_option("--mu", f.mu, "drift per period (random-walk models)");
    sub->add_option("--sigma2", f.sigma2, "innovation variance");
}

void spec_json(Json& j, const DgpSpec& spec) {
    j["model"] = to_string(spec.model);
    j["alpha"] = spec.alpha;
    j["theta"] = spec.theta;
    j["mu"] = spec.mu;
    j["sigma2"] = spec.sigma2;
}

void write_to(const std::string& path, std::ostream& fallback,
              const std::function<void(std::ostream&)>& emit) {
    if (path.empty() || path == "-") {
        emit(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    emit(file);
    file.flush();
    if (!file) throw IoError("failed writing '" + path + "'");
}

SegmentedSeries read_series_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "'");
    try {
        return csv::read_series(file);
    } catch (const InvalidParameter& e) {
        throw IoError("'" + path + "': " + e.what());
    }
}

void print_report(std::ostream& out, const Json& j, const std::string& format) {
    if (format == "json") {
        out << j.dump(2) << '\n';
        return;
    }
    std::string header;
    std::string row;
    for (const auto& [key, value] : j.items()) {
        if (!header.empty()) {
            header += ',';
            row += ',';
        }
        header += key;
        row += value.is_string() ? value.get<std::string>()
                                 : value.is_number_float() ? csv::format_double(value.get<double>())
                                                           : value.dump();
    }
    out << header << '\n' << row << '\n';
}

std::string trim(std::string v) {
    const auto first = v.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = v.find_last_not_of(" \t\r");
    v = v.substr(first, last - first + 1);
    if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front()) {
        v = v.substr(1, v.size() - 2);
    }
    return v;
}

// Reads "key = value" lines ('#' starts a comment) and appends every key the
// selected subcommand understands, unless the same flag is already present.
std::vector<std::string> merge_config(std::vector<std::string> args,
                                      const std::map<std::string, CLI::App*>& commands) {
    std::string path;
    for (auto it = args.begin(); it != args.end();) {
        if (*it == "--config" && std::next(it) != args.end()) {
            path = *std::next(it);
            it = args.erase(it, it + 2);
        } else if (it->rfind("--config=", 0) == 0) {
            path = it->substr(9);
            it = args.erase(it);
        } else {
            ++it;
        }
    }
    if (path.empty()) return args;

    CLI::App* sub = nullptr;
    for (const auto& a : args) {
        if (auto found = commands.find(a); found != commands.end()) {
            sub = found->second;
            break;
        }
    }

    std::ifstream file(path);
    if (!file) throw IoError("cannot open config file '" + path + "'");
    std::string line;
    int line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto sep = line.find('=');
        if (sep == std::string::npos) sep = line.find_first_of(" \t");
        if (sep == std::string::npos) {
            throw InvalidParameter("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        std::string key = trim(line.substr(0, sep));
        const std::string value = trim(line.substr(sep + 1));
        if (key.rfind("--", 0) == 0) key.erase(0, 2);
        const std::string flag = "--" + key;

        const bool known = std::any_of(commands.begin(), commands.end(), [&](const auto& c) {
            return c.second->get_option_no_throw(flag) != nullptr;
        });
        if (!known) throw InvalidParameter("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        if (sub == nullptr) continue;
        const CLI::Option* opt = sub->get_option_no_throw(flag);
        if (opt == nullptr) continue;
        const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (given) continue;
        if (opt->get_expected_min() == 0) {
            if (value == "true" || value == "1" || value == "yes" || value == "on") args.push_back(flag);
        } else {
            args.push_back(flag);
            args.push_back(value);
        }
    }
    return args;
}

}  // namespace

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Variance ratios of original and linearly interpolated time series", "interpvr"};
    app.require_subcommand(1);
    std::string config_path;  // consumed by merge_config; declared here for --help
    app.add_option("--config", config_path, "key = value file that pre-sets flags of the chosen command");

    // analytic
    SpecFlags an;
    int an_s = 0;
    std::string an_variant = "original";
    int an_phase = 0;
    std::string an_format = "json";
    auto* analytic = app.add_subcommand("analytic", "closed-form short/long variance and variance ratio");
    add_spec_options(analytic, an);
    analytic->add_option("--s", an_s, "segment length (k = s)")->required();
    analytic->add_option("--variant", an_variant, "original | interpolated");
    analytic->add_option("--phase", an_phase, "also report the phase-i long variance (interpolated)");
    analytic->add_option("--format", an_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    // simulate
    SpecFlags sim;
    int sim_s = 0;
    std::int64_t sim_segments = 0;
    std::uint64_t sim_seed = 1;
    int sim_burn = -1;
    std::string sim_out;
    auto* simulate_cmd = app.add_subcommand("simulate", "simulate a segmented series (CSV t,i,value)");
    add_spec_options(simulate_cmd, sim);
    simulate_cmd->add_option("--s", sim_s, "segment length")->required();
    simulate_cmd->add_option("--segments", sim_segments, "number of segments")->required();
    simulate_cmd->add_option("--seed", sim_seed, "random seed");
    simulate_cmd->add_option("--burn-in", sim_burn, "discarded warm-up draws (default: automatic)");
    simulate_cmd->add_option("--out", sim_out, "output file (default: stdout)");

    // interpolate
    std::string ip_in;
    std::string ip_out;
    int ip_s = 0;
    bool ip_bench = false;
    auto* interpolate_cmd =
        app.add_subcommand("interpolate", "keep the phase-s benchmarks and rebuild the rest linearly");
    interpolate_cmd->add_option("--in", ip_in, "input series CSV")->required();
    interpolate_cmd->add_option("--s", ip_s, "segment length (default: the input's)");
    interpolate_cmd->add_flag("--benchmarks", ip_bench, "every input value is a benchmark");
    interpolate_cmd->add_option("--out", ip_out, "output file (default: stdout)");

    // estimate
    std::string es_in;
    int es_k = 0;
    bool es_no_demean = false;
    bool es_phase = false;
    auto* estimate_cmd = app.add_subcommand("estimate", "sample variances and variance ratio of a series CSV");
    estimate_cmd->add_option("--in", es_in, "input series CSV")->required();
    estimate_cmd->add_option("--k", es_k, "difference lag (default: the segment length)");
    estimate_cmd->add_flag("--no-demean", es_no_demean, "do not subtract the mean difference");
    estimate_cmd->add_flag("--phase-report", es_phase, "add per-phase k-difference variances");

    // mc
    SpecFlags mc;
    int mc_s = 0;
    std::string mc_variant = "original";
    int mc_reps = 100;
    std::int64_t mc_segments = 10000;
    std::uint64_t mc_seed = 1;
    int mc_threads = 0;
    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo check of the analytic variance ratio");
    add_spec_options(mc_cmd, mc);
    mc_cmd->add_option("--s", mc_s, "segment length (k = s)")->required();
    mc_cmd->add_option("--variant", mc_variant, "original | interpolated");
    mc_cmd->add_option("--reps", mc_reps, "replications");
    mc_cmd->add_option("--segments", mc_segments, "segments per replication");
    mc_cmd->add_option("--seed", mc_seed, "master seed");
    mc_cmd->add_option("--threads", mc_threads, "worker threads (0: all cores)");

    // table
    std::string tb_family;
    int tb_s = 0;
    std::string tb_out_vy;
    std::string tb_out_vx;
    int tb_decimals = -1;
    auto* table_cmd = app.add_subcommand("table", "variance-ratio tables on the standard 11 x 11 axis");
    table_cmd->add_option("--family", tb_family, "stationary | nonstationary")->required();
    table_cmd->add_option("--s", tb_s, "4 or 10")->required();
    table_cmd->add_option("--out-vy", tb_out_vy, "original-series grid CSV");
    table_cmd->add_option("--out-vx", tb_out_vx, "interpolated-series grid CSV");
    table_cmd->add_option("--decimals", tb_decimals, "round values (default: full precision)");

    // surface
    std::string sf_family;
    std::string sf_variant = "original";
    int sf_s = 0;
    int sf_n = 99;
    double sf_margin = 0.01;
    std::string sf_out;
    auto* surface_cmd = app.add_subcommand("surface", "variance ratio on a uniform (alpha, theta) grid");
    surface_cmd->add_option("--family", sf_family, "stationary | nonstationary")->required();
    surface_cmd->add_option("--variant", sf_variant, "original | interpolated");
    surface_cmd->add_option("--s", sf_s, "segment length")->required();
    surface_cmd->add_option("--grid-n", sf_n, "points per axis");
    surface_cmd->add_option("--margin", sf_margin, "distance kept from the unit boundary");
    surface_cmd->add_option("--out", sf_out, "output file (default: stdout)");

    const std::map<std::string, CLI::App*> commands{
        {"analytic", analytic}, {"simulate", simulate_cmd}, {"interpolate", interpolate_cmd},
        {"estimate", estimate_cmd}, {"mc", mc_cmd}, {"table", table_cmd}, {"surface", surface_cmd}};

    try {
        auto args = merge_config(args_in, commands);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (analytic->parsed()) {
            const auto spec = an.spec();
            const auto variant = parse_variant(an_variant);
            const auto summary = variance_ratio(spec, variant, an_s);
            Json j;
            j["source"] = "analytic";
            spec_json(j, spec);
            j["variant"] = to_string(variant);
            j["s"] = summary.s;
            j["k"] = summary.k;
            j["short_var"] = summary.short_var;
            j["long_var"] = summary.long_var;
            j["vr"] = summary.vr;
            if (analytic->count("--phase") > 0) {
                if (variant != Variant::Interpolated) {
                    throw InvalidParameter("--phase applies to the interpolated variant only");
                }
                j["phase"] = an_phase;
                j["long_var_phase"] = long_var_phase(spec, an_s, an_phase);
            }
            print_report(out, j, an_format);
        } else if (simulate_cmd->parsed()) {
            const auto series = ivr::simulate(sim.spec(), sim_s, sim_segments, sim_seed, sim_burn);
            write_to(sim_out, out, [&](std::ostream& os) { csv::write_series(os, series); });
        } else if (interpolate_cmd->parsed()) {
            const auto input = read_series_file(ip_in);
            std::vector<double> bench;
            int s = ip_s;
            std::int64_t first = 1;
            if (ip_bench) {
                bench.assign(input.values().begin(), input.values().end());
                if (s == 0) throw InvalidParameter("--s is required with --benchmarks");
            } else {
                if (s == 0) s = input.s();
                if (input.s() == s) {
                    bench = benchmarks(input);
                    first = input.origin_segment();
                } else if (input.s() == 1 && s >= 1 && input.size() % static_cast<std::size_t>(s) == 0) {
                    bench = benchmarks(SegmentedSeries({input.values().begin(), input.values().end()}, s));
                } else {
                    throw InvalidParameter("input segment length " + std::to_string(input.s()) +
                                           " does not match --s " + std::to_string(s));
                }
            }
            const auto result = ivr::interpolate(bench, s, first);
            write_to(ip_out, out, [&](std::ostream& os) { csv::write_series(os, result); });
        } else if (estimate_cmd->parsed()) {
            const auto series = read_series_file(es_in);
            const int k = es_k > 0 ? es_k : series.s();
            const bool demean = !es_no_demean;
            Json j;
            j["source"] = "empirical";
            j["n"] = series.size();
            j["s"] = series.s();
            j["k"] = k;
            j["demean"] = demean;
            j["short_var"] = diff_var(series, 1, demean);
            j["long_var"] = diff_var(series, k, demean);
            j["vr"] = vr_hat(series, k, demean);
            if (es_phase) j["phase_vars"] = phase_vars(series, k);
            out << j.dump(2) << '\n';
        } else if (mc_cmd->parsed()) {
            const auto spec = mc.spec();
            const auto variant = parse_variant(mc_variant);
            const auto r = mc_compare(spec, mc_s, variant, mc_reps, mc_segments, mc_seed,
                                      McOptions{mc_threads, -1});
            Json j;
            j["source"] = "monte-carlo";
            spec_json(j, spec);
            j["variant"] = to_string(variant);
            j["s"] = r.s;
            j["k"] = r.s;
            j["n_reps"] = r.n_reps;
            j["n_segments"] = r.n_segments;
            j["seed"] = mc_seed;
            j["vr_mean"] = r.vr_mean;
            j["vr_stderr"] = r.vr_stderr;
            j["vr_analytic"] = r.vr_analytic;
            j["z_score"] = r.z_score;
            out << j.dump(2) << '\n';
        } else if (table_cmd->parsed()) {
            const auto [vy, vx] = ivr::table(parse_family(tb_family), tb_s);
            if (tb_out_vy.empty() && tb_out_vx.empty()) {
                csv::write_grid(out, vy, tb_decimals);
                out << '\n';
                csv::write_grid(out, vx, tb_decimals);
            } else {
                if (!tb_out_vy.empty()) {
                    write_to(tb_out_vy, out, [&](std::ostream& os) { csv::write_grid(os, vy, tb_decimals); });
                }
                if (!tb_out_vx.empty()) {
                    write_to(tb_out_vx, out, [&](std::ostream& os) { csv::write_grid(os, vx, tb_decimals); });
                }
            }
        } else if (surface_cmd->parsed()) {
            const auto grid =
                ivr::surface(parse_family(sf_family), parse_variant(sf_variant), sf_s, sf_n, sf_margin);
            write_to(sf_out, out, [&](std::ostream& os) { csv::write_grid(os, grid); });
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const InsufficientData& e) {
        err << "error: " << e.what() << '\n';
        return kDegenerate;
    } catch (const DegenerateSeries& e) {
        err << "error: " << e.what() << '\n';
        return kDegenerate;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}

}  // namespace ivr::cli
