// SPDX-License-Identifier: Apache-2.0
//
// urglq: robust adaptive beamforming with covariance matrix reconstruction
// Copyright (C) 2026 urglq contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Simulation and analysis command line:
//   urglq simulate     Monte Carlo scenario runs, trial-level CSV output
//   urglq beampattern  spatial response of one method on a scenario or on
//                      recorded snapshots
//   urglq glq-compare  quadrature-vs-summation sweep over node counts

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include <urglq/urglq.hpp>

namespace
{
    using namespace urglq;

    // Precedence: preset defaults, then the config file, then explicit flags.
    ScenarioConfig resolve_config(const std::string &config_path, const std::string &scenario,
                                  bool seed_set, std::uint64_t seed, int trials, int threads)
    {
        ScenarioConfig cfg = scenario_preset(scenario.empty() ? "table1" : scenario);
        if (!config_path.empty())
            cfg = load_scenario_config(config_path, cfg);
        if (seed_set)
            cfg.seed = seed;
        if (trials > 0)
            cfg.trials = trials;
        if (threads >= 0)
            cfg.threads = threads;
        return cfg;
    }

    bool is_bfsn_file(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        char magic[4] = {};
        in.read(magic, 4);
        return in.gcount() == 4 && std::memcmp(magic, bfsn_magic, 4) == 0;
    }

    std::vector<double> make_grid(double step)
    {
        if (!(step > 0.0))
            throw config_error("beampattern: grid step must be positive");
        std::vector<double> grid;
        for (double theta = -90.0 + step; theta < 90.0 - 1e-12; theta += step)
            grid.push_back(theta);
        return grid;
    }

    int run_simulate(const std::string &config_path, const std::string &scenario, bool seed_set,
                     std::uint64_t seed, int trials, int threads, const std::string &out,
                     const std::string &aggregate_out)
    {
        ScenarioConfig cfg = resolve_config(config_path, scenario, seed_set, seed, trials, threads);
        std::vector<TrialResult> results = run_scenario(cfg);
        write_csv_file(out, [&](std::ostream &s) { export_trials_csv(results, s); });
        if (!aggregate_out.empty())
        {
            std::vector<AggregateRow> agg = aggregate(results);
            write_csv_file(aggregate_out, [&](std::ostream &s) { export_aggregates_csv(agg, s); });
        }
        std::cout << "wrote " << results.size() << " trial rows to " << out << "\n";
        return 0;
    }

    int run_beampattern(const std::string &input, const std::string &method, double grid_step,
                        const std::string &out, bool seed_set, std::uint64_t seed,
                        double spacing, double desired_doa,
                        const std::vector<double> &interference_doas)
    {
        BeamformerWeights weights;
        ArrayGeometry geometry;

        if (is_bfsn_file(input))
        {
            SnapshotMatrix x = load_recorded_snapshots(input);
            geometry = ArrayGeometry(static_cast<int>(x.rows()), spacing);
            PresumedDoas presumed{desired_doa, interference_doas};
            if (method == "optimal")
                throw config_error("beampattern: 'optimal' needs simulated ground truth, "
                                   "use a scenario config as input");
            if (method == "smi")
                weights = smi_weights(x, steering_vector(geometry, desired_doa));
            else if (method == "linear")
                weights = linear_baseline_weights(x, geometry, presumed, 20, 8.0);
            else if (method == "urglq" || method == "urglq_nc")
            {
                PipelineConfig cfg;
                cfg.alpha_policy = AlphaPolicy::fixed(); // recorded-data default
                cfg.correction_enabled = method == "urglq";
                weights = urglq_weights(x, geometry, presumed, cfg);
            }
            else
                throw config_error("beampattern: unknown method '" + method + "'");
        }
        else
        {
            ScenarioConfig cfg = resolve_config(input, "", seed_set, seed, 0, -1);
            cfg.methods = {method};
            cfg.trials = 1;
            cfg.snr_grid_db = {cfg.snr_grid_db.front()};
            cfg.snapshot_grid = {cfg.snapshot_grid.front()};
            geometry = ArrayGeometry(cfg.num_sensors, cfg.spacing);

            // regenerate the first trial of the scenario
            Rng rng = Rng::derive(cfg.seed, 0);
            const double snr = db_to_linear(cfg.snr_grid_db.front());
            const double inr = db_to_linear(cfg.inr_db);
            SteeringVector a_desired = steering_vector(geometry, cfg.desired_doa_deg);
            std::vector<std::pair<SteeringVector, double>> sources = {{a_desired, snr}};
            std::vector<std::pair<SteeringVector, double>> interferers;
            for (double doa : cfg.interference_doas_deg)
            {
                sources.emplace_back(steering_vector(geometry, doa), inr);
                interferers.emplace_back(steering_vector(geometry, doa), inr);
            }
            SnapshotMatrix x =
                generate_snapshots(cfg.num_sensors, sources, 1.0, cfg.snapshot_grid.front(), rng);
            PresumedDoas presumed{cfg.desired_doa_deg, cfg.interference_doas_deg};

            if (method == "optimal")
                weights = mvdr_weights(true_ipncm(interferers, 1.0, cfg.num_sensors), a_desired,
                                       "optimal");
            else if (method == "smi")
                weights = smi_weights(x, a_desired);
            else if (method == "linear")
                weights = linear_baseline_weights(x, geometry, presumed, cfg.riemann_l,
                                                  cfg.half_width_deg);
            else if (method == "urglq" || method == "urglq_nc")
            {
                PipelineConfig pipeline;
                pipeline.alpha_policy = cfg.alpha_policy;
                pipeline.sector_half_width_deg = cfg.half_width_deg;
                pipeline.correction_enabled = cfg.correction && method == "urglq";
                weights = urglq_weights(x, geometry, presumed, pipeline);
            }
            else
                throw config_error("beampattern: unknown method '" + method + "'");
        }

        auto pattern = beampattern(weights, geometry, make_grid(grid_step));
        write_csv_file(out, [&](std::ostream &s) { export_beampattern_csv(pattern, s); });
        std::cout << "wrote " << pattern.size() << " pattern points to " << out << "\n";
        return 0;
    }

    int run_glq_compare(const std::string &config_path, const std::string &scenario, bool seed_set,
                        std::uint64_t seed, int trials, int threads,
                        const std::vector<int> &l_values, const std::string &out)
    {
        ScenarioConfig cfg = resolve_config(config_path, scenario, seed_set, seed, trials, threads);
        std::vector<GlqCompareRow> table = glq_compare(cfg, l_values);
        write_csv_file(out, [&](std::ostream &s) { export_glq_compare_csv(table, s); });
        std::cout << "wrote " << table.size() << " rows to " << out << "\n";
        return 0;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Robust adaptive beamforming simulations: covariance matrix reconstruction "
                 "by desired-signal removal and Gauss-Legendre quadrature"};
    app.require_subcommand(1);

    std::string config_path, scenario, out, aggregate_out, input, method = "urglq";
    std::uint64_t seed = 0;
    int trials = 0, threads = -1;
    double grid_step = 0.1, spacing = 0.5, desired_doa = 0.0;
    std::vector<double> interference_doas;
    std::vector<int> l_values = {2, 5, 10, 20, 50};

    auto *simulate = app.add_subcommand("simulate", "run a Monte Carlo scenario");
    simulate->add_option("--config", config_path, "scenario configuration file");
    simulate->add_option("--scenario", scenario,
                         "preset: table1, doa-mismatch, gain-phase, sv-error, closer-angles");
    auto *seed_opt = simulate->add_option("--seed", seed, "master seed");
    simulate->add_option("--trials", trials, "override the trial count");
    simulate->add_option("--threads", threads, "worker threads (0 = all cores)");
    simulate->add_option("--out", out, "trial-level CSV output")->default_val("results.csv");
    simulate->add_option("--aggregate-out", aggregate_out, "aggregate CSV output");

    auto *pattern = app.add_subcommand("beampattern", "spatial response of one method");
    pattern->add_option("--input", input, "scenario config or recorded .bfsn snapshots")
        ->required();
    pattern->add_option("--method", method, "optimal, smi, linear, urglq, urglq_nc");
    pattern->add_option("--grid-step", grid_step, "angle grid step in degrees")->default_val(0.1);
    pattern->add_option("--out", out, "pattern CSV output")->default_val("pattern.csv");
    auto *pattern_seed = pattern->add_option("--seed", seed, "master seed (scenario input)");
    pattern->add_option("--spacing", spacing, "sensor spacing in wavelengths (.bfsn input)");
    pattern->add_option("--desired-doa", desired_doa, "presumed desired DOA (.bfsn input)");
    pattern->add_option("--interference-doas", interference_doas,
                        "presumed interference DOAs (.bfsn input)")
        ->delimiter(',');

    auto *compare = app.add_subcommand("glq-compare", "quadrature vs summation sweep");
    compare->add_option("--config", config_path, "scenario configuration file");
    compare->add_option("--scenario", scenario, "preset name");
    auto *compare_seed = compare->add_option("--seed", seed, "master seed");
    compare->add_option("--trials", trials, "override the trial count");
    compare->add_option("--threads", threads, "worker threads (0 = all cores)");
    compare->add_option("--l-values", l_values, "summation node counts")->delimiter(',');
    compare->add_option("--out", out, "comparison CSV output")->default_val("glq.csv");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (simulate->parsed())
            return run_simulate(config_path, scenario, !seed_opt->empty(), seed, trials, threads,
                                out, aggregate_out);
        if (pattern->parsed())
            return run_beampattern(input, method, grid_step, out, !pattern_seed->empty(), seed,
                                   spacing, desired_doa, interference_doas);
        if (compare->parsed())
            return run_glq_compare(config_path, scenario, !compare_seed->empty(), seed, trials,
                                   threads, l_values, out);
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
