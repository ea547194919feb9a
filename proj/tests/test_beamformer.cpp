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

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace urglq;

namespace
{
    const ArrayGeometry table_geom(10, 0.5);
    const PresumedDoas table_doas{10.0, {-30.0, 40.0}};

    SnapshotMatrix table_snapshots(std::uint64_t trial, int num_snapshots = 30,
                                   double desired_power = 100.0)
    {
        Rng rng = Rng::derive(500, trial);
        std::vector<SourceSpec> sources = {
            {10.0, desired_power, SourceKind::desired},
            {-30.0, 100.0, SourceKind::interference},
            {40.0, 100.0, SourceKind::interference}};
        return generate_snapshots(table_geom, sources, 1.0, num_snapshots, rng);
    }

    HermitianMatrix table_true_ipncm()
    {
        return true_ipncm(table_geom, {{-30.0, 100.0, SourceKind::interference},
                                       {40.0, 100.0, SourceKind::interference}}, 1.0);
    }
}

TEST_CASE("mvdr_weights - identity covariance and distortionless contract")
{
    SteeringVector a = steering_vector(table_geom, 10.0);
    BeamformerWeights w = mvdr_weights(HermitianMatrix::identity(10), a);
    CHECK((w.weights - a / 10.0).norm() < 1e-14);
    CHECK(std::abs(w.weights.dot(a) - cplx(1.0, 0.0)) <= 1e-12);

    Rng rng(70);
    HermitianMatrix r = testsupport::random_positive_definite(rng, 10);
    BeamformerWeights wr = mvdr_weights(r, a);
    CHECK(std::abs(wr.weights.dot(a) - cplx(1.0, 0.0)) <= 1e-10);
}

TEST_CASE("mvdr_weights - nulls at the interference with the exact covariance")
{
    SteeringVector a0 = steering_vector(table_geom, 10.0);
    BeamformerWeights w = mvdr_weights(table_true_ipncm(), a0, "optimal");
    const double at_desired = std::abs(w.weights.dot(steering_vector(table_geom, 10.0)));
    for (double theta : {-30.0, 40.0})
    {
        const double at_interference = std::abs(w.weights.dot(steering_vector(table_geom, theta)));
        CHECK(20.0 * std::log10(at_interference / at_desired) <= -30.0);
    }
}

TEST_CASE("smi_weights - converges to the quiescent weights on noise-only data")
{
    Rng rng(71);
    SnapshotMatrix x = generate_snapshots(10, {}, 1.0, 20000, rng);
    SteeringVector a0 = steering_vector(table_geom, 10.0);
    BeamformerWeights w = smi_weights(x, a0);
    CHECK((w.weights - a0 / 10.0).cwiseAbs().maxCoeff() < 0.05);
    CHECK(std::abs(w.weights.dot(a0) - cplx(1.0, 0.0)) <= 1e-10);
}

TEST_CASE("smi_weights - single snapshot stays finite through loading")
{
    Rng rng(72);
    SnapshotMatrix x = table_snapshots(0, 1);
    SteeringVector a0 = steering_vector(table_geom, 10.0);
    BeamformerWeights w = smi_weights(x, a0);
    CHECK(w.weights.allFinite());
    CHECK(std::abs(w.weights.dot(a0) - cplx(1.0, 0.0)) <= 1e-10);
}

TEST_CASE("urglq pipeline - no interference reaches the closed-form optimum")
{
    Rng rng(73);
    SteeringVector a0 = steering_vector(table_geom, 10.0);
    SnapshotMatrix x = generate_snapshots(10, {{a0, 100.0}}, 1.0, 30, rng);
    PipelineConfig cfg;
    UrglqArtifacts art = run_urglq_pipeline(x, table_geom, {10.0, {}}, cfg);

    HermitianMatrix r_inf = HermitianMatrix::identity(10);
    SourceSpec desired{10.0, 100.0, SourceKind::desired};
    const double sinr = output_sinr_db(art.weights, desired, r_inf, a0);
    CHECK(std::abs(sinr - 30.0) <= 0.5); // SNR + 10 log10 M
    CHECK(art.correction.e_perp.norm() <= 1e-8);
}

TEST_CASE("urglq pipeline - reference scenario tracks the optimal beamformer")
{
    SourceSpec desired{10.0, 100.0, SourceKind::desired};
    HermitianMatrix r_inf = table_true_ipncm();
    SteeringVector a_true = steering_vector(table_geom, 10.0);
    BeamformerWeights w_opt = mvdr_weights(r_inf, a_true, "optimal");
    const double sinr_opt = output_sinr_db(w_opt, desired, r_inf, a_true);

    PipelineConfig cfg;
    double mean_dev = 0.0;
    const int trials = 20;
    for (int t = 0; t < trials; ++t)
    {
        BeamformerWeights w = urglq_weights(table_snapshots(t), table_geom, table_doas, cfg);
        mean_dev += (sinr_opt - output_sinr_db(w, desired, r_inf, a_true)) / trials;
    }
    CHECK(mean_dev <= 2.5);
}

TEST_CASE("urglq pipeline - artifacts and distortionless contract")
{
    PipelineConfig cfg;
    UrglqArtifacts art = run_urglq_pipeline(table_snapshots(3), table_geom, table_doas, cfg);
    CHECK(art.noise_estimate > 0.0);
    CHECK(art.alpha >= 10.0);
    CHECK(std::abs(art.projector.trace() - 9.0) < 1e-9);
    EigenDecomposition d = hermitian_eig(art.reconstructed);
    CHECK(d.eigenvalues.minCoeff() >= -1e-10 * art.reconstructed.trace());
    CHECK(std::abs(art.weights.weights.dot(art.correction.corrected) - cplx(1.0, 0.0)) <= 1e-10);
    CHECK(art.correction.kkt_residual <= 1e-6);
}

TEST_CASE("urglq pipeline - deterministic and stage-tagged on failure")
{
    PipelineConfig cfg;
    SnapshotMatrix x = table_snapshots(4);
    BeamformerWeights w1 = urglq_weights(x, table_geom, table_doas, cfg);
    BeamformerWeights w2 = urglq_weights(x, table_geom, table_doas, cfg);
    CHECK((w1.weights - w2.weights).norm() == 0.0);

    try
    {
        urglq_weights(SnapshotMatrix(10, 0), table_geom, table_doas, cfg);
        FAIL("expected a pipeline error");
    }
    catch (const pipeline_error &e)
    {
        CHECK(e.stage() == std::string("sample-covariance"));
    }

    // invalid presumed direction is tagged with its stage as well
    try
    {
        urglq_weights(x, table_geom, {95.0, {-30.0}}, cfg);
        FAIL("expected a pipeline error");
    }
    catch (const pipeline_error &e)
    {
        CHECK(e.stage() == std::string("steering"));
    }
}

TEST_CASE("urglq pipeline - correction does not hurt under steering errors")
{
    // paired comparison over the steering-error scenario
    ScenarioConfig cfg = scenario_preset("sv-error");
    cfg.trials = 100;
    cfg.methods = {"urglq", "urglq_nc"};
    cfg.threads = 1;
    std::vector<AggregateRow> agg = aggregate(run_scenario(cfg));
    REQUIRE(agg.size() == 2);
    double with = 0.0, without = 0.0;
    for (const auto &row : agg)
        (row.method == "urglq" ? with : without) = row.mean_sinr_db;
    CHECK(with >= without);
}

TEST_CASE("linear_baseline_weights - distortionless, dense summation matches the pipeline")
{
    SteeringVector a0 = steering_vector(table_geom, 10.0);
    SourceSpec desired{10.0, 100.0, SourceKind::desired};
    HermitianMatrix r_inf = table_true_ipncm();

    PipelineConfig cfg;
    double mean_urglq = 0.0, mean_dense = 0.0, mean_l20 = 0.0;
    const int trials = 30;
    for (int t = 0; t < trials; ++t)
    {
        SnapshotMatrix x = table_snapshots(t);
        BeamformerWeights wl = linear_baseline_weights(x, table_geom, table_doas, 20, 8.0);
        CHECK(std::abs(wl.weights.dot(a0) - cplx(1.0, 0.0)) <= 1e-10);
        BeamformerWeights wd = linear_baseline_weights(x, table_geom, table_doas, 2000, 8.0);
        BeamformerWeights wu = urglq_weights(x, table_geom, table_doas, cfg);
        mean_l20 += output_sinr_db(wl, desired, r_inf, a0) / trials;
        mean_dense += output_sinr_db(wd, desired, r_inf, a0) / trials;
        mean_urglq += output_sinr_db(wu, desired, r_inf, a0) / trials;
    }
    CHECK(std::abs(mean_dense - mean_urglq) <= 1.0);
    CHECK(mean_urglq >= mean_l20);
}
