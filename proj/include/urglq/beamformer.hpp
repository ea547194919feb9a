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

#ifndef URGLQ_BEAMFORMER_HPP
#define URGLQ_BEAMFORMER_HPP

#include <string>
#include <vector>

#include "urglq/reconstruction.hpp"
#include "urglq/signal_removal.hpp"
#include "urglq/steering_correction.hpp"

namespace urglq
{
    // Weight vector with the distortionless contract w^H a = 1 against the
    // steering vector used in synthesis.
    struct BeamformerWeights
    {
        CVector weights;
        std::string label;
    };

    struct PresumedDoas
    {
        double desired_deg = 0.0;
        std::vector<double> interference_deg;
    };

    // How the covariance-like construction parameter alpha is chosen:
    // scaled by the trace of the sample covariance (simulation default), or a
    // fixed value (recorded-data default, 1e4).
    struct AlphaPolicy
    {
        enum class Kind
        {
            trace_scaled,
            fixed
        };
        Kind kind = Kind::trace_scaled;
        double scale = 100.0;  // alpha = scale * trace(R)
        double value = 1e4;    // alpha = value

        static AlphaPolicy trace_scaled(double scale = 100.0)
        {
            AlphaPolicy p;
            p.kind = Kind::trace_scaled;
            p.scale = scale;
            return p;
        }
        static AlphaPolicy fixed(double value = 1e4)
        {
            AlphaPolicy p;
            p.kind = Kind::fixed;
            p.value = value;
            return p;
        }
    };

    struct PipelineConfig
    {
        AlphaPolicy alpha_policy;
        double sector_half_width_deg = 8.0;
        ReconstructionMethod reconstruction = ReconstructionMethod::glq3();
        bool correction_enabled = true;
        // Track the interference peaks seen in the data when placing the
        // quadrature ranges, as a stand-in for per-run DOA estimates.
        bool recenter_sectors = true;
    };

    namespace detail
    {
        inline double diagonal_loading(const HermitianMatrix &r)
        {
            return 1e-12 * r.trace() / static_cast<double>(r.dim());
        }

        // MVDR weights with diagonal loading applied only if the plain
        // factorization fails.
        inline CVector mvdr_vector(const HermitianMatrix &r, const SteeringVector &a)
        {
            CVector x;
            try
            {
                x = hermitian_solve(r, a);
            }
            catch (const conditioning_error &)
            {
                CMatrix loaded = r.mat() + diagonal_loading(r) * CMatrix::Identity(r.dim(), r.dim());
                x = hermitian_solve(HermitianMatrix(loaded), a);
            }
            const double denom = a.dot(x).real();
            if (!(denom > 0.0))
                throw conditioning_error("mvdr weights: a^H R^{-1} a is not positive");
            return x / denom;
        }

        template <typename F>
        auto pipeline_stage(const char *stage, F &&f)
        {
            try
            {
                return f();
            }
            catch (const pipeline_error &)
            {
                throw;
            }
            catch (const std::exception &e)
            {
                throw pipeline_error(stage, e.what());
            }
        }
    }

    // Minimum variance distortionless response weights
    //   w = R^{-1} a / (a^H R^{-1} a)
    inline BeamformerWeights mvdr_weights(const HermitianMatrix &r, const SteeringVector &a,
                                          std::string label = "mvdr")
    {
        return BeamformerWeights{detail::mvdr_vector(r, a), std::move(label)};
    }

    // Sample matrix inversion: MVDR with the sample covariance substituted for
    // the interference-plus-noise covariance. With fewer snapshots than
    // sensors the sample covariance is loaded to keep it invertible.
    inline BeamformerWeights smi_weights(const SnapshotMatrix &snapshots, const SteeringVector &a0)
    {
        HermitianMatrix r = sample_covariance(snapshots);
        if (snapshots.cols() < snapshots.rows())
        {
            CMatrix loaded = r.mat() + detail::diagonal_loading(r) * CMatrix::Identity(r.dim(), r.dim());
            r = HermitianMatrix(loaded);
        }
        return BeamformerWeights{detail::mvdr_vector(r, a0), "smi"};
    }

    // Intermediates of one pipeline run, kept for diagnostics and tests.
    struct UrglqArtifacts
    {
        HermitianMatrix sample_cov;    // R
        double noise_estimate = 0.0;   // smallest eigenvalue of R
        double alpha = 0.0;
        HermitianMatrix projector;     // B
        HermitianMatrix quasi_cov;     // B^H R B + noise I
        HermitianMatrix reconstructed; // sector integral + noise floor
        CorrectionResult correction;
        BeamformerWeights weights;
    };

    // Full reconstruction pipeline:
    //   sample covariance -> covariance-like matrix -> projection -> quasi
    //   covariance -> sector quadrature -> steering correction -> weights.
    //
    // The sector quadrature spans only the interference ranges, so the white
    // noise floor (the noise estimate times identity) is added to make the
    // reconstruction full rank; with no interference sector it is the entire
    // reconstruction. Stage failures are rethrown tagged with the stage name.
    inline UrglqArtifacts run_urglq_pipeline(const SnapshotMatrix &snapshots,
                                             const ArrayGeometry &geometry,
                                             const PresumedDoas &presumed,
                                             const PipelineConfig &config)
    {
        using detail::pipeline_stage;
        UrglqArtifacts art;

        art.sample_cov = pipeline_stage("sample-covariance", [&] {
            return sample_covariance(snapshots);
        });
        art.noise_estimate = pipeline_stage("noise-estimate", [&] {
            return noise_power_estimate(art.sample_cov);
        });
        if (!(art.noise_estimate > 0.0))
            art.noise_estimate = detail::diagonal_loading(art.sample_cov);

        SteeringVector a0 = pipeline_stage("steering", [&] {
            return steering_vector(geometry, presumed.desired_deg);
        });

        art.alpha = (config.alpha_policy.kind == AlphaPolicy::Kind::trace_scaled)
                        ? config.alpha_policy.scale * art.sample_cov.trace()
                        : config.alpha_policy.value;

        art.quasi_cov = pipeline_stage("signal-removal", [&] {
            HermitianMatrix c = build_covariance_like(a0, art.alpha);
            art.projector = projection_matrix(c);
            return quasi_covariance(art.sample_cov, art.projector, art.noise_estimate);
        });

        art.reconstructed = pipeline_stage("reconstruction", [&] {
            const Eigen::Index m = geometry.num_sensors;
            CMatrix floor = art.noise_estimate * CMatrix::Identity(m, m);
            if (presumed.interference_deg.empty())
                return HermitianMatrix(floor);
            AngularSector sectors = interference_sectors(
                presumed.interference_deg, config.sector_half_width_deg, presumed.desired_deg);
            if (config.recenter_sectors)
                sectors = recenter_sectors_on_peaks(art.quasi_cov, art.projector, sectors, geometry,
                                                    presumed.desired_deg, config.sector_half_width_deg);
            HermitianMatrix sector_part = reconstruct_ipncm(
                art.quasi_cov, art.projector, sectors, geometry, config.reconstruction);
            return HermitianMatrix(sector_part.mat() + floor);
        });

        art.correction = pipeline_stage("steering-correction", [&] {
            if (config.correction_enabled)
                return correct_steering(a0, art.reconstructed);
            CorrectionResult identity;
            identity.corrected = a0;
            identity.e_perp = CVector::Zero(a0.size());
            identity.objective = 0.0;
            identity.active_inequality = false;
            return identity;
        });

        art.weights = pipeline_stage("weights", [&] {
            return mvdr_weights(art.reconstructed, art.correction.corrected, "urglq");
        });
        return art;
    }

    inline BeamformerWeights urglq_weights(const SnapshotMatrix &snapshots,
                                           const ArrayGeometry &geometry,
                                           const PresumedDoas &presumed,
                                           const PipelineConfig &config)
    {
        return run_urglq_pipeline(snapshots, geometry, presumed, config).weights;
    }

    // Summation baseline: reconstruction by midpoint summation of the Capon
    // spectrum of the plain sample covariance (no signal removal, no steering
    // correction), weights from the presumed steering vector. The same noise
    // floor treatment is used so the reconstruction is invertible.
    inline BeamformerWeights linear_baseline_weights(const SnapshotMatrix &snapshots,
                                                     const ArrayGeometry &geometry,
                                                     const PresumedDoas &presumed,
                                                     int riemann_points,
                                                     double sector_half_width_deg = 8.0)
    {
        using detail::pipeline_stage;
        HermitianMatrix r_hat = pipeline_stage("sample-covariance", [&] {
            return sample_covariance(snapshots);
        });
        double noise_est = pipeline_stage("noise-estimate", [&] {
            return noise_power_estimate(r_hat);
        });
        if (!(noise_est > 0.0))
            noise_est = detail::diagonal_loading(r_hat);

        SteeringVector a0 = steering_vector(geometry, presumed.desired_deg);
        HermitianMatrix reconstructed = pipeline_stage("reconstruction", [&] {
            const Eigen::Index m = geometry.num_sensors;
            CMatrix floor = noise_est * CMatrix::Identity(m, m);
            if (presumed.interference_deg.empty())
                return HermitianMatrix(floor);
            AngularSector sectors = interference_sectors(
                presumed.interference_deg, sector_half_width_deg, presumed.desired_deg);
            HermitianMatrix sector_part = reconstruct_ipncm(
                r_hat, sectors, geometry, ReconstructionMethod::riemann(riemann_points));
            return HermitianMatrix(sector_part.mat() + floor);
        });
        return pipeline_stage("weights", [&] {
            return mvdr_weights(reconstructed, a0, "linear");
        });
    }
}

#endif
