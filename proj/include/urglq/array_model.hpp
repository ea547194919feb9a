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

#ifndef URGLQ_ARRAY_MODEL_HPP
#define URGLQ_ARRAY_MODEL_HPP

#include <utility>
#include <variant>
#include <vector>

#include "urglq/common.hpp"
#include "urglq/rng.hpp"

namespace urglq
{
    // Uniform linear array: M sensors spaced d wavelengths apart.
    struct ArrayGeometry
    {
        int num_sensors = 0;  // M >= 2
        double spacing = 0.5; // d / lambda > 0

        ArrayGeometry() = default;
        ArrayGeometry(int m, double d) : num_sensors(m), spacing(d)
        {
            if (m < 2)
                throw std::domain_error("array geometry: need at least 2 sensors");
            if (!(d > 0.0))
                throw std::domain_error("array geometry: spacing must be positive");
        }
    };

    // Complex array response to a plane wave; entry 1 is the reference sensor.
    using SteeringVector = CVector;

    enum class SourceKind
    {
        desired,
        interference
    };

    struct SourceSpec
    {
        double angle_deg = 0.0; // in (-90, 90)
        double power = 1.0;     // linear sigma^2 >= 0
        SourceKind kind = SourceKind::interference;
    };

    // Complex M x K matrix; column k is the array output at snapshot k.
    using SnapshotMatrix = CMatrix;

    // Mismatch models used by the Monte Carlo scenarios.
    struct NoMismatch
    {
    };
    struct RandomDoaMismatch
    {
        double bound_deg = 0.0; // DOA offset uniform on [-bound, bound]
    };
    struct GainPhaseMismatch
    {
        double gain_std = 0.0;  // per-sensor gain perturbation std
        double phase_std = 0.0; // per-sensor phase perturbation std, radians
    };
    struct SvRandomErrorMismatch
    {
        double rho_max = 0.0; // error norm uniform on [0, rho_max]
    };
    using MismatchModel = std::variant<NoMismatch, RandomDoaMismatch, GainPhaseMismatch, SvRandomErrorMismatch>;

    // Array response at an angle given in radians. Internal angles are radians;
    // degrees are converted at the public API boundary.
    inline SteeringVector steering_vector_radians(const ArrayGeometry &geometry, double angle_rad)
    {
        if (geometry.num_sensors < 2 || !(geometry.spacing > 0.0))
            throw std::domain_error("steering vector: invalid array geometry");
        const int m = geometry.num_sensors;
        const double step = 2.0 * pi * geometry.spacing * std::sin(angle_rad);
        SteeringVector a(m);
        for (int i = 0; i < m; ++i)
            a(i) = std::polar(1.0, step * static_cast<double>(i));
        return a;
    }

    // Nominal steering vector a(theta); theta in degrees, open interval (-90, 90).
    inline SteeringVector steering_vector(const ArrayGeometry &geometry, double angle_deg)
    {
        if (!(angle_deg > -90.0 && angle_deg < 90.0))
            throw std::domain_error("steering vector: angle must lie in (-90, 90) degrees");
        return steering_vector_radians(geometry, deg_to_rad(angle_deg));
    }

    // Synthetic snapshots for explicit (steering vector, power) sources on top
    // of spatially and temporally white circular Gaussian noise. Source
    // waveforms are drawn with unit variance and scaled by sqrt(power), so
    // changing a power re-scales the same realization of the draw.
    inline SnapshotMatrix generate_snapshots(int num_sensors,
                                             const std::vector<std::pair<SteeringVector, double>> &sources,
                                             double noise_power, int num_snapshots, Rng &rng)
    {
        if (num_snapshots < 1)
            throw std::domain_error("generate snapshots: need at least one snapshot");
        if (!(noise_power > 0.0))
            throw std::domain_error("generate snapshots: noise power must be positive");
        for (const auto &s : sources)
        {
            if (s.first.size() != num_sensors)
                throw std::domain_error("generate snapshots: steering vector length mismatch");
            if (s.second < 0.0)
                throw std::domain_error("generate snapshots: source power must be nonnegative");
        }

        SnapshotMatrix x(num_sensors, num_snapshots);
        const double noise_scale = std::sqrt(noise_power);
        for (int k = 0; k < num_snapshots; ++k)
        {
            CVector col = CVector::Zero(num_sensors);
            for (const auto &s : sources)
            {
                cplx w = std::sqrt(s.second) * rng.circular_normal(1.0);
                col += s.first * w;
            }
            for (int m = 0; m < num_sensors; ++m)
                col(m) += noise_scale * rng.circular_normal(1.0);
            x.col(k) = col;
        }
        return x;
    }

    // Snapshots from nominal source specifications.
    inline SnapshotMatrix generate_snapshots(const ArrayGeometry &geometry,
                                             const std::vector<SourceSpec> &sources,
                                             double noise_power, int num_snapshots, Rng &rng)
    {
        std::vector<std::pair<SteeringVector, double>> resolved;
        resolved.reserve(sources.size());
        for (const auto &s : sources)
            resolved.emplace_back(steering_vector(geometry, s.angle_deg), s.power);
        return generate_snapshots(geometry.num_sensors, resolved, noise_power, num_snapshots, rng);
    }

    // Per-sensor gain and phase perturbation:
    //   a_m  <-  (1 + gamma_m) * exp(j delta_m) * a_m
    inline SteeringVector apply_gain_phase_perturbation(const SteeringVector &sv,
                                                        const RVector &gains,
                                                        const RVector &phases)
    {
        if (gains.size() != sv.size() || phases.size() != sv.size())
            throw std::domain_error("gain/phase perturbation: vector length mismatch");
        SteeringVector out(sv.size());
        for (Eigen::Index m = 0; m < sv.size(); ++m)
            out(m) = (1.0 + gains(m)) * std::polar(1.0, phases(m)) * sv(m);
        return out;
    }

    // Additive random steering error with exact Euclidean norm rho:
    //   out = sv + (rho / sqrt(M)) * [exp(j phi_0), ..., exp(j phi_{M-1})]^T
    inline SteeringVector apply_sv_random_error(const SteeringVector &sv, double rho,
                                                const RVector &phases)
    {
        if (rho < 0.0)
            throw std::domain_error("steering error: rho must be nonnegative");
        if (phases.size() != sv.size())
            throw std::domain_error("steering error: phase vector length mismatch");
        const double scale = rho / std::sqrt(static_cast<double>(sv.size()));
        SteeringVector out(sv.size());
        for (Eigen::Index m = 0; m < sv.size(); ++m)
            out(m) = sv(m) + scale * std::polar(1.0, phases(m));
        return out;
    }

    // Same, with phases drawn uniformly on [0, 2*pi).
    inline SteeringVector apply_sv_random_error(const SteeringVector &sv, double rho, Rng &rng)
    {
        RVector phases(sv.size());
        for (Eigen::Index m = 0; m < sv.size(); ++m)
            phases(m) = rng.uniform(0.0, 2.0 * pi);
        return apply_sv_random_error(sv, rho, phases);
    }

    // DOA offset uniform on [-bound, bound]; drawn once per Monte Carlo trial
    // and held fixed across snapshots.
    inline double perturb_doa(double angle_deg, double bound_deg, Rng &rng)
    {
        if (bound_deg < 0.0)
            throw std::domain_error("perturb doa: bound must be nonnegative");
        return angle_deg + rng.uniform(-bound_deg, bound_deg);
    }
}

#endif
