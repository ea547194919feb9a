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

#ifndef URGLQ_METRICS_HPP
#define URGLQ_METRICS_HPP

#include <utility>
#include <vector>

#include "urglq/beamformer.hpp"

namespace urglq
{
    // Sentinel for weights (numerically) orthogonal to the true steering
    // vector; output SINR is clamped here instead of diverging to -inf.
    inline constexpr double sinr_floor_db = -300.0;

    // Output SINR in dB against the simulation ground truth:
    //   10 log10( sigma_s^2 |w^H a_true|^2 / (w^H R_inf w) )
    // Invariant to any nonzero complex scaling of w.
    inline double output_sinr_db(const BeamformerWeights &w, const SourceSpec &desired,
                                 const HermitianMatrix &ipncm, const SteeringVector &true_desired_sv)
    {
        if (w.weights.size() != ipncm.dim() || w.weights.size() != true_desired_sv.size())
            throw std::invalid_argument("output sinr: dimension mismatch");
        const double denom = w.weights.dot(ipncm.mat() * w.weights).real();
        if (!(denom > 0.0))
            throw degenerate_weight_error("output sinr: interference-plus-noise output power is zero");
        const double num = desired.power * std::norm(w.weights.dot(true_desired_sv));
        if (!(num > 0.0))
            return sinr_floor_db;
        const double sinr = linear_to_db(num / denom);
        return sinr < sinr_floor_db ? sinr_floor_db : sinr;
    }

    // Spatial response 20 log10 |w^H a(theta)| over an angle grid, normalized
    // so the maximum is 0 dB.
    inline std::vector<std::pair<double, double>> beampattern(const BeamformerWeights &w,
                                                              const ArrayGeometry &geometry,
                                                              const std::vector<double> &grid_deg)
    {
        if (grid_deg.empty())
            throw std::domain_error("beampattern: empty angle grid");
        std::vector<std::pair<double, double>> pattern;
        pattern.reserve(grid_deg.size());
        double peak = 0.0;
        for (double theta : grid_deg)
        {
            SteeringVector a = steering_vector(geometry, theta);
            double mag = std::abs(w.weights.dot(a));
            peak = std::max(peak, mag);
            pattern.emplace_back(theta, mag);
        }
        if (!(peak > 0.0))
            throw degenerate_weight_error("beampattern: weight vector has zero response everywhere");
        for (auto &p : pattern)
        {
            double rel = p.second / peak;
            p.second = rel > 0.0 ? 20.0 * std::log10(rel) : sinr_floor_db;
        }
        return pattern;
    }

    // Gap to the optimal beamformer, nonnegative up to Monte Carlo noise.
    inline double deviation_from_optimal(double sinr_db, double sinr_opt_db)
    {
        return sinr_opt_db - sinr_db;
    }
}

#endif
