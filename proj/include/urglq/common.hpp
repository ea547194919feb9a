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

#ifndef URGLQ_COMMON_HPP
#define URGLQ_COMMON_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace urglq
{
    using cplx = std::complex<double>;
    using CVector = Eigen::VectorXcd;
    using CMatrix = Eigen::MatrixXcd;
    using RVector = Eigen::VectorXd;

    inline constexpr double pi = 3.14159265358979323846;

    inline double deg_to_rad(double deg) { return deg * (pi / 180.0); }
    inline double rad_to_deg(double rad) { return rad * (180.0 / pi); }
    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

    // Thrown when a matrix that must be positive definite is singular or
    // indefinite within tolerance.
    class conditioning_error : public std::runtime_error
    {
    public:
        explicit conditioning_error(const std::string &msg) : std::runtime_error(msg) {}
    };

    // Thrown when an eigenvalue gap required by an algorithm is absent.
    class degeneracy_error : public std::runtime_error
    {
    public:
        explicit degeneracy_error(const std::string &msg) : std::runtime_error(msg) {}
    };

    // Thrown for invalid scenario / sector configuration.
    class config_error : public std::runtime_error
    {
    public:
        explicit config_error(const std::string &msg) : std::runtime_error(msg) {}
    };

    // Thrown for malformed binary or text files; messages carry byte offsets.
    class format_error : public std::runtime_error
    {
    public:
        explicit format_error(const std::string &msg) : std::runtime_error(msg) {}
    };

    // Thrown when a weight vector cannot be scored (zero output power).
    class degenerate_weight_error : public std::runtime_error
    {
    public:
        explicit degenerate_weight_error(const std::string &msg) : std::runtime_error(msg) {}
    };

    // Wraps an error from one stage of the beamforming pipeline with the
    // stage name so callers can tell where a run failed.
    class pipeline_error : public std::runtime_error
    {
    public:
        pipeline_error(const std::string &stage, const std::string &msg)
            : std::runtime_error(stage + ": " + msg), stage_(stage) {}
        const std::string &stage() const { return stage_; }

    private:
        std::string stage_;
    };
}

#endif
