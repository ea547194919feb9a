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

#ifndef URGLQ_COVARIANCE_HPP
#define URGLQ_COVARIANCE_HPP

#include <utility>
#include <vector>

#include "urglq/array_model.hpp"
#include "urglq/common.hpp"

namespace urglq
{
    // Complex Hermitian matrix. Construction rejects inputs whose asymmetry
    // exceeds the tolerance and averages the rest with their conjugate
    // transpose, which removes accumulation asymmetry from snapshot sums.
    class HermitianMatrix
    {
    public:
        HermitianMatrix() = default;

        explicit HermitianMatrix(const CMatrix &m, double rel_tol = 1e-12)
        {
            if (m.rows() != m.cols())
                throw std::invalid_argument("hermitian matrix: input must be square");
            const double scale = m.norm();
            const double asym = (m - m.adjoint()).norm();
            if (scale > 0.0 && asym > rel_tol * scale)
                throw std::invalid_argument("hermitian matrix: input is not Hermitian within tolerance");
            m_ = 0.5 * (m + m.adjoint());
        }

        static HermitianMatrix identity(Eigen::Index n)
        {
            return HermitianMatrix(CMatrix::Identity(n, n));
        }

        const CMatrix &mat() const { return m_; }
        Eigen::Index dim() const { return m_.rows(); }
        double trace() const { return m_.trace().real(); }

    private:
        CMatrix m_;
    };

    // Eigenvalues sorted descending; eigenvector columns orthonormal.
    struct EigenDecomposition
    {
        RVector eigenvalues;
        CMatrix eigenvectors;
    };

    // Sample covariance matrix R = (1/K) sum_k x(k) x(k)^H.
    inline HermitianMatrix sample_covariance(const SnapshotMatrix &snapshots)
    {
        if (snapshots.cols() < 1 || snapshots.rows() < 1)
            throw std::domain_error("sample covariance: empty snapshot set");
        CMatrix r = snapshots * snapshots.adjoint() / static_cast<double>(snapshots.cols());
        return HermitianMatrix(r);
    }

    inline EigenDecomposition hermitian_eig(const HermitianMatrix &a)
    {
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(a.mat());
        if (solver.info() != Eigen::Success)
            throw conditioning_error("hermitian eig: decomposition failed");
        EigenDecomposition d;
        d.eigenvalues = solver.eigenvalues().reverse();
        d.eigenvectors = solver.eigenvectors().rowwise().reverse();
        return d;
    }

    // Solves A x = b for Hermitian positive definite A. Cholesky first; if the
    // factorization fails near singularity, falls back to the eigendecomposition
    // and rejects matrices whose smallest eigenvalue is not positive.
    inline CVector hermitian_solve(const HermitianMatrix &a, const CVector &b)
    {
        if (a.dim() != b.size())
            throw std::invalid_argument("hermitian solve: dimension mismatch");
        Eigen::LLT<CMatrix> llt(a.mat());
        if (llt.info() == Eigen::Success)
            return llt.solve(b);

        EigenDecomposition d = hermitian_eig(a);
        const double lambda_min = d.eigenvalues(d.eigenvalues.size() - 1);
        const double lambda_max = d.eigenvalues(0);
        if (lambda_min <= 1e-14 * std::max(1.0, lambda_max))
            throw conditioning_error("hermitian solve: matrix is singular or indefinite");
        CVector y = d.eigenvectors.adjoint() * b;
        for (Eigen::Index i = 0; i < y.size(); ++i)
            y(i) /= d.eigenvalues(i);
        return d.eigenvectors * y;
    }

    // Noise power estimate: the minimum eigenvalue of the covariance matrix.
    inline double noise_power_estimate(const HermitianMatrix &r)
    {
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(r.mat(), Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw conditioning_error("noise power estimate: decomposition failed");
        return solver.eigenvalues().minCoeff();
    }

    // Exact interference-plus-noise covariance from known steering vectors:
    //   sum_p power_p a_p a_p^H + noise_power I
    inline HermitianMatrix true_ipncm(const std::vector<std::pair<SteeringVector, double>> &interferers,
                                      double noise_power, int num_sensors)
    {
        CMatrix r = noise_power * CMatrix::Identity(num_sensors, num_sensors);
        for (const auto &s : interferers)
        {
            if (s.first.size() != num_sensors)
                throw std::invalid_argument("true ipncm: steering vector length mismatch");
            r += s.second * (s.first * s.first.adjoint());
        }
        return HermitianMatrix(r);
    }

    // Exact IPNCM from nominal interference specifications.
    inline HermitianMatrix true_ipncm(const ArrayGeometry &geometry,
                                      const std::vector<SourceSpec> &interferers,
                                      double noise_power)
    {
        std::vector<std::pair<SteeringVector, double>> resolved;
        resolved.reserve(interferers.size());
        for (const auto &s : interferers)
        {
            if (s.kind == SourceKind::desired)
                throw std::invalid_argument("true ipncm: interferer list must exclude the desired source");
            resolved.emplace_back(steering_vector(geometry, s.angle_deg), s.power);
        }
        return true_ipncm(resolved, noise_power, geometry.num_sensors);
    }
}

#endif
