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

#ifndef URGLQ_SIGNAL_REMOVAL_HPP
#define URGLQ_SIGNAL_REMOVAL_HPP

#include "urglq/covariance.hpp"

namespace urglq
{
    // Covariance-like matrix C = alpha a0 a0^H + I whose dominant eigenvector
    // is the presumed desired direction. alpha must be much larger than 1.
    inline HermitianMatrix build_covariance_like(const SteeringVector &a0, double alpha)
    {
        if (!(alpha >= 10.0))
            throw std::domain_error("covariance-like matrix: alpha must be at least 10");
        const Eigen::Index m = a0.size();
        CMatrix c = alpha * (a0 * a0.adjoint()) + CMatrix::Identity(m, m);
        return HermitianMatrix(c);
    }

    // Projection matrix B = I - p1 p1^H with p1 the dominant eigenvector of C.
    // B is a rank M-1 orthogonal projector that annihilates the presumed
    // desired direction. The eigendecomposition route is used even though p1
    // is proportional to a0 analytically, so the kernel is exercised on every
    // run. The global phase of p1 is normalized (first entry real nonnegative);
    // it does not change B but keeps the intermediate reproducible.
    inline HermitianMatrix projection_matrix(const HermitianMatrix &c)
    {
        EigenDecomposition d = hermitian_eig(c);
        const Eigen::Index m = c.dim();
        if (m < 2)
            throw std::domain_error("projection matrix: need dimension >= 2");
        const double top = d.eigenvalues(0);
        const double second = d.eigenvalues(1);
        if (!(top > 0.0) || (top - second) < 1e-6 * top)
            throw degeneracy_error("projection matrix: top eigenvalue is degenerate");
        CVector p1 = d.eigenvectors.col(0);
        if (std::abs(p1(0)) > 1e-12)
            p1 *= std::conj(p1(0)) / std::abs(p1(0));
        CMatrix b = CMatrix::Identity(m, m) - p1 * p1.adjoint();
        return HermitianMatrix(b);
    }

    // Quasi-covariance matrix with the desired component projected out and the
    // noise floor restored: R~ = B^H R B + noise_est I.
    inline HermitianMatrix quasi_covariance(const HermitianMatrix &r_hat,
                                            const HermitianMatrix &b, double noise_est)
    {
        if (!(noise_est > 0.0))
            throw std::domain_error("quasi covariance: noise estimate must be positive");
        if (r_hat.dim() != b.dim())
            throw std::invalid_argument("quasi covariance: dimension mismatch");
        const Eigen::Index m = r_hat.dim();
        CMatrix r = b.mat().adjoint() * r_hat.mat() * b.mat() +
                    noise_est * CMatrix::Identity(m, m);
        return HermitianMatrix(r);
    }
}

#endif
