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
    SnapshotMatrix reference_snapshots(int num_snapshots, double desired_power, Rng &rng)
    {
        ArrayGeometry geom(10, 0.5);
        std::vector<SourceSpec> sources = {
            {10.0, desired_power, SourceKind::desired},
            {-30.0, 100.0, SourceKind::interference},
            {40.0, 100.0, SourceKind::interference}};
        return generate_snapshots(geom, sources, 1.0, num_snapshots, rng);
    }
}

TEST_CASE("build_covariance_like - spectrum and alignment")
{
    ArrayGeometry geom(10, 0.5);
    SteeringVector a0 = steering_vector(geom, 10.0);
    HermitianMatrix c = build_covariance_like(a0, 1e4);
    EigenDecomposition d = hermitian_eig(c);
    CHECK(std::abs(d.eigenvalues(0) - 100001.0) < 1e-9 * 100001.0);
    // dominant eigenvector is the normalized presumed vector up to phase
    const double align = std::abs(d.eigenvectors.col(0).dot(a0)) / a0.norm();
    CHECK(std::abs(align - 1.0) < 1e-10);

    CHECK_THROWS_AS(build_covariance_like(a0, 9.9), std::domain_error);
}

TEST_CASE("projection_matrix - annihilates the presumed direction")
{
    for (int m : {2, 4, 10})
    {
        ArrayGeometry geom(m, 0.5);
        SteeringVector a0 = steering_vector(geom, 10.0);
        HermitianMatrix b = projection_matrix(build_covariance_like(a0, 1e4));
        CHECK((b.mat() * a0).norm() <= 1e-10 * a0.norm());
        CHECK((b.mat() * b.mat() - b.mat()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((b.mat() - b.mat().adjoint()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(std::abs(b.trace() - (m - 1)) < 1e-12 * m);
    }
}

TEST_CASE("projection_matrix - degenerate top eigenvalue is rejected")
{
    CMatrix flat = CMatrix::Zero(3, 3);
    flat(0, 0) = 5.0;
    flat(1, 1) = 5.0;
    flat(2, 2) = 1.0;
    CHECK_THROWS_AS(projection_matrix(HermitianMatrix(flat)), degeneracy_error);
}

TEST_CASE("projection_matrix - minimum of |B a(theta)| over angle is the presumed direction")
{
    ArrayGeometry geom(10, 0.5);
    SteeringVector a0 = steering_vector(geom, 10.0);
    HermitianMatrix b = projection_matrix(build_covariance_like(a0, 1e4));
    double best_theta = -90.0, best = 1e300;
    for (double theta = -89.5; theta <= 89.5; theta += 0.5)
    {
        const double v = (b.mat() * steering_vector(geom, theta)).squaredNorm();
        if (v < best)
        {
            best = v;
            best_theta = theta;
        }
    }
    CHECK(best_theta == 10.0);
}

TEST_CASE("quasi_covariance - projector spectrum with identity input")
{
    ArrayGeometry geom(6, 0.5);
    SteeringVector a0 = steering_vector(geom, -5.0);
    HermitianMatrix b = projection_matrix(build_covariance_like(a0, 1e4));
    HermitianMatrix r = quasi_covariance(HermitianMatrix::identity(6), b, 1.0);
    EigenDecomposition d = hermitian_eig(r);
    // B^H I B + I = B + I: eigenvalue 1 once and 2 with multiplicity M-1
    CHECK(std::abs(d.eigenvalues(5) - 1.0) < 1e-12);
    for (int i = 0; i < 5; ++i)
        CHECK(std::abs(d.eigenvalues(i) - 2.0) < 1e-12);

    CHECK_THROWS_AS(quasi_covariance(HermitianMatrix::identity(6), b, 0.0), std::domain_error);
}

TEST_CASE("quasi_covariance - desired power removed, interference kept")
{
    ArrayGeometry geom(10, 0.5);
    SteeringVector a0 = steering_vector(geom, 10.0);
    Rng rng(42);
    SnapshotMatrix x = reference_snapshots(100, 1000.0, rng); // strong desired signal
    HermitianMatrix r_hat = sample_covariance(x);
    const double noise = noise_power_estimate(r_hat);
    HermitianMatrix b = projection_matrix(build_covariance_like(a0, 100.0 * r_hat.trace()));
    HermitianMatrix r_tilde = quasi_covariance(r_hat, b, noise);

    // leakage of the presumed direction after removal
    const CMatrix centered = r_tilde.mat() - noise * CMatrix::Identity(10, 10);
    const double leak = std::abs(a0.dot(centered * a0).real());
    CHECK(leak <= 1e-8 * a0.dot(r_hat.mat() * a0).real());

    // interference energy is retained within 3 dB
    SteeringVector a1 = steering_vector(geom, -30.0);
    const double kept = a1.dot(r_tilde.mat() * a1).real();
    const double orig = a1.dot(r_hat.mat() * a1).real();
    CHECK(std::abs(10.0 * std::log10(kept / orig)) <= 3.0);

    // positive definite whenever the noise estimate is positive
    EigenDecomposition d = hermitian_eig(r_tilde);
    CHECK(d.eigenvalues.minCoeff() >= noise - 1e-10);
}

TEST_CASE("quasi_covariance - invariant to the global phase of the presumed vector")
{
    ArrayGeometry geom(8, 0.5);
    SteeringVector a0 = steering_vector(geom, 22.0);
    Rng rng(43);
    SnapshotMatrix x = generate_snapshots(8, {{a0, 10.0}}, 1.0, 40, rng);
    HermitianMatrix r_hat = sample_covariance(x);

    SteeringVector rotated = std::polar(1.0, 1.234) * a0;
    HermitianMatrix b1 = projection_matrix(build_covariance_like(a0, 1e4));
    HermitianMatrix b2 = projection_matrix(build_covariance_like(rotated, 1e4));
    HermitianMatrix r1 = quasi_covariance(r_hat, b1, 1.0);
    HermitianMatrix r2 = quasi_covariance(r_hat, b2, 1.0);
    CHECK((r1.mat() - r2.mat()).norm() < 1e-12 * r1.mat().norm());
}
