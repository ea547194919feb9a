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
// Test-only reference implementations. These stay independent of the library
// code paths they are used to check.

#ifndef URGLQ_TESTS_SUPPORT_HPP
#define URGLQ_TESTS_SUPPORT_HPP

#include <urglq/urglq.hpp>

namespace urglq::testsupport
{
    // Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations with exact
    // 2x2 diagonalization, returned descending. Independent of the solver
    // used by the library.
    inline RVector jacobi_hermitian_eigenvalues(CMatrix a)
    {
        const Eigen::Index n = a.rows();
        const double scale = std::max(a.norm(), 1e-300);
        for (int sweep = 0; sweep < 60; ++sweep)
        {
            double off = 0.0;
            for (Eigen::Index p = 0; p < n; ++p)
                for (Eigen::Index q = p + 1; q < n; ++q)
                    off += std::norm(a(p, q));
            if (std::sqrt(off) <= 1e-14 * scale)
                break;
            for (Eigen::Index p = 0; p < n; ++p)
                for (Eigen::Index q = p + 1; q < n; ++q)
                {
                    const cplx apq = a(p, q);
                    if (std::abs(apq) <= 1e-18 * scale)
                        continue;
                    const double app = a(p, p).real();
                    const double aqq = a(q, q).real();
                    const double d = 0.5 * (app - aqq);
                    const double root = std::sqrt(d * d + std::norm(apq));
                    const double s = (d >= 0.0) ? 1.0 : -1.0;
                    // lam - app for the eigenvalue on app's side, written as a
                    // quotient so small |apq| does not cancel catastrophically
                    const double lam_minus_app = s * std::norm(apq) / (root + std::abs(d));
                    CVector u(2);
                    u << apq, cplx(lam_minus_app, 0.0);
                    if (u.norm() <= 1e-300)
                        continue;
                    u.normalize();
                    CMatrix j = CMatrix::Identity(n, n);
                    j(p, p) = u(0);
                    j(q, p) = u(1);
                    j(p, q) = -std::conj(u(1));
                    j(q, q) = std::conj(u(0));
                    a = (j.adjoint() * a * j).eval();
                }
        }
        RVector vals = a.diagonal().real();
        std::sort(vals.data(), vals.data() + vals.size(), std::greater<double>());
        return vals;
    }

    // Composite trapezoid rule, scalar integrand.
    template <typename F>
    inline double trapezoid_scalar(F &&f, double a, double b, int n)
    {
        const double h = (b - a) / n;
        double acc = 0.5 * (f(a) + f(b));
        for (int i = 1; i < n; ++i)
            acc += f(a + i * h);
        return acc * h;
    }

    // Composite trapezoid rule, matrix integrand.
    template <typename F>
    inline CMatrix trapezoid_matrix(F &&f, double a, double b, int n)
    {
        const double h = (b - a) / n;
        CMatrix acc = 0.5 * (f(a) + f(b));
        for (int i = 1; i < n; ++i)
            acc += f(a + i * h);
        return acc * h;
    }

    inline CMatrix random_complex_matrix(Rng &rng, Eigen::Index rows, Eigen::Index cols)
    {
        CMatrix m(rows, cols);
        for (Eigen::Index j = 0; j < cols; ++j)
            for (Eigen::Index i = 0; i < rows; ++i)
                m(i, j) = rng.circular_normal(1.0);
        return m;
    }

    inline CMatrix random_hermitian(Rng &rng, Eigen::Index n)
    {
        CMatrix b = random_complex_matrix(rng, n, n);
        return 0.5 * (b + b.adjoint());
    }

    inline HermitianMatrix random_positive_definite(Rng &rng, Eigen::Index n, double floor = 0.1)
    {
        CMatrix b = random_complex_matrix(rng, n, n);
        return HermitianMatrix(b * b.adjoint() / static_cast<double>(n) +
                               floor * CMatrix::Identity(n, n));
    }

    // Brute-force reference for the reduced correction subproblem. The
    // feasible set {y : y^H A y + 2 Re(b^H y) <= 0} is an ellipsoid; its
    // boundary is parameterized exactly as y = center + radius * A^{-1/2} u
    // with u on the real unit sphere, so the search needs no feasibility
    // handling: a coordinate grid plus shrinking-step pattern search runs
    // once over the interior (free coordinates) and once over the boundary
    // (sphere angles), and the better point wins. Only the two quadratic
    // forms of the subproblem are evaluated.
    inline double brute_force_qcqp_objective(const ReducedSubproblem &sub, int grid_points = 9)
    {
        const Eigen::Index n = sub.objective_lin.size();
        const Eigen::Index dims = 2 * n;
        auto phi = [&](const CVector &y) {
            return y.dot(sub.constraint_quad * y).real() + 2.0 * sub.constraint_lin.dot(y).real();
        };
        auto objective = [&](const CVector &y) {
            return y.dot(sub.objective_quad * y).real() + 2.0 * sub.objective_lin.dot(y).real() +
                   sub.objective_const;
        };

        // pattern search over an unconstrained real coordinate vector
        auto minimize = [&](auto &&value, std::vector<double> coords, double step, double floor) {
            double best = value(coords);
            while (step > floor)
            {
                bool improved = false;
                for (std::size_t d = 0; d < coords.size(); ++d)
                    for (double sign : {1.0, -1.0})
                    {
                        std::vector<double> cand = coords;
                        cand[d] += sign * step;
                        const double v = value(cand);
                        if (v < best - 1e-16 * std::abs(best))
                        {
                            best = v;
                            coords = cand;
                            improved = true;
                        }
                    }
                if (!improved)
                    step *= 0.5;
            }
            return std::pair<double, std::vector<double>>(best, coords);
        };

        Eigen::SelfAdjointEigenSolver<CMatrix> es(sub.constraint_quad);
        const CVector center = -es.eigenvectors() *
                               (es.eigenvectors().adjoint() * sub.constraint_lin).cwiseQuotient(
                                   es.eigenvalues().cast<cplx>());
        const double radius = std::sqrt(std::max(-phi(center), 0.0));
        const CMatrix half_inverse = es.eigenvectors() *
                                     es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                                     es.eigenvectors().adjoint();

        auto coords_to_vector = [&](const std::vector<double> &coords) {
            CVector y(n);
            for (Eigen::Index i = 0; i < n; ++i)
                y(i) = cplx(coords[2 * i], coords[2 * i + 1]);
            return y;
        };

        // interior: unconstrained minimum of the objective, kept only if it
        // is feasible
        auto free_value = [&](const std::vector<double> &coords) {
            return objective(coords_to_vector(coords));
        };
        const double extent = radius / std::sqrt(es.eigenvalues().minCoeff()) + 1.0;
        auto [free_obj, free_coords] =
            minimize(free_value, std::vector<double>(dims, 0.0), extent, 1e-11);
        double best = 1e300;
        if (phi(coords_to_vector(free_coords)) <=
            1e-9 * std::max(1.0, std::abs(sub.constraint_budget)))
            best = free_obj;

        // boundary: hyperspherical angles, x_k = prod sin(angles) * cos(angle_k)
        auto angles_to_boundary = [&](const std::vector<double> &angles) {
            RVector x(dims);
            double sines = 1.0;
            for (Eigen::Index d = 0; d + 1 < dims; ++d)
            {
                x(d) = sines * std::cos(angles[d]);
                sines *= std::sin(angles[d]);
            }
            x(dims - 1) = sines;
            CVector u(n);
            for (Eigen::Index i = 0; i < n; ++i)
                u(i) = cplx(x(2 * i), x(2 * i + 1));
            return CVector(center + radius * (half_inverse * u));
        };
        auto boundary_value = [&](const std::vector<double> &angles) {
            return objective(angles_to_boundary(angles));
        };

        std::vector<double> best_angles(dims - 1, 0.0);
        double best_grid = 1e300;
        std::vector<int> idx(dims - 1, 0);
        for (;;)
        {
            std::vector<double> angles(dims - 1);
            for (std::size_t d = 0; d < angles.size(); ++d)
                angles[d] = 2.0 * pi * idx[d] / grid_points;
            const double v = boundary_value(angles);
            if (v < best_grid)
            {
                best_grid = v;
                best_angles = angles;
            }
            std::size_t d = 0;
            while (d < angles.size() && ++idx[d] == grid_points)
                idx[d++] = 0;
            if (d == angles.size())
                break;
        }
        auto [boundary_obj, final_angles] =
            minimize(boundary_value, best_angles, 2.0 * pi / grid_points, 1e-12);
        return std::min(best, boundary_obj);
    }
}

#endif
