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

#ifndef URGLQ_STEERING_CORRECTION_HPP
#define URGLQ_STEERING_CORRECTION_HPP

#include "urglq/covariance.hpp"

namespace urglq
{
    // Result of the steering-vector correction QCQP
    //
    //   minimize  (a0 + e)^H R^{-1} (a0 + e)
    //   s.t.      a0^H e = 0
    //             (a0 + e)^H R (a0 + e) <= a0^H R a0
    //
    // where R is the reconstructed interference-plus-noise covariance. The
    // equality keeps the correction orthogonal to the presumed vector; the
    // inequality stops it from converging to an interference direction.
    struct CorrectionResult
    {
        SteeringVector corrected; // a0 + e_perp
        CVector e_perp;
        double objective = 0.0;    // (a0+e)^H R^{-1} (a0+e) at the solution
        double kkt_residual = 0.0; // max of stationarity / feasibility / complementarity residuals
        bool active_inequality = false;
        bool regularized = false; // R was near singular and received diagonal loading
        double multiplier = 0.0;  // Lagrange multiplier of the inequality
        int iterations = 0;
    };

    // Thrown when the multiplier search does not converge within the iteration
    // cap; carries the best iterate found.
    class convergence_error : public std::runtime_error
    {
    public:
        convergence_error(const std::string &msg, CorrectionResult best_iterate)
            : std::runtime_error(msg), best(std::move(best_iterate)) {}
        CorrectionResult best;
    };

    // Equality constraint eliminated through an orthonormal basis Q of the
    // complement of span(a0): e = Q y with y of complex dimension M-1. The
    // remaining problem is a generalized trust-region subproblem
    //
    //   minimize  y^H G y + 2 Re(h^H y) + objective_const
    //   s.t.      y^H A y + 2 Re(b^H y) <= 0
    //
    // with G = Q^H R^{-1} Q, h = Q^H R^{-1} a0, A = Q^H R Q, b = Q^H R a0.
    struct ReducedSubproblem
    {
        CMatrix basis;           // Q, M x (M-1)
        CMatrix objective_quad;  // G, Hermitian positive definite
        CVector objective_lin;   // h
        double objective_const;  // a0^H R^{-1} a0
        CMatrix constraint_quad; // A, Hermitian positive definite
        CVector constraint_lin;  // b
        double constraint_budget; // a0^H R a0
        bool regularized = false;
    };

    namespace detail
    {
        // Diagonal loading for a nearly singular reconstruction; the flag is
        // reported to the caller rather than hidden.
        inline CMatrix regularize_if_needed(const HermitianMatrix &r, bool &flag)
        {
            Eigen::SelfAdjointEigenSolver<CMatrix> solver(r.mat(), Eigen::EigenvaluesOnly);
            const double floor = 1e-12 * r.trace() / static_cast<double>(r.dim());
            if (solver.info() == Eigen::Success && solver.eigenvalues().minCoeff() > floor)
            {
                flag = false;
                return r.mat();
            }
            flag = true;
            return r.mat() + floor * CMatrix::Identity(r.dim(), r.dim());
        }

        inline CVector solve_pd(const CMatrix &a, const CVector &b)
        {
            return hermitian_solve(HermitianMatrix(a, 1e-10), b);
        }
    }

    inline ReducedSubproblem reduce_to_subproblem(const SteeringVector &a0,
                                                  const HermitianMatrix &r_inf)
    {
        const Eigen::Index m = a0.size();
        if (r_inf.dim() != m)
            throw std::invalid_argument("steering correction: dimension mismatch");
        if (m < 2)
            throw std::domain_error("steering correction: need at least 2 sensors");

        ReducedSubproblem sub;
        CMatrix r = detail::regularize_if_needed(r_inf, sub.regularized);

        // Columns 2..M of the Householder factor of a0 span its complement.
        Eigen::HouseholderQR<CMatrix> qr(a0);
        CMatrix q_full = qr.householderQ() * CMatrix::Identity(m, m);
        sub.basis = q_full.rightCols(m - 1);

        Eigen::LLT<CMatrix> llt(r);
        CMatrix s;
        if (llt.info() == Eigen::Success)
            s = llt.solve(CMatrix::Identity(m, m));
        else
        {
            EigenDecomposition d = hermitian_eig(HermitianMatrix(r, 1e-10));
            if (d.eigenvalues(m - 1) <= 0.0)
                throw conditioning_error("steering correction: covariance is not positive definite");
            s = d.eigenvectors * d.eigenvalues.cwiseInverse().asDiagonal() * d.eigenvectors.adjoint();
        }
        s = 0.5 * (s + s.adjoint()).eval();

        CMatrix g = sub.basis.adjoint() * s * sub.basis;
        sub.objective_quad = 0.5 * (g + g.adjoint());
        sub.objective_lin = sub.basis.adjoint() * (s * a0);
        sub.objective_const = a0.dot(s * a0).real();

        CMatrix a = sub.basis.adjoint() * r * sub.basis;
        sub.constraint_quad = 0.5 * (a + a.adjoint());
        sub.constraint_lin = sub.basis.adjoint() * (r * a0);
        sub.constraint_budget = a0.dot(r * a0).real();
        return sub;
    }

    // Solves the correction QCQP by a Lagrange multiplier search on the
    // secular equation of the stationarity condition
    //
    //   (G + lambda A) y = -(h + lambda b),   phi(lambda) = y^H A y + 2 Re(b^H y)
    //
    // Both G and A are positive definite, so phi(0) <= 0 means the interior
    // stationary point is feasible (lambda = 0); otherwise phi has a root at
    // some lambda > 0 which is located by bracketing followed by safeguarded
    // Newton/bisection steps.
    inline CorrectionResult correct_steering(const SteeringVector &a0,
                                             const HermitianMatrix &r_inf)
    {
        constexpr int max_iterations = 200;
        ReducedSubproblem sub = reduce_to_subproblem(a0, r_inf);
        const CMatrix &g = sub.objective_quad;
        const CVector &h = sub.objective_lin;
        const CMatrix &a = sub.constraint_quad;
        const CVector &b = sub.constraint_lin;

        const double feas_scale = std::max(1.0, sub.constraint_budget);
        const double feas_tol = 1e-10 * feas_scale;

        auto phi_of = [&](const CVector &y) {
            return y.dot(a * y).real() + 2.0 * b.dot(y).real();
        };
        auto objective_of = [&](const CVector &y) {
            return y.dot(g * y).real() + 2.0 * h.dot(y).real() + sub.objective_const;
        };
        auto finish = [&](const CVector &y, double lambda, int iterations) {
            CorrectionResult res;
            res.e_perp = sub.basis * y;
            res.corrected = a0 + res.e_perp;
            res.objective = objective_of(y);
            res.multiplier = lambda;
            res.iterations = iterations;
            res.regularized = sub.regularized;
            const double phi = phi_of(y);
            res.active_inequality = lambda > 0.0 || std::abs(phi) <= 10.0 * feas_tol;
            const double stat = (g * y + h + lambda * (a * y + b)).norm() /
                                (h.norm() + lambda * b.norm() + 1.0);
            const double feas = std::max(0.0, phi) / feas_scale;
            const double comp = std::abs(lambda * phi) / feas_scale;
            res.kkt_residual = std::max({stat, feas, comp});
            return res;
        };

        // Degenerate budget: the feasible set shrinks to {0} when a0 is an
        // eigenvector of R (then h is parallel to a0 as well and e = 0 is
        // stationary).
        const double b_scale = std::sqrt(sub.constraint_budget * a.norm()) + 1.0;
        if (b.norm() <= 1e-13 * b_scale)
        {
            CVector y0 = detail::solve_pd(g, -h);
            if (phi_of(y0) <= feas_tol)
                return finish(y0, 0.0, 0);
            return finish(CVector::Zero(h.size()), 0.0, 0);
        }

        // Interior candidate.
        CVector y = detail::solve_pd(g, -h);
        if (phi_of(y) <= feas_tol)
            return finish(y, 0.0, 0);

        // Bracket a root of phi: phi(0) > 0 here and phi(inf) < 0.
        int used = 0;
        double lambda_lo = 0.0;
        double lambda_hi = 1.0;
        auto solve_at = [&](double lambda) {
            return detail::solve_pd(g + lambda * a, -(h + lambda * b));
        };
        double phi_hi = 0.0;
        for (;; ++used)
        {
            if (used >= max_iterations || !std::isfinite(lambda_hi))
                throw convergence_error("steering correction: failed to bracket the multiplier",
                                        finish(y, lambda_lo, used));
            y = solve_at(lambda_hi);
            phi_hi = phi_of(y);
            if (phi_hi <= 0.0)
                break;
            lambda_lo = lambda_hi;
            lambda_hi *= 4.0;
        }

        double lambda = lambda_hi;
        double phi = phi_hi;
        for (; used < max_iterations; ++used)
        {
            if (std::abs(phi) <= feas_tol)
                return finish(y, lambda, used);
            if (phi > 0.0)
                lambda_lo = lambda;
            else
                lambda_hi = lambda;

            // Newton step on phi(lambda); fall back to bisection when it
            // leaves the bracket. phi'(lambda) = 2 Re((A y + b)^H y') with
            // y' = -(G + lambda A)^{-1} (A y + b).
            CVector grad = a * y + b;
            CVector yprime = detail::solve_pd(g + lambda * a, -grad);
            double dphi = 2.0 * grad.dot(yprime).real();
            double next = lambda - phi / dphi;
            if (!(dphi < 0.0) || !(next > lambda_lo) || !(next < lambda_hi))
                next = 0.5 * (lambda_lo + lambda_hi);
            if (lambda_hi - lambda_lo <= 1e-15 * std::max(1.0, lambda_hi))
                return finish(y, lambda, used);
            lambda = next;
            y = solve_at(lambda);
            phi = phi_of(y);
        }
        throw convergence_error("steering correction: multiplier search hit the iteration cap",
                                finish(y, lambda, max_iterations));
    }
}

#endif
