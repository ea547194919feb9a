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

#ifndef URGLQ_QUADRATURE_HPP
#define URGLQ_QUADRATURE_HPP

#include "urglq/common.hpp"

namespace urglq
{
    // Gauss-Legendre rule on [-1, 1]. An N-point rule integrates polynomials
    // of degree <= 2N - 1 exactly; weights are positive and sum to 2.
    struct GlqRule
    {
        RVector nodes;   // strictly increasing, symmetric about 0
        RVector weights; // positive
        int order = 0;
    };

    // Legendre polynomial P_n(z) by the three-term recurrence.
    inline double legendre_polynomial(int n, double z)
    {
        if (n < 0)
            throw std::domain_error("legendre polynomial: order must be nonnegative");
        if (n == 0)
            return 1.0;
        double p_prev = 1.0;
        double p = z;
        for (int k = 1; k < n; ++k)
        {
            double p_next = ((2.0 * k + 1.0) * z * p - k * p_prev) / (k + 1.0);
            p_prev = p;
            p = p_next;
        }
        return p;
    }

    // Fixed 3-point rule: nodes {-sqrt(15)/5, 0, sqrt(15)/5}, weights
    // {5/9, 8/9, 5/9}. This is the rule the reconstruction pipeline uses.
    inline GlqRule glq_rule_3()
    {
        GlqRule rule;
        rule.order = 3;
        rule.nodes = RVector(3);
        rule.weights = RVector(3);
        const double r = std::sqrt(15.0) / 5.0;
        rule.nodes << -r, 0.0, r;
        rule.weights << 5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0;
        return rule;
    }

    // General N-point rule. Roots of P_N via Newton iteration on the
    // recurrence, tolerance 1e-14; weights 2 / ((1 - z^2) P_N'(z)^2). At
    // order 3 this reproduces glq_rule_3 to rounding; the closed form stays
    // the reconstruction default.
    inline GlqRule glq_rule(int order)
    {
        if (order < 1)
            throw std::domain_error("glq rule: order must be at least 1");

        GlqRule rule;
        rule.order = order;
        rule.nodes = RVector::Zero(order);
        rule.weights = RVector::Zero(order);

        const int half = (order + 1) / 2;
        for (int i = 0; i < half; ++i)
        {
            double z = std::cos(pi * (i + 0.75) / (order + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter)
            {
                double p = legendre_polynomial(order, z);
                double p1 = legendre_polynomial(order - 1, z);
                dp = order * (z * p - p1) / (z * z - 1.0);
                double dz = p / dp;
                z -= dz;
                if (std::abs(dz) <= 1e-14)
                    break;
            }
            double w = 2.0 / ((1.0 - z * z) * dp * dp);
            rule.nodes(order - 1 - i) = z;
            rule.nodes(i) = -z;
            rule.weights(order - 1 - i) = w;
            rule.weights(i) = w;
        }
        if (order % 2 == 1)
            rule.nodes(half - 1) = 0.0;
        return rule;
    }

    // integral_a^b f(z) dz ~ ((b-a)/2) sum_n w_n f(l_n),
    // l_n = (a+b)/2 + z_n (b-a)/2.
    template <typename F>
    inline double glq_integrate_scalar(F &&f, double a, double b, const GlqRule &rule)
    {
        if (!(a < b))
            throw std::domain_error("glq integrate: need a < b");
        const double mid = 0.5 * (a + b);
        const double halfw = 0.5 * (b - a);
        double acc = 0.0;
        for (Eigen::Index n = 0; n < rule.nodes.size(); ++n)
            acc += rule.weights(n) * f(mid + rule.nodes(n) * halfw);
        return halfw * acc;
    }

    // Matrix-valued integrand, applied entrywise. Positive weights preserve
    // Hermitian structure and the PSD cone of the integrand values.
    template <typename F>
    inline CMatrix glq_integrate_matrix(F &&f, double a, double b, const GlqRule &rule)
    {
        if (!(a < b))
            throw std::domain_error("glq integrate: need a < b");
        const double mid = 0.5 * (a + b);
        const double halfw = 0.5 * (b - a);
        CMatrix acc;
        for (Eigen::Index n = 0; n < rule.nodes.size(); ++n)
        {
            CMatrix value = f(mid + rule.nodes(n) * halfw);
            if (acc.size() == 0)
                acc = CMatrix::Zero(value.rows(), value.cols());
            acc += rule.weights(n) * value;
        }
        return halfw * acc;
    }

    // Midpoint summation baseline: sum_l f(theta_l) * dtheta with the theta_l
    // at the midpoints of num_points uniform subintervals.
    template <typename F>
    inline CMatrix riemann_sum_integrate(F &&f, double a, double b, int num_points)
    {
        if (num_points < 1)
            throw std::domain_error("riemann sum: need at least one point");
        if (!(a < b))
            throw std::domain_error("riemann sum: need a < b");
        const double dz = (b - a) / num_points;
        CMatrix acc;
        for (int l = 0; l < num_points; ++l)
        {
            CMatrix value = f(a + (l + 0.5) * dz);
            if (acc.size() == 0)
                acc = CMatrix::Zero(value.rows(), value.cols());
            acc += value;
        }
        return dz * acc;
    }
}

#endif
