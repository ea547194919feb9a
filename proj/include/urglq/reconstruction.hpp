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

#ifndef URGLQ_RECONSTRUCTION_HPP
#define URGLQ_RECONSTRUCTION_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "urglq/covariance.hpp"
#include "urglq/quadrature.hpp"

namespace urglq
{
    struct AngleInterval
    {
        double lo_deg = 0.0;
        double hi_deg = 0.0;
    };

    // Union of disjoint closed angle intervals, degrees.
    struct AngularSector
    {
        std::vector<AngleInterval> intervals;
    };

    // Quadrature used for the sector integral: the fixed-order Gauss-Legendre
    // rule, or the midpoint summation baseline with a node count per interval.
    struct ReconstructionMethod
    {
        enum class Kind
        {
            glq,
            riemann
        };
        Kind kind = Kind::glq;
        int glq_order = 3;
        int riemann_points = 20; // midpoint nodes per interval

        static ReconstructionMethod glq3()
        {
            return ReconstructionMethod{Kind::glq, 3, 0};
        }
        static ReconstructionMethod riemann(int points)
        {
            return ReconstructionMethod{Kind::riemann, 0, points};
        }
    };

    // Capon spatial power at one steering vector: 1 / (a^H R^{-1} a).
    inline double capon_power(const HermitianMatrix &r, const SteeringVector &a)
    {
        CVector x = hermitian_solve(r, a);
        const double denom = a.dot(x).real();
        if (!(denom > 0.0))
            throw conditioning_error("capon power: quadratic form is not positive");
        return 1.0 / denom;
    }

    namespace detail
    {
        inline void merge_sorted_intervals(std::vector<AngleInterval> &intervals)
        {
            std::sort(intervals.begin(), intervals.end(),
                      [](const AngleInterval &a, const AngleInterval &b) { return a.lo_deg < b.lo_deg; });
            std::vector<AngleInterval> merged;
            for (const auto &iv : intervals)
            {
                if (!merged.empty() && iv.lo_deg <= merged.back().hi_deg)
                    merged.back().hi_deg = std::max(merged.back().hi_deg, iv.hi_deg);
                else
                    merged.push_back(iv);
            }
            intervals = std::move(merged);
        }
    }

    // Interference integration ranges [doa - half_width, doa + half_width].
    // Overlapping ranges are merged so the union stays pairwise disjoint. A
    // range that touches the desired sector (the same half width around the
    // desired DOA) is a configuration error.
    inline AngularSector interference_sectors(const std::vector<double> &presumed_doas_deg,
                                              double half_width_deg, double desired_doa_deg)
    {
        if (!(half_width_deg > 0.0))
            throw std::domain_error("interference sectors: half width must be positive");

        AngularSector sector;
        sector.intervals.reserve(presumed_doas_deg.size());
        for (double doa : presumed_doas_deg)
            sector.intervals.push_back({doa - half_width_deg, doa + half_width_deg});
        detail::merge_sorted_intervals(sector.intervals);

        const double desired_lo = desired_doa_deg - half_width_deg;
        const double desired_hi = desired_doa_deg + half_width_deg;
        for (const auto &iv : sector.intervals)
        {
            if (iv.lo_deg <= desired_hi && desired_lo <= iv.hi_deg)
                throw config_error("interference sectors: range [" + std::to_string(iv.lo_deg) +
                                   ", " + std::to_string(iv.hi_deg) +
                                   "] overlaps the desired sector");
            if (!(iv.lo_deg > -90.0 && iv.hi_deg < 90.0))
                throw config_error("interference sectors: range exceeds (-90, 90) degrees");
        }
        return sector;
    }

    namespace detail
    {
        // Shared implementation. When a signature projector P is supplied the
        // Capon denominator is evaluated on P a(theta) instead of a(theta):
        // after the desired direction has been blanked from the data, power in
        // that direction is unobservable, and keeping it in the quadratic form
        // would cap the measured interference peaks near the restored noise
        // floor. The numerator keeps the unprojected outer products, which is
        // what the weights see in raw data.
        inline HermitianMatrix reconstruct_ipncm_impl(const HermitianMatrix &r_basis,
                                                      const CMatrix *signature_projector,
                                                      const AngularSector &sectors,
                                                      const ArrayGeometry &geometry,
                                                      const ReconstructionMethod &method)
        {
            if (sectors.intervals.empty())
                throw std::domain_error("reconstruct ipncm: empty sector list");
            if (r_basis.dim() != geometry.num_sensors)
                throw std::invalid_argument("reconstruct ipncm: dimension mismatch");

            // One Cholesky factorization shared by every node evaluation.
            Eigen::LLT<CMatrix> llt(r_basis.mat());
            auto integrand = [&](double theta_rad) -> CMatrix {
                SteeringVector a = steering_vector_radians(geometry, theta_rad);
                CVector sig = signature_projector ? CVector(*signature_projector * a) : a;
                double denom;
                if (llt.info() == Eigen::Success)
                    denom = sig.dot(llt.solve(sig)).real();
                else
                    denom = sig.dot(hermitian_solve(r_basis, sig)).real();
                if (!(denom > 0.0))
                    throw conditioning_error("reconstruct ipncm: Capon denominator is not positive");
                return (a * a.adjoint()) / denom;
            };

            const Eigen::Index m = geometry.num_sensors;
            CMatrix acc = CMatrix::Zero(m, m);
            GlqRule rule;
            if (method.kind == ReconstructionMethod::Kind::glq)
                rule = (method.glq_order == 3) ? glq_rule_3() : glq_rule(method.glq_order);
            for (const auto &iv : sectors.intervals)
            {
                const double a_rad = deg_to_rad(iv.lo_deg);
                const double b_rad = deg_to_rad(iv.hi_deg);
                if (!(a_rad < b_rad))
                    throw std::domain_error("reconstruct ipncm: interval bounds must satisfy lo < hi");
                if (method.kind == ReconstructionMethod::Kind::glq)
                    acc += glq_integrate_matrix(integrand, a_rad, b_rad, rule);
                else
                    acc += riemann_sum_integrate(integrand, a_rad, b_rad, method.riemann_points);
            }
            return HermitianMatrix(acc);
        }
    }

    // Covariance matrix reconstruction over the interference sector:
    //   sum over intervals of  integral  a(theta) a(theta)^H / (a^H R^{-1} a)  dtheta
    // with theta in radians. Quadrature is applied per interval and summed.
    inline HermitianMatrix reconstruct_ipncm(const HermitianMatrix &r_basis,
                                             const AngularSector &sectors,
                                             const ArrayGeometry &geometry,
                                             const ReconstructionMethod &method)
    {
        return detail::reconstruct_ipncm_impl(r_basis, nullptr, sectors, geometry, method);
    }

    // Reconstruction from a projected quasi-covariance: r_basis was built from
    // data passed through signature_projector, so the spectrum denominator is
    // evaluated with the projected steering vectors.
    inline HermitianMatrix reconstruct_ipncm(const HermitianMatrix &r_basis,
                                             const HermitianMatrix &signature_projector,
                                             const AngularSector &sectors,
                                             const ArrayGeometry &geometry,
                                             const ReconstructionMethod &method)
    {
        if (signature_projector.dim() != r_basis.dim())
            throw std::invalid_argument("reconstruct ipncm: projector dimension mismatch");
        return detail::reconstruct_ipncm_impl(r_basis, &signature_projector.mat(), sectors,
                                              geometry, method);
    }

    // Re-centers each interference range on the Capon peak the data actually
    // shows inside it, standing in for the DOA estimate the ranges are built
    // around in operation. The interference peak is narrow compared to the
    // range, so a low-order quadrature needs the range centered on it; the
    // search costs a two-stage grid scan of the spectrum per interval. Ranges
    // keep their width, are clamped to (-90, 90) and away from the desired
    // sector by guard_deg, and are re-merged if shifts make them touch.
    inline AngularSector recenter_sectors_on_peaks(const HermitianMatrix &r_basis,
                                                   const HermitianMatrix &signature_projector,
                                                   const AngularSector &sectors,
                                                   const ArrayGeometry &geometry,
                                                   double desired_doa_deg, double guard_deg)
    {
        if (sectors.intervals.empty())
            throw std::domain_error("sector recentering: empty sector list");
        Eigen::LLT<CMatrix> llt(r_basis.mat());
        auto spectrum = [&](double theta_deg) {
            CVector sig = signature_projector.mat() * steering_vector(geometry, theta_deg);
            double denom;
            if (llt.info() == Eigen::Success)
                denom = sig.dot(llt.solve(sig)).real();
            else
                denom = sig.dot(hermitian_solve(r_basis, sig)).real();
            if (!(denom > 0.0))
                throw conditioning_error("sector recentering: Capon denominator is not positive");
            return 1.0 / denom;
        };
        auto grid_peak = [&](double lo, double hi, int points) {
            double best_theta = lo, best_power = -1.0;
            for (int i = 0; i <= points; ++i)
            {
                const double theta = lo + (hi - lo) * i / points;
                const double p = spectrum(theta);
                if (p > best_power)
                {
                    best_power = p;
                    best_theta = theta;
                }
            }
            return best_theta;
        };

        AngularSector out;
        out.intervals.reserve(sectors.intervals.size());
        for (const auto &iv : sectors.intervals)
        {
            const double half = 0.5 * (iv.hi_deg - iv.lo_deg);
            const double coarse_step = (iv.hi_deg - iv.lo_deg) / 32.0;
            double peak = grid_peak(iv.lo_deg, iv.hi_deg, 32);
            peak = grid_peak(std::max(iv.lo_deg, peak - coarse_step),
                             std::min(iv.hi_deg, peak + coarse_step), 32);

            AngleInterval moved{peak - half, peak + half};
            if (iv.lo_deg + half >= desired_doa_deg) // range sits above the desired DOA
                moved.lo_deg = std::max(moved.lo_deg, desired_doa_deg + guard_deg);
            else
                moved.hi_deg = std::min(moved.hi_deg, desired_doa_deg - guard_deg);
            moved.lo_deg = std::max(moved.lo_deg, -90.0 + 1e-6);
            moved.hi_deg = std::min(moved.hi_deg, 90.0 - 1e-6);
            out.intervals.push_back(moved.lo_deg < moved.hi_deg ? moved : iv);
        }
        detail::merge_sorted_intervals(out.intervals);
        return out;
    }
}

#endif
