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

#ifndef URGLQ_RNG_HPP
#define URGLQ_RNG_HPP

#include <cstdint>
#include <random>

#include "urglq/common.hpp"

namespace urglq
{
    // SplitMix64 mixing step, used to derive independent substream seeds.
    inline std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Deterministic random stream. Uniform and Gaussian draws are generated
    // from the raw 64-bit engine output (Box-Muller for normals) so that a
    // given seed reproduces the same values on every standard library.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : engine_(seed), stream_seed_(seed) {}

        // Independent substream for (master seed, id); trials derived this way
        // can run in any order or in parallel without affecting each other.
        static Rng derive(std::uint64_t master, std::uint64_t id)
        {
            std::uint64_t s = splitmix64(master);
            s = splitmix64(s ^ id);
            return Rng(s);
        }

        std::uint64_t stream_seed() const { return stream_seed_; }

        // Uniform on [0, 1).
        double uniform()
        {
            return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        }

        double uniform(double lo, double hi)
        {
            return lo + (hi - lo) * uniform();
        }

        // Standard normal via Box-Muller; pairs are cached so one call
        // consumes either zero or two engine outputs.
        double normal()
        {
            if (have_spare_)
            {
                have_spare_ = false;
                return spare_;
            }
            double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; // (0, 1]
            double u2 = uniform();
            double r = std::sqrt(-2.0 * std::log(u1));
            double c = std::cos(2.0 * pi * u2);
            double s = std::sin(2.0 * pi * u2);
            spare_ = r * s;
            have_spare_ = true;
            return r * c;
        }

        // Circularly symmetric complex Gaussian with E{|z|^2} = variance.
        cplx circular_normal(double variance = 1.0)
        {
            double s = std::sqrt(variance / 2.0);
            double re = normal();
            double im = normal();
            return cplx(s * re, s * im);
        }

    private:
        std::mt19937_64 engine_;
        std::uint64_t stream_seed_;
        bool have_spare_ = false;
        double spare_ = 0.0;
    };
}

#endif
