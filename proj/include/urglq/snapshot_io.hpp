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

#ifndef URGLQ_SNAPSHOT_IO_HPP
#define URGLQ_SNAPSHOT_IO_HPP

#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "urglq/array_model.hpp"

namespace urglq
{
    // Recorded snapshot file (".bfsn"):
    //   16-byte header: magic "BFSN", format version u16, sensor count M u16,
    //   snapshot count K u32, reserved u32, all little endian.
    //   Body: K*M complex samples as little-endian float64 (real, imaginary)
    //   pairs, sensor-major within each snapshot.
    inline constexpr char bfsn_magic[4] = {'B', 'F', 'S', 'N'};
    inline constexpr std::uint16_t bfsn_version = 1;
    inline constexpr std::size_t bfsn_header_size = 16;

    namespace detail
    {
        inline void put_u16(std::vector<unsigned char> &buf, std::uint16_t v)
        {
            buf.push_back(static_cast<unsigned char>(v & 0xff));
            buf.push_back(static_cast<unsigned char>(v >> 8));
        }

        inline void put_u32(std::vector<unsigned char> &buf, std::uint32_t v)
        {
            for (int i = 0; i < 4; ++i)
                buf.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xff));
        }

        inline void put_f64(std::vector<unsigned char> &buf, double v)
        {
            std::uint64_t bits;
            std::memcpy(&bits, &v, sizeof(bits));
            for (int i = 0; i < 8; ++i)
                buf.push_back(static_cast<unsigned char>((bits >> (8 * i)) & 0xff));
        }

        inline std::uint16_t get_u16(const unsigned char *p)
        {
            return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
        }

        inline std::uint32_t get_u32(const unsigned char *p)
        {
            return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
                   (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
        }

        inline double get_f64(const unsigned char *p)
        {
            std::uint64_t bits = 0;
            for (int i = 0; i < 8; ++i)
                bits |= static_cast<std::uint64_t>(p[i]) << (8 * i);
            double v;
            std::memcpy(&v, &bits, sizeof(v));
            return v;
        }
    }

    inline void save_recorded_snapshots(const std::string &path, const SnapshotMatrix &snapshots)
    {
        const Eigen::Index m = snapshots.rows();
        const Eigen::Index k = snapshots.cols();
        if (m < 1 || k < 1)
            throw format_error("bfsn: refusing to write an empty snapshot matrix");
        if (m > 0xffff)
            throw format_error("bfsn: sensor count exceeds the format limit of 65535");

        std::vector<unsigned char> buf;
        buf.reserve(bfsn_header_size + static_cast<std::size_t>(m) * k * 16);
        buf.insert(buf.end(), bfsn_magic, bfsn_magic + 4);
        detail::put_u16(buf, bfsn_version);
        detail::put_u16(buf, static_cast<std::uint16_t>(m));
        detail::put_u32(buf, static_cast<std::uint32_t>(k));
        detail::put_u32(buf, 0); // reserved
        for (Eigen::Index col = 0; col < k; ++col)
            for (Eigen::Index row = 0; row < m; ++row)
            {
                detail::put_f64(buf, snapshots(row, col).real());
                detail::put_f64(buf, snapshots(row, col).imag());
            }

        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw format_error("bfsn: cannot open '" + path + "' for writing");
        out.write(reinterpret_cast<const char *>(buf.data()), static_cast<std::streamsize>(buf.size()));
        if (!out)
            throw format_error("bfsn: write to '" + path + "' failed");
    }

    inline SnapshotMatrix load_recorded_snapshots(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw format_error("bfsn: cannot open '" + path + "'");
        std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)),
                                       std::istreambuf_iterator<char>());

        if (buf.size() < bfsn_header_size)
            throw format_error("bfsn: truncated header, expected " +
                               std::to_string(bfsn_header_size) + " bytes, got " +
                               std::to_string(buf.size()));
        if (std::memcmp(buf.data(), bfsn_magic, 4) != 0)
            throw format_error("bfsn: bad magic at byte offset 0, expected 'BFSN'");
        const std::uint16_t version = detail::get_u16(buf.data() + 4);
        if (version != bfsn_version)
            throw format_error("bfsn: unsupported format version " + std::to_string(version) +
                               " at byte offset 4");
        const std::uint16_t m = detail::get_u16(buf.data() + 6);
        const std::uint32_t k = detail::get_u32(buf.data() + 8);
        if (m < 1 || k < 1)
            throw format_error("bfsn: invalid dimensions M=" + std::to_string(m) +
                               ", K=" + std::to_string(k) + " in header");

        const std::size_t expected = bfsn_header_size + static_cast<std::size_t>(m) * k * 16;
        if (buf.size() != expected)
            throw format_error("bfsn: expected " + std::to_string(expected) + " bytes, got " +
                               std::to_string(buf.size()) + " (body starts at byte offset 16)");

        SnapshotMatrix snapshots(m, k);
        const unsigned char *p = buf.data() + bfsn_header_size;
        for (std::uint32_t col = 0; col < k; ++col)
            for (std::uint16_t row = 0; row < m; ++row)
            {
                const double re = detail::get_f64(p);
                const double im = detail::get_f64(p + 8);
                snapshots(row, col) = cplx(re, im);
                p += 16;
            }
        return snapshots;
    }
}

#endif
