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

#ifndef URGLQ_CSV_HPP
#define URGLQ_CSV_HPP

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "urglq/scenario.hpp"

namespace urglq
{
    namespace detail
    {
        // %.17g round-trips doubles exactly, which keeps exports byte
        // reproducible and parseable without loss.
        inline std::string format_double(double v)
        {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            return buf;
        }
    }

    inline constexpr const char *trials_csv_header =
        "method,snr_db,snapshots,trial,sinr_db,deviation_db,seed";
    inline constexpr const char *aggregates_csv_header =
        "method,snr_db,snapshots,mean_sinr_db,std_sinr_db";

    inline void export_trials_csv(const std::vector<TrialResult> &results, std::ostream &out)
    {
        out << trials_csv_header << "\n";
        for (const auto &r : results)
            out << r.method << ',' << detail::format_double(r.snr_db) << ',' << r.snapshots << ','
                << r.trial << ',' << detail::format_double(r.sinr_db) << ','
                << detail::format_double(r.deviation_db) << ',' << r.seed << "\n";
    }

    inline void export_aggregates_csv(const std::vector<AggregateRow> &rows, std::ostream &out)
    {
        out << aggregates_csv_header << "\n";
        for (const auto &r : rows)
            out << r.method << ',' << detail::format_double(r.snr_db) << ',' << r.snapshots << ','
                << detail::format_double(r.mean_sinr_db) << ','
                << detail::format_double(r.std_sinr_db) << "\n";
    }

    inline void export_glq_compare_csv(const std::vector<GlqCompareRow> &rows, std::ostream &out)
    {
        out << "l,method,mean_sinr_db\n";
        for (const auto &r : rows)
            out << r.l << ',' << r.method << ',' << detail::format_double(r.mean_sinr_db) << "\n";
    }

    inline void export_beampattern_csv(const std::vector<std::pair<double, double>> &pattern,
                                       std::ostream &out)
    {
        out << "angle_deg,power_db\n";
        for (const auto &p : pattern)
            out << detail::format_double(p.first) << ',' << detail::format_double(p.second) << "\n";
    }

    template <typename Exporter>
    inline void write_csv_file(const std::string &path, Exporter &&exporter)
    {
        std::ofstream out(path, std::ios::binary); // LF line endings everywhere
        if (!out)
            throw format_error("csv: cannot open '" + path + "' for writing");
        exporter(out);
        if (!out)
            throw format_error("csv: write to '" + path + "' failed");
    }

    // Parses a file produced by export_trials_csv; used for round trips.
    inline std::vector<TrialResult> parse_trials_csv(std::istream &in)
    {
        std::string line;
        if (!std::getline(in, line) || line != trials_csv_header)
            throw format_error("csv: missing or unexpected header");
        std::vector<TrialResult> results;
        int line_no = 1;
        while (std::getline(in, line))
        {
            ++line_no;
            if (line.empty())
                continue;
            std::stringstream ss(line);
            std::string field;
            std::vector<std::string> fields;
            while (std::getline(ss, field, ','))
                fields.push_back(field);
            if (fields.size() != 7)
                throw format_error("csv line " + std::to_string(line_no) + ": expected 7 fields");
            TrialResult r;
            try
            {
                r.method = fields[0];
                r.snr_db = std::stod(fields[1]);
                r.snapshots = std::stoi(fields[2]);
                r.trial = std::stoi(fields[3]);
                r.sinr_db = std::stod(fields[4]);
                r.deviation_db = std::stod(fields[5]);
                r.seed = std::stoull(fields[6]);
            }
            catch (const std::exception &)
            {
                throw format_error("csv line " + std::to_string(line_no) + ": malformed field");
            }
            results.push_back(std::move(r));
        }
        return results;
    }
}

#endif
