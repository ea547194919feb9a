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

#ifndef URGLQ_CONFIG_HPP
#define URGLQ_CONFIG_HPP

#include <fstream>
#include <istream>
#include <sstream>

#include "urglq/scenario.hpp"

namespace urglq
{
    namespace detail
    {
        inline std::string trim(const std::string &s)
        {
            const auto first = s.find_first_not_of(" \t\r\n");
            if (first == std::string::npos)
                return "";
            const auto last = s.find_last_not_of(" \t\r\n");
            return s.substr(first, last - first + 1);
        }

        inline std::vector<std::string> split(const std::string &s, char sep)
        {
            std::vector<std::string> parts;
            std::stringstream ss(s);
            std::string item;
            while (std::getline(ss, item, sep))
                parts.push_back(trim(item));
            return parts;
        }

        inline double parse_double(const std::string &s, const std::string &key)
        {
            try
            {
                std::size_t pos = 0;
                double v = std::stod(s, &pos);
                if (pos != s.size())
                    throw std::invalid_argument("trailing characters");
                return v;
            }
            catch (const std::exception &)
            {
                throw config_error("config: invalid number '" + s + "' for key '" + key + "'");
            }
        }

        inline long long parse_int(const std::string &s, const std::string &key)
        {
            try
            {
                std::size_t pos = 0;
                long long v = std::stoll(s, &pos);
                if (pos != s.size())
                    throw std::invalid_argument("trailing characters");
                return v;
            }
            catch (const std::exception &)
            {
                throw config_error("config: invalid integer '" + s + "' for key '" + key + "'");
            }
        }

        inline MismatchModel parse_mismatch(const std::string &value)
        {
            std::stringstream ss(value);
            std::string kind;
            ss >> kind;
            std::vector<double> args;
            double v;
            while (ss >> v)
                args.push_back(v);
            if (kind == "none" && args.empty())
                return NoMismatch{};
            if (kind == "random_doa" && args.size() == 1)
                return RandomDoaMismatch{args[0]};
            if (kind == "gain_phase" && args.size() == 2)
                return GainPhaseMismatch{args[0], args[1]};
            if (kind == "sv_random_error" && args.size() == 1)
                return SvRandomErrorMismatch{args[0]};
            throw config_error("config: invalid mismatch specification '" + value + "'");
        }

        inline AlphaPolicy parse_alpha_policy(const std::string &value)
        {
            std::stringstream ss(value);
            std::string kind;
            ss >> kind;
            double v;
            bool has_value = static_cast<bool>(ss >> v);
            if (kind == "trace_scaled")
                return has_value ? AlphaPolicy::trace_scaled(v) : AlphaPolicy::trace_scaled();
            if (kind == "fixed")
                return has_value ? AlphaPolicy::fixed(v) : AlphaPolicy::fixed();
            throw config_error("config: invalid alpha policy '" + value + "'");
        }
    }

    // Structured text configuration: one `key = value` per line, `#` starts a
    // comment, lists are comma separated. Keys match the ScenarioConfig field
    // names. Unknown keys are rejected.
    inline ScenarioConfig parse_scenario_config(std::istream &in, ScenarioConfig base = ScenarioConfig{})
    {
        using namespace detail;
        std::string line;
        int line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            const auto hash = line.find('#');
            if (hash != std::string::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw config_error("config line " + std::to_string(line_no) + ": expected 'key = value'");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (value.empty())
                throw config_error("config line " + std::to_string(line_no) + ": empty value for '" + key + "'");

            if (key == "num_sensors")
                base.num_sensors = static_cast<int>(parse_int(value, key));
            else if (key == "spacing")
                base.spacing = parse_double(value, key);
            else if (key == "desired_doa_deg")
                base.desired_doa_deg = parse_double(value, key);
            else if (key == "interference_doas_deg")
            {
                base.interference_doas_deg.clear();
                for (const auto &item : split(value, ','))
                    if (!item.empty())
                        base.interference_doas_deg.push_back(parse_double(item, key));
            }
            else if (key == "inr_db")
                base.inr_db = parse_double(value, key);
            else if (key == "snr_grid_db")
            {
                base.snr_grid_db.clear();
                for (const auto &item : split(value, ','))
                    base.snr_grid_db.push_back(parse_double(item, key));
            }
            else if (key == "snapshot_grid")
            {
                base.snapshot_grid.clear();
                for (const auto &item : split(value, ','))
                    base.snapshot_grid.push_back(static_cast<int>(parse_int(item, key)));
            }
            else if (key == "trials")
                base.trials = static_cast<int>(parse_int(value, key));
            else if (key == "mismatch")
                base.mismatch = parse_mismatch(value);
            else if (key == "methods")
                base.methods = split(value, ',');
            else if (key == "seed")
                base.seed = static_cast<std::uint64_t>(parse_int(value, key));
            else if (key == "riemann_l")
                base.riemann_l = static_cast<int>(parse_int(value, key));
            else if (key == "half_width_deg")
                base.half_width_deg = parse_double(value, key);
            else if (key == "correction")
            {
                if (value == "true" || value == "1")
                    base.correction = true;
                else if (value == "false" || value == "0")
                    base.correction = false;
                else
                    throw config_error("config: invalid boolean '" + value + "' for key 'correction'");
            }
            else if (key == "alpha_policy")
                base.alpha_policy = parse_alpha_policy(value);
            else if (key == "threads")
                base.threads = static_cast<int>(parse_int(value, key));
            else
                throw config_error("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
        return base;
    }

    inline ScenarioConfig load_scenario_config(const std::string &path,
                                               ScenarioConfig base = ScenarioConfig{})
    {
        std::ifstream in(path);
        if (!in)
            throw config_error("config: cannot open '" + path + "'");
        return parse_scenario_config(in, std::move(base));
    }
}

#endif
