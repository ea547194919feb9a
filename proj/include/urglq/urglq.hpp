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

#ifndef URGLQ_URGLQ_HPP
#define URGLQ_URGLQ_HPP

#include "urglq/array_model.hpp"
#include "urglq/beamformer.hpp"
#include "urglq/common.hpp"
#include "urglq/config.hpp"
#include "urglq/covariance.hpp"
#include "urglq/csv.hpp"
#include "urglq/metrics.hpp"
#include "urglq/quadrature.hpp"
#include "urglq/reconstruction.hpp"
#include "urglq/rng.hpp"
#include "urglq/scenario.hpp"
#include "urglq/signal_removal.hpp"
#include "urglq/snapshot_io.hpp"
#include "urglq/steering_correction.hpp"

#endif
