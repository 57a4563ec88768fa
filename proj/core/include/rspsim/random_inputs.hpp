// Copyright 2026 The rspsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <utility>

#include "rspsim/protocol.hpp"
#include "rspsim/rng.hpp"

namespace rspsim {

/**
 * Random valid target for the variant: magnitudes drawn away from zero,
 * normalized and sorted ascending; phases uniform in [0, 2*pi) for the
 * complex variants.
 */
TargetSpec random_target(ProtocolVariant variant, Rng &rng);

/**
 * Random valid channel compatible with the variant. Real variants get
 * positive sorted coefficients (with |a*d| <= |b*c| for two pairs, by
 * rejection); complex variants additionally get uniform phases.
 */
ChannelSpec random_channel(ProtocolVariant variant, Rng &rng);

/// Random symmetric target (all magnitudes equal), where the success
/// probability meets its lower bound exactly.
TargetSpec symmetric_target(ProtocolVariant variant);

std::pair<TargetSpec, ChannelSpec> random_input(ProtocolVariant variant, Rng &rng);

}  // namespace rspsim
