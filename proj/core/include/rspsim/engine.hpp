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

/**
 * @file
 * Protocol execution: exact enumeration of every measurement branch
 * (projection, ancilla filtering, ancilla measurement, recovery, fidelity)
 * and seeded Monte Carlo trajectory sampling against the exact law.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rspsim/protocol.hpp"
#include "rspsim/statevec.hpp"

namespace rspsim {

/// Outcome of one sender measurement branch under exact evolution.
struct BranchResult {
    int branch = 0;
    BranchMode mode = BranchMode::Direct;
    double measurement_probability = 0.0;
    /// Probability that the receiver's ancilla lands in |0> given this
    /// branch: 1 for direct branches, 0 for uncorrectable ones.
    double ancilla_pass_probability = 0.0;
    double success_contribution = 0.0;
    std::optional<StateVector> final_state;
    std::optional<double> fidelity;
    std::optional<RecoveryOp> recovery;
};

struct ProtocolReport {
    ProtocolVariant variant = ProtocolVariant::Real1Q;
    std::vector<BranchResult> branches;
    double total_success = 0.0;
    double analytic_success = 0.0;
    std::optional<double> bound;
    std::optional<double> ratio;
    std::vector<std::string> notes;
};

/**
 * Enumerates every sender outcome exactly. Filtered branches append a |0>
 * ancilla (most significant position), apply the block filter unitary,
 * project the ancilla onto |0> (a |1> outcome aborts the branch) and rotate
 * with the branch's fixed recovery operator. The summed success
 * contributions reproduce the closed form to machine precision.
 */
ProtocolReport run_exact(const TargetSpec &target, const ChannelSpec &channel);

struct TrialStats {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double estimate = 0.0;
    double std_error = 0.0;  // sqrt(p(1-p)/N) at the estimate
    std::uint64_t seed = 0;
    std::string rng;  // sampling algorithm identifier
};

/**
 * Samples `trials` protocol runs: each trial draws the sender branch by its
 * exact probability, then the ancilla outcome by its exact conditional
 * probability. Two uniform draws per trial, so identical (seed, trials,
 * inputs) give identical statistics.
 */
TrialStats sample(const TargetSpec &target, const ChannelSpec &channel, std::uint64_t trials,
                  std::uint64_t seed);

}  // namespace rspsim
