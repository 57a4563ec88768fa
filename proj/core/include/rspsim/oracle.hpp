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
 * Independent verification paths that never touch the closed forms or the
 * engine's subsystem arithmetic. Every probability here is the squared norm
 * of an explicit full-space matrix applied to the joint state, with the
 * ancilla kept as the least significant qubit — deliberately the opposite
 * layout from the engine, so agreement between the two is meaningful.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rspsim/protocol.hpp"
#include "rspsim/statevec.hpp"

namespace rspsim {

struct OracleBranch {
    int branch = 0;
    double measurement_probability = 0.0;
    double ancilla_pass_probability = 0.0;
    double success_contribution = 0.0;
    std::optional<double> fidelity;
};

struct OracleCheck {
    std::string name;
    double deviation = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct OracleReport {
    std::vector<OracleBranch> branches;
    double total_success = 0.0;
    double max_gram_deviation = 0.0;
    double max_unitarity_deviation = 0.0;
    double completeness_deviation = 0.0;  // |sum of branch probabilities - 1|
    std::vector<OracleCheck> checks;

    bool all_checks_pass() const;
};

/**
 * Full Born-rule enumeration on the joint state (channel tensor ancilla).
 * Projectors, filter dilations and recovery rotations are embedded as
 * explicit matrices on the whole register and every probability is read off
 * as a squared norm. The report carries structural audits (orthonormality,
 * resolution of identity, unitarity, completeness, fidelity, recovery
 * search, channel reconstruction) as named pass/fail checks.
 */
OracleReport born_enumerate(const TargetSpec &target, const ChannelSpec &channel);

/// max |<v_i|v_j> - delta_ij| over all basis vector pairs.
double gram_check(const MeasurementBasis &basis);

/**
 * Exhaustive search over signed permutation matrices (8 candidates for a
 * 1-qubit pattern, 384 for 2 qubits) for one mapping the normalized pattern
 * onto the target with fidelity >= 1 - 1e-12. Candidates are enumerated in
 * a fixed order, so the result is deterministic. Throws std::runtime_error
 * if none qualifies: that would mean the branch cannot be corrected at all.
 */
RecoveryOp pauli_recovery_search(const PatternVector &pattern, const TargetSpec &target);

}  // namespace rspsim
