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

#include "rspsim/engine.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rspsim/rng.hpp"

namespace rspsim {

ProtocolReport run_exact(const TargetSpec &target, const ChannelSpec &channel) {
    require_compatible(target, channel);
    const MeasurementBasis basis = build_basis(target, channel);
    const StateVector joint = channel_state(channel);
    const StateVector wanted = target_state(target);

    SubsystemMask sender_mask(channel.sender_qubits());
    std::iota(sender_mask.begin(), sender_mask.end(), std::size_t{0});
    const StateVector ancilla_zero = StateVector::basis_state(1, 0);

    ProtocolReport report;
    report.variant = target.variant;
    double total = 0.0;

    for (int branch = 1; branch <= branch_count(target.variant); ++branch) {
        const StateVector &vector = basis.vectors[static_cast<std::size_t>(branch - 1)];
        auto [residual, probability] = project_subsystem(joint, sender_mask, vector);

        BranchResult result;
        result.branch = branch;
        result.mode = branch_mode(target.variant, branch);

        result.measurement_probability = probability;
        switch (result.mode) {
            case BranchMode::Direct: {
                result.ancilla_pass_probability = 1.0;
                result.success_contribution = probability;
                if (probability > 0.0) {
                    result.final_state = residual.normalized();
                    result.fidelity = fidelity(*result.final_state, wanted);
                }
                break;
            }
            case BranchMode::Fails: {
                result.ancilla_pass_probability = 0.0;
                result.success_contribution = 0.0;
                break;
            }
            case BranchMode::Filtered: {
                const PatternVector pattern = collapse_pattern(target, branch);
                const TwoOutcomeFilter filter = build_filter(residual, pattern);
                const Operator block = filter_unitary(filter);
                // Ancilla goes in front so the |0>-ancilla sector is the top
                // half of the extended vector and `block` applies verbatim.
                const StateVector extended = tensor(ancilla_zero, residual.normalized());
                const StateVector filtered = apply(block, extended);
                auto [kept, pass] = project_subsystem(filtered, {0}, ancilla_zero);
                result.ancilla_pass_probability = pass;
                result.success_contribution = probability * pass;
                if (pass > 0.0) {
                    result.recovery = recovery_operator(target.variant, branch);
                    result.final_state = apply(result.recovery->matrix, kept.normalized());
                    result.fidelity = fidelity(*result.final_state, wanted);
                }
                break;
            }
        }
        total += result.success_contribution;
        report.branches.push_back(std::move(result));
    }

    report.total_success = total;
    const BoundReport bounds = improvement_bound(target, channel);
    report.analytic_success = bounds.analytic;
    report.bound = bounds.bound;
    report.ratio = bounds.ratio;
    report.notes = correction_notes(target.variant);
    return report;
}

TrialStats sample(const TargetSpec &target, const ChannelSpec &channel, std::uint64_t trials,
                  std::uint64_t seed) {
    if (trials == 0) {
        throw std::invalid_argument("sampling requires at least one trial");
    }
    const ProtocolReport law = run_exact(target, channel);

    std::vector<double> cumulative;
    std::vector<double> pass;
    double running = 0.0;
    for (const BranchResult &b : law.branches) {
        running += b.measurement_probability;
        cumulative.push_back(running);
        pass.push_back(b.ancilla_pass_probability);
    }

    Rng rng(seed);
    std::uint64_t successes = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const double u_branch = rng.uniform();
        std::size_t pick = cumulative.size() - 1;
        for (std::size_t i = 0; i < cumulative.size(); ++i) {
            if (u_branch < cumulative[i]) {
                pick = i;
                break;
            }
        }
        const double u_ancilla = rng.uniform();
        if (u_ancilla < pass[pick]) ++successes;
    }

    TrialStats stats;
    stats.trials = trials;
    stats.successes = successes;
    stats.estimate = static_cast<double>(successes) / static_cast<double>(trials);
    stats.std_error =
        std::sqrt(stats.estimate * (1.0 - stats.estimate) / static_cast<double>(trials));
    stats.seed = seed;
    stats.rng = kRngAlgorithm;
    return stats;
}

}  // namespace rspsim
