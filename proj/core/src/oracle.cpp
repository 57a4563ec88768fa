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

#include "rspsim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rspsim {

namespace {

constexpr double kFidelityFloor = 1.0 - kTol;

// |v><v| on the sender qubits, identity on everything after them.
Operator sender_projector(const StateVector &v, std::size_t rest_dim) {
    const std::size_t dim = v.dim() * rest_dim;
    Operator p = Operator::zero(dim);
    for (std::size_t i = 0; i < v.dim(); ++i) {
        for (std::size_t j = 0; j < v.dim(); ++j) {
            const Amplitude e = v[i] * std::conj(v[j]);
            for (std::size_t r = 0; r < rest_dim; ++r) {
                p(i * rest_dim + r, j * rest_dim + r) = e;
            }
        }
    }
    return p;
}

// Identity on the sender, the filter's block unitary on (receiver, ancilla)
// with the ancilla as the least significant qubit.
Operator embed_receiver_filter(const TwoOutcomeFilter &filter, std::size_t sender_dim) {
    const std::size_t n = filter.size();
    Operator u = Operator::zero(sender_dim * n * 2);
    for (std::size_t s = 0; s < sender_dim; ++s) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t base = (s * n + j) * 2;
            u(base + 0, base + 0) = Amplitude{filter.f[j], 0.0};
            u(base + 0, base + 1) = Amplitude{filter.g[j], 0.0};
            u(base + 1, base + 0) = Amplitude{filter.g[j], 0.0};
            u(base + 1, base + 1) = Amplitude{-filter.f[j], 0.0};
        }
    }
    return u;
}

// Identity on sender and ancilla, `r` on the receiver qubits in between.
Operator embed_receiver_recovery(const Operator &r, std::size_t sender_dim) {
    const std::size_t n = r.dim();
    Operator u = Operator::zero(sender_dim * n * 2);
    for (std::size_t s = 0; s < sender_dim; ++s) {
        for (std::size_t row = 0; row < n; ++row) {
            for (std::size_t col = 0; col < n; ++col) {
                for (std::size_t b = 0; b < 2; ++b) {
                    u((s * n + row) * 2 + b, (s * n + col) * 2 + b) = r(row, col);
                }
            }
        }
    }
    return u;
}

// |outcome><outcome| on the trailing ancilla qubit.
Operator ancilla_projector(std::size_t full_dim, std::size_t outcome) {
    Operator p = Operator::zero(full_dim);
    for (std::size_t i = 0; i < full_dim; ++i) {
        if ((i & 1u) == outcome) p(i, i) = Amplitude{1.0, 0.0};
    }
    return p;
}

double resolution_of_identity_deviation(const MeasurementBasis &basis) {
    const std::size_t dim = basis.vectors.front().dim();
    double worst = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            Amplitude acc{0.0, 0.0};
            for (const StateVector &v : basis.vectors) acc += v[r] * std::conj(v[c]);
            if (r == c) acc -= Amplitude{1.0, 0.0};
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

}  // namespace

bool OracleReport::all_checks_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const OracleCheck &c) { return c.pass; });
}

double gram_check(const MeasurementBasis &basis) {
    if (basis.vectors.empty()) {
        throw std::invalid_argument("gram check requires a non-empty basis");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
        for (std::size_t j = 0; j < basis.vectors.size(); ++j) {
            Amplitude overlap = inner(basis.vectors[i], basis.vectors[j]);
            if (i == j) overlap -= Amplitude{1.0, 0.0};
            worst = std::max(worst, std::abs(overlap));
        }
    }
    return worst;
}

RecoveryOp pauli_recovery_search(const PatternVector &pattern, const TargetSpec &target) {
    if (target.complex_form()) {
        throw std::invalid_argument("signed permutation search applies to real-form targets");
    }
    const StateVector wanted = target_state(target);
    const std::size_t n = pattern.entries.size();
    if (n != wanted.dim()) {
        throw std::invalid_argument("pattern length must match the target dimension");
    }
    double norm2 = 0.0;
    for (double e : pattern.entries) norm2 += e * e;
    if (norm2 <= 0.0) throw std::invalid_argument("pattern must be nonzero");
    const double inv_norm = 1.0 / std::sqrt(norm2);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        for (std::size_t signs = 0; signs < (std::size_t{1} << n); ++signs) {
            // Candidate maps component j to row perm[j] with sign (-1)^bit_j.
            Amplitude overlap{0.0, 0.0};
            for (std::size_t j = 0; j < n; ++j) {
                const double s = (signs >> j) & 1u ? -1.0 : 1.0;
                overlap += std::conj(wanted[perm[j]]) * (s * pattern.entries[j] * inv_norm);
            }
            if (std::norm(overlap) >= kFidelityFloor) {
                Operator op = Operator::zero(n);
                for (std::size_t j = 0; j < n; ++j) {
                    op(perm[j], j) = Amplitude{(signs >> j) & 1u ? -1.0 : 1.0, 0.0};
                }
                return RecoveryOp{std::move(op)};
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw std::runtime_error(
        "no signed permutation maps the pattern onto the target: branch cannot be corrected");
}

OracleReport born_enumerate(const TargetSpec &target, const ChannelSpec &channel) {
    require_compatible(target, channel);
    const MeasurementBasis basis = build_basis(target, channel);
    const StateVector wanted = target_state(target);
    const std::size_t sender_dim = std::size_t{1} << channel.sender_qubits();
    const std::size_t receiver_dim = sender_dim;  // mirrored register sizes
    const StateVector ancilla_zero = StateVector::basis_state(1, 0);

    // Joint register layout: sender qubits, receiver qubits, ancilla (last).
    const StateVector joint = tensor(channel_state(channel), ancilla_zero);
    const std::size_t full_dim = joint.dim();

    OracleReport report;
    double total = 0.0;
    double probability_sum = 0.0;
    double min_fidelity = 1.0;
    double max_unitarity = 0.0;
    double reconstruction_dev = 0.0;
    std::vector<Amplitude> rebuilt(sender_dim * receiver_dim, Amplitude{0.0, 0.0});
    double recovery_dev = 0.0;
    bool searched_recovery = false;

    for (int branch = 1; branch <= branch_count(target.variant); ++branch) {
        const StateVector &vector = basis.vectors[static_cast<std::size_t>(branch - 1)];
        const Operator projector = sender_projector(vector, receiver_dim * 2);
        const StateVector projected = apply(projector, joint);
        double p = projected.norm_squared();
        if (p < kProbabilityFloor) p = 0.0;

        // Receiver amplitudes for this branch, read off with full-space
        // inner products against |v> (x) |j> (x) |0>.
        std::vector<Amplitude> residual(receiver_dim);
        for (std::size_t j = 0; j < receiver_dim; ++j) {
            const StateVector probe = tensor(
                tensor(vector, StateVector::basis_state(channel.sender_qubits(), j)),
                ancilla_zero);
            residual[j] = inner(probe, projected);
        }
        for (std::size_t i = 0; i < sender_dim; ++i) {
            for (std::size_t j = 0; j < receiver_dim; ++j) {
                rebuilt[i * receiver_dim + j] += vector[i] * residual[j];
            }
        }

        OracleBranch ob;
        ob.branch = branch;
        ob.measurement_probability = p;
        probability_sum += p;

        switch (branch_mode(target.variant, branch)) {
            case BranchMode::Direct: {
                ob.ancilla_pass_probability = 1.0;
                ob.success_contribution = p;
                if (p > 0.0) {
                    const StateVector ref = tensor(tensor(vector, wanted), ancilla_zero);
                    ob.fidelity = std::norm(inner(ref, projected)) / p;
                    min_fidelity = std::min(min_fidelity, *ob.fidelity);
                }
                break;
            }
            case BranchMode::Fails: {
                ob.ancilla_pass_probability = 0.0;
                ob.success_contribution = 0.0;
                break;
            }
            case BranchMode::Filtered: {
                const PatternVector pattern = collapse_pattern(target, branch);
                const TwoOutcomeFilter filter =
                    build_filter(StateVector(channel.sender_qubits(), residual), pattern);
                max_unitarity = std::max(max_unitarity, unitarity_deviation(filter_unitary(filter)));

                const Operator dilation = embed_receiver_filter(filter, sender_dim);
                const StateVector filtered = apply(dilation, projected);
                const StateVector kept = apply(ancilla_projector(full_dim, 0), filtered);
                double p_keep = kept.norm_squared();
                if (p_keep < kProbabilityFloor) p_keep = 0.0;
                ob.ancilla_pass_probability = p > 0.0 ? p_keep / p : 0.0;
                ob.success_contribution = p_keep;

                const RecoveryOp recovery = recovery_operator(target.variant, branch);
                max_unitarity = std::max(max_unitarity, unitarity_deviation(recovery.matrix));
                if (p_keep > 0.0) {
                    const StateVector corrected =
                        apply(embed_receiver_recovery(recovery.matrix, sender_dim), kept);
                    const StateVector ref = tensor(tensor(vector, wanted), ancilla_zero);
                    ob.fidelity = std::norm(inner(ref, corrected)) / corrected.norm_squared();
                    min_fidelity = std::min(min_fidelity, *ob.fidelity);
                }

                searched_recovery = true;
                const RecoveryOp found = pauli_recovery_search(pattern, target);
                std::vector<Amplitude> shape_amps;
                for (double e : pattern.entries) shape_amps.push_back(Amplitude{e, 0.0});
                const StateVector shaped(target.qubit_count(), std::move(shape_amps));
                const double frozen_fid =
                    fidelity(apply(recovery.matrix, shaped.normalized()), wanted);
                const double found_fid =
                    fidelity(apply(found.matrix, shaped.normalized()), wanted);
                recovery_dev = std::max(recovery_dev,
                                        std::max(1.0 - frozen_fid, 1.0 - found_fid));
                break;
            }
        }
        total += ob.success_contribution;
        report.branches.push_back(ob);
    }

    const StateVector original = channel_state(channel);
    for (std::size_t i = 0; i < rebuilt.size(); ++i) {
        reconstruction_dev = std::max(reconstruction_dev, std::abs(rebuilt[i] - original[i]));
    }

    report.total_success = total;
    report.max_gram_deviation = gram_check(basis);
    report.max_unitarity_deviation = max_unitarity;
    report.completeness_deviation = std::abs(probability_sum - 1.0);

    auto add_check = [&](const std::string &name, double deviation, double threshold) {
        report.checks.push_back(OracleCheck{name, deviation, threshold, deviation <= threshold});
    };
    add_check("basis-orthonormality", report.max_gram_deviation, kTol);
    add_check("resolution-of-identity", resolution_of_identity_deviation(basis), kTol);
    add_check("branch-probability-completeness", report.completeness_deviation, kTol);
    add_check("success-branch-fidelity", std::max(0.0, 1.0 - min_fidelity), kTol);
    add_check("channel-reconstruction", reconstruction_dev, kTol);
    if (searched_recovery) {
        add_check("filter-unitarity", max_unitarity, kTol);
        add_check("recovery-operators", recovery_dev, kTol);
    }
    return report;
}

}  // namespace rspsim
