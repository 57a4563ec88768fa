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
 * Protocol constructions for probabilistic remote state preparation over
 * partially entangled channels: sender measurement bases, post-measurement
 * collapse patterns, ancilla filtering unitaries, receiver-side recovery
 * operators, and the closed-form success probabilities and lower bounds.
 *
 * Four protocol variants are supported: single- or two-qubit targets, each
 * with real or complex coefficients. The sender's basis depends on both the
 * target state and the channel coefficients; that dependence is what lifts
 * the success probability above basis-agnostic schemes.
 */

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rspsim/statevec.hpp"

namespace rspsim {

enum class ProtocolVariant { Real1Q, Complex1Q, Real2Q, Complex2Q };

enum class ChannelVariant { OnePair, TwoPair };

/// How a sender measurement branch terminates.
enum class BranchMode {
    Direct,    ///< receiver already holds the target (up to a global phase)
    Filtered,  ///< ancilla filtering plus a fixed recovery rotation succeeds
    Fails,     ///< the branch cannot be corrected; its probability is lost
};

const char *to_string(ProtocolVariant variant);
std::optional<ProtocolVariant> parse_variant(const std::string &name);

/**
 * The state to be remotely prepared. Magnitudes are non-negative, sorted
 * ascending and normalized; phases (radians) exist only for the complex
 * variants. The sorted ordering is a protocol assumption, not a convenience:
 * the success-probability bounds depend on it, so validation rejects
 * violations instead of reordering.
 */
struct TargetSpec {
    ProtocolVariant variant;
    std::vector<double> magnitudes;  // alpha, beta [, gamma, delta]
    std::vector<double> phases;      // {} | {phi} | {phi1, phi2, phi3}

    static TargetSpec real_1q(double alpha, double beta);
    static TargetSpec complex_1q(double alpha, double beta, double phi);
    static TargetSpec real_2q(double alpha, double beta, double gamma, double delta);
    static TargetSpec complex_2q(const std::array<double, 4> &magnitudes,
                                 const std::array<double, 3> &phases);

    std::size_t qubit_count() const;
    bool complex_form() const;

    /// Throws std::invalid_argument naming the violated assumption.
    void validate() const;
};

/**
 * Diagonal-form coefficients of the shared entangled resource. One pair of
 * entangled qubits carries a single-qubit target, two pairs carry a
 * two-qubit target. Real-form channels require strictly positive
 * coefficients (the canonical diagonal form); complex-form channels accept
 * any nonzero complex values. Magnitudes must be sorted ascending, and a
 * real two-pair channel additionally needs |a*d| <= |b*c|.
 */
struct ChannelSpec {
    ChannelVariant variant;
    bool real_form;
    std::vector<Amplitude> coefficients;  // a, b [, c, d]

    static ChannelSpec one_pair(double a, double b);
    static ChannelSpec one_pair(Amplitude a, Amplitude b);
    static ChannelSpec two_pair(double a, double b, double c, double d);
    static ChannelSpec two_pair(Amplitude a, Amplitude b, Amplitude c, Amplitude d);

    std::size_t sender_qubits() const;  // 1 or 2
    double magnitude(std::size_t i) const;

    void validate() const;
};

/// Throws std::invalid_argument unless target and channel variants pair up
/// (1-qubit target with one pair, 2-qubit with two) and a real-form target
/// rides on a real-form channel.
void require_compatible(const TargetSpec &target, const ChannelSpec &channel);

/// The target as a normalized state vector (1 or 2 qubits).
StateVector target_state(const TargetSpec &target);

/// The shared resource as a state vector, sender qubits first:
/// a|00> + b|11> on |AB>, or a|0000> + b|0101> + c|1010> + d|1111> on
/// |A1 A2 B1 B2>.
StateVector channel_state(const ChannelSpec &channel);

/// Ordered orthonormal measurement vectors on the sender's qubits.
struct MeasurementBasis {
    std::vector<StateVector> vectors;
};

/// Signed sequence of target magnitudes describing the ideal shape of the
/// receiver's state for one measurement branch, before any correction.
struct PatternVector {
    std::vector<double> entries;
};

/**
 * Diagonal two-outcome filter (f, g) with f_i^2 + g_i^2 = 1. Attached to an
 * ancilla via the block unitary [[F, G], [G, -F]], it passes the state
 * through diag(f) when the ancilla is later found in |0>; at least one
 * f_i equals 1 so the least-distorted component is never attenuated.
 */
struct TwoOutcomeFilter {
    std::vector<double> f;  // pass amplitudes, each in (0, 1]
    std::vector<double> g;  // deflect amplitudes, each in [0, 1)

    /// Builds the filter from pass ratios alone. Throws std::domain_error
    /// if any ratio leaves (0, 1]: such a ratio cannot be realized by a
    /// two-outcome unitary dilation.
    static TwoOutcomeFilter from_pass_ratios(const std::vector<double> &ratios);

    std::size_t size() const { return f.size(); }
};

/// Signed permutation unitary applied by the receiver after a successful
/// ancilla measurement; entries are 0 or +-1 and never depend on the target.
struct RecoveryOp {
    Operator matrix;
};

bool is_signed_permutation(const Operator &op, double tol = kTol);

int branch_count(ProtocolVariant variant);
BranchMode branch_mode(ProtocolVariant variant, int branch);

/**
 * The sender's measurement basis for the given target and channel.
 *
 * For complex channels the first vector conjugates the channel
 * coefficients and counter-rotates the target phases so the projected
 * receiver state is exactly the target; the second vector intentionally
 * uses the unconjugated coefficient -alpha*b in its last component, which
 * is what keeps the pair orthogonal when b is complex.
 */
MeasurementBasis build_basis(const TargetSpec &target, const ChannelSpec &channel);

/// Ideal post-measurement shape for a branch (1-based). Only branch 1
/// exists for complex variants; real variants define all branches.
PatternVector collapse_pattern(const TargetSpec &target, int branch);

/**
 * Minimal-distortion filter turning `collapsed` into a state proportional
 * to `pattern`: with distortions d_i = |collapsed_i| / |pattern_i| (1 where
 * both vanish), f_i = min_j(d_j) / d_i. The distortions of this protocol
 * family only ever depend on the channel, so the receiver can apply the
 * filter without knowing the target.
 */
TwoOutcomeFilter build_filter(const StateVector &collapsed, const PatternVector &pattern);

/**
 * Block unitary [[diag(f), diag(g)], [diag(g), -diag(f)]] on the receiver
 * qubits extended by one ancilla. The ancilla occupies the most significant
 * index so the |0>-ancilla sector is literally the top half of the vector.
 */
Operator filter_unitary(const TwoOutcomeFilter &filter);

/**
 * Fixed recovery rotation for a filtered branch (real variants, branch >= 2).
 * With R = [[0, -1], [1, 0]] and Z = diag(1, -1):
 *   one-qubit branch 2   -> R
 *   two-qubit branch 2   -> Z (x) R
 *   two-qubit branch 3   -> R (x) I
 *   two-qubit branch 4   -> (Z R) (x) R
 * Each maps the branch pattern onto the target for every valid magnitude
 * assignment; the exhaustive search oracle re-derives them in tests.
 */
RecoveryOp recovery_operator(ProtocolVariant variant, int branch);

/**
 * Closed-form total success probability:
 *   real 1q:    a^2 / (b^2 alpha^2 + a^2 beta^2)
 *   complex 1q: |ab|^2 / (|b|^2 alpha^2 + |a|^2 beta^2)
 *   real 2q:    a^2 [c^2 d^2 (a^2+b^2) + a^2 b^2 (c^2+d^2)] /
 *               [c^2 d^2 (b^2 alpha^2 + a^2 beta^2) + a^2 b^2 (d^2 gamma^2 + c^2 delta^2)]
 *   complex 2q: |abcd|^2 / (|bcd alpha|^2 + |acd beta|^2 + |abd gamma|^2 + |abc delta|^2)
 */
double analytic_success(const TargetSpec &target, const ChannelSpec &channel);

struct BoundReport {
    double analytic;
    std::optional<double> bound;  // 2a^2, 2|ab|^2, 4a^2; none for complex 2q
    std::optional<double> ratio;  // analytic / bound, >= 1 on the valid domain
};

BoundReport improvement_bound(const TargetSpec &target, const ChannelSpec &channel);

/// Deliberate deviations from the naive construction, for report output.
std::vector<std::string> correction_notes(ProtocolVariant variant);

/**
 * Execution plan for one measurement branch: everything the engine needs
 * to take a sender outcome to a receiver verdict.
 */
struct BranchPlan {
    int branch = 0;
    BranchMode mode = BranchMode::Direct;
    StateVector basis_vector;
    std::optional<PatternVector> pattern;
    std::optional<TwoOutcomeFilter> filter;
    std::optional<RecoveryOp> recovery;
};

}  // namespace rspsim
