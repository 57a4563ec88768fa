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
 * Dense exact state-vector algebra for small registers (at most 5 qubits):
 * tensor products, inner products, operator application, subsystem
 * projection and fidelity.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace rspsim {

using Amplitude = std::complex<double>;

/// Generic numeric tolerance used for normalization, orthogonality and
/// unitarity checks throughout the library.
inline constexpr double kTol = 1e-12;

/// Probabilities below this are treated as exact zeros.
inline constexpr double kProbabilityFloor = 1e-15;

/// Hard cap on register size; everything here is dense and exact.
inline constexpr std::size_t kMaxQubits = 5;

/**
 * Normalized (or explicitly unnormalized) pure state on a small register.
 *
 * Basis ordering is big-endian: qubit 0 is the most significant bit of the
 * amplitude index, so |q0 q1 ... q_{n-1}> lives at index
 * q0*2^{n-1} + ... + q_{n-1}.
 */
class StateVector {
  public:
    StateVector(std::size_t qubit_count, std::vector<Amplitude> amps);

    /// Computational basis state |index> on `qubit_count` qubits.
    static StateVector basis_state(std::size_t qubit_count, std::size_t index);

    std::size_t qubit_count() const { return qubit_count_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<Amplitude> &amps() const { return amps_; }
    const Amplitude &operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const;
    double norm() const;
    bool is_normalized(double tol = kTol) const;

    /// Unit-norm copy. Throws std::invalid_argument on a zero vector.
    StateVector normalized() const;

  private:
    std::size_t qubit_count_;
    std::vector<Amplitude> amps_;
};

/// Dense square matrix acting on a full register, row-major.
class Operator {
  public:
    Operator(std::size_t dim, std::vector<Amplitude> entries);

    static Operator zero(std::size_t dim);
    static Operator identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const Amplitude &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    Amplitude &operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    const std::vector<Amplitude> &entries() const { return entries_; }

  private:
    std::size_t dim_;
    std::vector<Amplitude> entries_;
};

/// Ordered qubit indices selecting the measured subsystem of a state.
using SubsystemMask = std::vector<std::size_t>;

struct ProjectionResult {
    StateVector residual;  // unnormalized post-measurement state of the rest
    double probability;    // squared norm of the residual, clamped to [0, 1]
};

/// Kronecker product; u's qubits become the most significant block.
StateVector tensor(const StateVector &u, const StateVector &v);

/// <u|v> with the conjugate on the left argument.
Amplitude inner(const StateVector &u, const StateVector &v);

/// Matrix-vector product op * s. Dimensions must agree.
StateVector apply(const Operator &op, const StateVector &s);

/**
 * Project the qubits in `mask` onto `outcome` (a normalized state on
 * |mask| qubits; outcome qubit r corresponds to mask[r]).
 *
 * residual_j = sum_k conj(outcome_k) * s_{(k on mask, j elsewhere)}, with
 * the unmeasured qubits keeping their relative order.
 */
ProjectionResult project_subsystem(const StateVector &s, const SubsystemMask &mask,
                                   const StateVector &outcome);

/// |<u|v>|^2 for normalized states; invariant under global phases.
double fidelity(const StateVector &u, const StateVector &v);

/// max_ij |(U U^dag - I)_ij|; zero for an exactly unitary matrix.
double unitarity_deviation(const Operator &op);

}  // namespace rspsim
