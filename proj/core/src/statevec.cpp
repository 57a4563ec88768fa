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

#include "rspsim/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rspsim {

namespace {

void require_finite(const std::vector<Amplitude> &amps, const char *what) {
    for (const Amplitude &a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument(std::string(what) + " contains a non-finite amplitude");
        }
    }
}

std::size_t checked_dim(std::size_t qubit_count) {
    if (qubit_count == 0 || qubit_count > kMaxQubits) {
        throw std::invalid_argument("qubit count must be between 1 and " +
                                    std::to_string(kMaxQubits));
    }
    return std::size_t{1} << qubit_count;
}

}  // namespace

StateVector::StateVector(std::size_t qubit_count, std::vector<Amplitude> amps)
    : qubit_count_(qubit_count), amps_(std::move(amps)) {
    if (amps_.size() != checked_dim(qubit_count_)) {
        throw std::invalid_argument("amplitude count must be 2^qubit_count");
    }
    require_finite(amps_, "state vector");
}

StateVector StateVector::basis_state(std::size_t qubit_count, std::size_t index) {
    std::vector<Amplitude> amps(checked_dim(qubit_count), Amplitude{0.0, 0.0});
    if (index >= amps.size()) {
        throw std::invalid_argument("basis index out of range");
    }
    amps[index] = Amplitude{1.0, 0.0};
    return StateVector(qubit_count, std::move(amps));
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const Amplitude &a : amps_) total += std::norm(a);
    return total;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

bool StateVector::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
    const double n = norm();
    if (n <= 0.0) {
        throw std::invalid_argument("cannot normalize a zero state vector");
    }
    std::vector<Amplitude> scaled(amps_);
    for (Amplitude &a : scaled) a /= n;
    return StateVector(qubit_count_, std::move(scaled));
}

Operator::Operator(std::size_t dim, std::vector<Amplitude> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0 || entries_.size() != dim_ * dim_) {
        throw std::invalid_argument("operator entries must form a dim x dim grid");
    }
    require_finite(entries_, "operator");
}

Operator Operator::zero(std::size_t dim) {
    return Operator(dim, std::vector<Amplitude>(dim * dim, Amplitude{0.0, 0.0}));
}

Operator Operator::identity(std::size_t dim) {
    Operator id = zero(dim);
    for (std::size_t i = 0; i < dim; ++i) id(i, i) = Amplitude{1.0, 0.0};
    return id;
}

StateVector tensor(const StateVector &u, const StateVector &v) {
    const std::size_t qubits = u.qubit_count() + v.qubit_count();
    if (qubits > kMaxQubits) {
        throw std::invalid_argument("tensor product exceeds the supported register size");
    }
    std::vector<Amplitude> amps(u.dim() * v.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
        for (std::size_t j = 0; j < v.dim(); ++j) {
            amps[i * v.dim() + j] = u[i] * v[j];
        }
    }
    return StateVector(qubits, std::move(amps));
}

Amplitude inner(const StateVector &u, const StateVector &v) {
    if (u.qubit_count() != v.qubit_count()) {
        throw std::invalid_argument("inner product requires equal qubit counts");
    }
    Amplitude sum{0.0, 0.0};
    for (std::size_t i = 0; i < u.dim(); ++i) sum += std::conj(u[i]) * v[i];
    return sum;
}

StateVector apply(const Operator &op, const StateVector &s) {
    if (op.dim() != s.dim()) {
        throw std::invalid_argument("operator dimension does not match the state");
    }
    std::vector<Amplitude> out(op.dim(), Amplitude{0.0, 0.0});
    for (std::size_t r = 0; r < op.dim(); ++r) {
        Amplitude acc{0.0, 0.0};
        for (std::size_t c = 0; c < op.dim(); ++c) acc += op(r, c) * s[c];
        out[r] = acc;
    }
    return StateVector(s.qubit_count(), std::move(out));
}

ProjectionResult project_subsystem(const StateVector &s, const SubsystemMask &mask,
                                   const StateVector &outcome) {
    const std::size_t n = s.qubit_count();
    if (mask.empty() || mask.size() >= n) {
        throw std::invalid_argument("mask must select a strict non-empty subsystem");
    }
    std::vector<bool> selected(n, false);
    for (std::size_t q : mask) {
        if (q >= n) throw std::invalid_argument("mask qubit index out of range");
        if (selected[q]) throw std::invalid_argument("mask qubit indices must be distinct");
        selected[q] = true;
    }
    if (outcome.qubit_count() != mask.size()) {
        throw std::invalid_argument("outcome qubit count must match the mask size");
    }
    if (!outcome.is_normalized(1e-9)) {
        throw std::invalid_argument("projection outcome must be normalized");
    }

    const std::size_t rest = n - mask.size();
    std::vector<Amplitude> residual(std::size_t{1} << rest, Amplitude{0.0, 0.0});
    for (std::size_t idx = 0; idx < s.dim(); ++idx) {
        std::size_t k = 0;  // outcome index, big-endian over mask order
        for (std::size_t q : mask) k = (k << 1) | ((idx >> (n - 1 - q)) & 1u);
        std::size_t j = 0;  // residual index, unmeasured qubits keep their order
        for (std::size_t q = 0; q < n; ++q) {
            if (!selected[q]) j = (j << 1) | ((idx >> (n - 1 - q)) & 1u);
        }
        residual[j] += std::conj(outcome[k]) * s[idx];
    }

    StateVector res(rest, std::move(residual));
    double p = res.norm_squared();
    if (p < kProbabilityFloor) p = 0.0;
    p = std::min(p, 1.0);
    return ProjectionResult{std::move(res), p};
}

double fidelity(const StateVector &u, const StateVector &v) {
    const double f = std::norm(inner(u, v));
    return std::min(f, 1.0);
}

double unitarity_deviation(const Operator &op) {
    const std::size_t d = op.dim();
    double worst = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            Amplitude acc{0.0, 0.0};
            for (std::size_t k = 0; k < d; ++k) acc += op(r, k) * std::conj(op(c, k));
            if (r == c) acc -= Amplitude{1.0, 0.0};
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

}  // namespace rspsim
