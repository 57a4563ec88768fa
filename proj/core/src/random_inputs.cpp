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

#include "rspsim/random_inputs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace rspsim {

namespace {

// Magnitudes are kept away from zero so the generated inputs stay clear of
// the degenerate edges (those get dedicated deterministic tests).
std::vector<double> sorted_unit_magnitudes(std::size_t count, Rng &rng) {
    std::vector<double> m(count);
    double sum = 0.0;
    for (double &x : m) {
        x = rng.uniform(0.1, 1.0);
        sum += x * x;
    }
    const double scale = 1.0 / std::sqrt(sum);
    for (double &x : m) x *= scale;
    std::sort(m.begin(), m.end());
    return m;
}

std::vector<double> random_phases(std::size_t count, Rng &rng) {
    std::vector<double> p(count);
    for (double &x : p) x = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return p;
}

}  // namespace

TargetSpec random_target(ProtocolVariant variant, Rng &rng) {
    switch (variant) {
        case ProtocolVariant::Real1Q: {
            auto m = sorted_unit_magnitudes(2, rng);
            return TargetSpec::real_1q(m[0], m[1]);
        }
        case ProtocolVariant::Complex1Q: {
            auto m = sorted_unit_magnitudes(2, rng);
            auto p = random_phases(1, rng);
            return TargetSpec::complex_1q(m[0], m[1], p[0]);
        }
        case ProtocolVariant::Real2Q: {
            auto m = sorted_unit_magnitudes(4, rng);
            return TargetSpec::real_2q(m[0], m[1], m[2], m[3]);
        }
        case ProtocolVariant::Complex2Q: {
            auto m = sorted_unit_magnitudes(4, rng);
            auto p = random_phases(3, rng);
            return TargetSpec::complex_2q({m[0], m[1], m[2], m[3]}, {p[0], p[1], p[2]});
        }
    }
    throw std::logic_error("unreachable protocol variant");
}

ChannelSpec random_channel(ProtocolVariant variant, Rng &rng) {
    const bool complex_form =
        variant == ProtocolVariant::Complex1Q || variant == ProtocolVariant::Complex2Q;
    const bool two_pair =
        variant == ProtocolVariant::Real2Q || variant == ProtocolVariant::Complex2Q;

    std::vector<double> m;
    for (;;) {
        m = sorted_unit_magnitudes(two_pair ? 4 : 2, rng);
        // The two-pair protocols assume |a*d| <= |b*c|; resample otherwise.
        if (!two_pair || variant == ProtocolVariant::Complex2Q || m[0] * m[3] <= m[1] * m[2]) {
            break;
        }
    }

    if (!complex_form) {
        return two_pair ? ChannelSpec::two_pair(m[0], m[1], m[2], m[3])
                        : ChannelSpec::one_pair(m[0], m[1]);
    }
    const auto phases = random_phases(m.size(), rng);
    std::vector<Amplitude> coeff(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) coeff[i] = std::polar(m[i], phases[i]);
    return two_pair ? ChannelSpec::two_pair(coeff[0], coeff[1], coeff[2], coeff[3])
                    : ChannelSpec::one_pair(coeff[0], coeff[1]);
}

TargetSpec symmetric_target(ProtocolVariant variant) {
    const double half = 0.5;
    const double isq2 = 1.0 / std::numbers::sqrt2;
    switch (variant) {
        case ProtocolVariant::Real1Q: return TargetSpec::real_1q(isq2, isq2);
        case ProtocolVariant::Complex1Q: return TargetSpec::complex_1q(isq2, isq2, 0.9);
        case ProtocolVariant::Real2Q: return TargetSpec::real_2q(half, half, half, half);
        case ProtocolVariant::Complex2Q:
            return TargetSpec::complex_2q({half, half, half, half}, {0.4, 1.3, 2.2});
    }
    throw std::logic_error("unreachable protocol variant");
}

std::pair<TargetSpec, ChannelSpec> random_input(ProtocolVariant variant, Rng &rng) {
    return {random_target(variant, rng), random_channel(variant, rng)};
}

}  // namespace rspsim
