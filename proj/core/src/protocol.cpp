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

#include "rspsim/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace rspsim {

namespace {

constexpr Amplitude kZero{0.0, 0.0};

Amplitude phase_factor(double radians) {
    return Amplitude{std::cos(radians), std::sin(radians)};
}

double squared(double x) { return x * x; }

void check_magnitude_vector(const std::vector<double> &mags, const char *ordering_msg) {
    double sum = 0.0;
    for (double m : mags) {
        if (!std::isfinite(m) || m < 0.0) {
            throw std::invalid_argument("target magnitudes must be finite and non-negative");
        }
        sum += m * m;
    }
    if (std::abs(sum - 1.0) > kTol) {
        throw std::invalid_argument("target magnitudes must satisfy sum of squares = 1");
    }
    for (std::size_t i = 0; i + 1 < mags.size(); ++i) {
        if (mags[i] > mags[i + 1] + kTol) {
            throw std::invalid_argument(ordering_msg);
        }
    }
}

}  // namespace

const char *to_string(ProtocolVariant variant) {
    switch (variant) {
        case ProtocolVariant::Real1Q: return "real-1q";
        case ProtocolVariant::Complex1Q: return "complex-1q";
        case ProtocolVariant::Real2Q: return "real-2q";
        case ProtocolVariant::Complex2Q: return "complex-2q";
    }
    return "unknown";
}

std::optional<ProtocolVariant> parse_variant(const std::string &name) {
    if (name == "real-1q") return ProtocolVariant::Real1Q;
    if (name == "complex-1q") return ProtocolVariant::Complex1Q;
    if (name == "real-2q") return ProtocolVariant::Real2Q;
    if (name == "complex-2q") return ProtocolVariant::Complex2Q;
    return std::nullopt;
}

TargetSpec TargetSpec::real_1q(double alpha, double beta) {
    TargetSpec t{ProtocolVariant::Real1Q, {alpha, beta}, {}};
    t.validate();
    return t;
}

TargetSpec TargetSpec::complex_1q(double alpha, double beta, double phi) {
    TargetSpec t{ProtocolVariant::Complex1Q, {alpha, beta}, {phi}};
    t.validate();
    return t;
}

TargetSpec TargetSpec::real_2q(double alpha, double beta, double gamma, double delta) {
    TargetSpec t{ProtocolVariant::Real2Q, {alpha, beta, gamma, delta}, {}};
    t.validate();
    return t;
}

TargetSpec TargetSpec::complex_2q(const std::array<double, 4> &magnitudes,
                                  const std::array<double, 3> &phases) {
    TargetSpec t{ProtocolVariant::Complex2Q,
                 {magnitudes.begin(), magnitudes.end()},
                 {phases.begin(), phases.end()}};
    t.validate();
    return t;
}

std::size_t TargetSpec::qubit_count() const {
    return (variant == ProtocolVariant::Real1Q || variant == ProtocolVariant::Complex1Q) ? 1 : 2;
}

bool TargetSpec::complex_form() const {
    return variant == ProtocolVariant::Complex1Q || variant == ProtocolVariant::Complex2Q;
}

void TargetSpec::validate() const {
    const std::size_t want_mags = qubit_count() == 1 ? 2 : 4;
    const std::size_t want_phases = complex_form() ? want_mags - 1 : 0;
    if (magnitudes.size() != want_mags) {
        throw std::invalid_argument("target magnitude count does not match the protocol variant");
    }
    if (phases.size() != want_phases) {
        throw std::invalid_argument("target phase count does not match the protocol variant");
    }
    for (double p : phases) {
        if (!std::isfinite(p)) throw std::invalid_argument("target phases must be finite");
    }
    check_magnitude_vector(magnitudes, qubit_count() == 1
                                           ? "target requires alpha <= beta"
                                           : "target requires alpha <= beta <= gamma <= delta");
}

ChannelSpec ChannelSpec::one_pair(double a, double b) {
    ChannelSpec c{ChannelVariant::OnePair, true, {Amplitude{a, 0.0}, Amplitude{b, 0.0}}};
    c.validate();
    return c;
}

ChannelSpec ChannelSpec::one_pair(Amplitude a, Amplitude b) {
    ChannelSpec c{ChannelVariant::OnePair, false, {a, b}};
    c.validate();
    return c;
}

ChannelSpec ChannelSpec::two_pair(double a, double b, double c, double d) {
    ChannelSpec ch{ChannelVariant::TwoPair,
                   true,
                   {Amplitude{a, 0.0}, Amplitude{b, 0.0}, Amplitude{c, 0.0}, Amplitude{d, 0.0}}};
    ch.validate();
    return ch;
}

ChannelSpec ChannelSpec::two_pair(Amplitude a, Amplitude b, Amplitude c, Amplitude d) {
    ChannelSpec ch{ChannelVariant::TwoPair, false, {a, b, c, d}};
    ch.validate();
    return ch;
}

std::size_t ChannelSpec::sender_qubits() const {
    return variant == ChannelVariant::OnePair ? 1 : 2;
}

double ChannelSpec::magnitude(std::size_t i) const { return std::abs(coefficients.at(i)); }

void ChannelSpec::validate() const {
    const std::size_t want = variant == ChannelVariant::OnePair ? 2 : 4;
    if (coefficients.size() != want) {
        throw std::invalid_argument("channel coefficient count does not match the variant");
    }
    double sum = 0.0;
    for (const Amplitude &c : coefficients) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument("channel coefficients must be finite");
        }
        if (std::abs(c) == 0.0) {
            throw std::invalid_argument("channel coefficients must all be nonzero");
        }
        if (real_form && (c.imag() != 0.0 || c.real() <= 0.0)) {
            // Sign structure in the coefficients breaks the sign-pattern match
            // between collapsed states and their correction patterns; a flipped
            // sign is a phase and belongs in the complex form.
            throw std::invalid_argument(
                "real-form channel coefficients must be positive reals (put phases in the "
                "complex form)");
        }
        sum += std::norm(c);
    }
    if (std::abs(sum - 1.0) > kTol) {
        throw std::invalid_argument("channel requires sum of squared magnitudes = 1");
    }
    for (std::size_t i = 0; i + 1 < coefficients.size(); ++i) {
        if (magnitude(i) > magnitude(i + 1) + kTol) {
            throw std::invalid_argument(variant == ChannelVariant::OnePair
                                            ? "channel requires |a| <= |b|"
                                            : "channel requires |a| <= |b| <= |c| <= |d|");
        }
    }
    if (variant == ChannelVariant::TwoPair && real_form) {
        if (magnitude(0) * magnitude(3) > magnitude(1) * magnitude(2) + kTol) {
            throw std::invalid_argument("two-pair real channel requires |a*d| <= |b*c|");
        }
    }
}

void require_compatible(const TargetSpec &target, const ChannelSpec &channel) {
    target.validate();
    channel.validate();
    const bool one_qubit = target.qubit_count() == 1;
    if (one_qubit != (channel.variant == ChannelVariant::OnePair)) {
        throw std::invalid_argument("target and channel sizes are incompatible");
    }
    if (!target.complex_form() && !channel.real_form) {
        throw std::invalid_argument("a real-form target requires a real-form channel");
    }
}

StateVector target_state(const TargetSpec &target) {
    target.validate();
    std::vector<Amplitude> amps(target.magnitudes.size());
    amps[0] = Amplitude{target.magnitudes[0], 0.0};
    for (std::size_t i = 1; i < amps.size(); ++i) {
        const double phase = target.complex_form() ? target.phases[i - 1] : 0.0;
        amps[i] = target.magnitudes[i] * phase_factor(phase);
    }
    return StateVector(target.qubit_count(), std::move(amps));
}

StateVector channel_state(const ChannelSpec &channel) {
    channel.validate();
    if (channel.variant == ChannelVariant::OnePair) {
        std::vector<Amplitude> amps(4, kZero);
        amps[0b00] = channel.coefficients[0];
        amps[0b11] = channel.coefficients[1];
        return StateVector(2, std::move(amps));
    }
    std::vector<Amplitude> amps(16, kZero);
    amps[0b0000] = channel.coefficients[0];
    amps[0b0101] = channel.coefficients[1];
    amps[0b1010] = channel.coefficients[2];
    amps[0b1111] = channel.coefficients[3];
    return StateVector(4, std::move(amps));
}

int branch_count(ProtocolVariant variant) {
    return (variant == ProtocolVariant::Real1Q || variant == ProtocolVariant::Complex1Q) ? 2 : 4;
}

BranchMode branch_mode(ProtocolVariant variant, int branch) {
    if (branch < 1 || branch > branch_count(variant)) {
        throw std::invalid_argument("branch index out of range");
    }
    if (branch == 1) return BranchMode::Direct;
    const bool complex_form =
        variant == ProtocolVariant::Complex1Q || variant == ProtocolVariant::Complex2Q;
    return complex_form ? BranchMode::Fails : BranchMode::Filtered;
}

namespace {

MeasurementBasis basis_real_1q(const TargetSpec &t, const ChannelSpec &ch) {
    const double a = ch.coefficients[0].real();
    const double b = ch.coefficients[1].real();
    const double alpha = t.magnitudes[0];
    const double beta = t.magnitudes[1];
    const double c1 = 1.0 / std::sqrt(squared(b * alpha) + squared(a * beta));
    const double x = c1 * alpha * b;
    const double y = c1 * beta * a;
    return MeasurementBasis{{
        StateVector(1, {Amplitude{x, 0.0}, Amplitude{y, 0.0}}),
        StateVector(1, {Amplitude{y, 0.0}, Amplitude{-x, 0.0}}),
    }};
}

MeasurementBasis basis_complex_1q(const TargetSpec &t, const ChannelSpec &ch) {
    const Amplitude a = ch.coefficients[0];
    const Amplitude b = ch.coefficients[1];
    const double alpha = t.magnitudes[0];
    const double beta = t.magnitudes[1];
    const Amplitude e_minus = phase_factor(-t.phases[0]);
    const double c2 =
        1.0 / std::sqrt(std::norm(b) * squared(alpha) + std::norm(a) * squared(beta));
    // The second vector must use the unconjugated -alpha*b: with conj(b)
    // there the two vectors stop being orthogonal once b leaves the real axis.
    const Amplitude p = (c2 * alpha) * b;
    const Amplitude q = ((c2 * beta) * std::conj(e_minus)) * a;
    return MeasurementBasis{{
        StateVector(1, {std::conj(p), std::conj(q)}),
        StateVector(1, {q, -p}),
    }};
}

MeasurementBasis basis_real_2q(const TargetSpec &t, const ChannelSpec &ch) {
    const double a = ch.coefficients[0].real();
    const double b = ch.coefficients[1].real();
    const double c = ch.coefficients[2].real();
    const double d = ch.coefficients[3].real();
    const double alpha = t.magnitudes[0], beta = t.magnitudes[1];
    const double gamma = t.magnitudes[2], delta = t.magnitudes[3];
    const double e1 = b * c * d * alpha;
    const double e2 = a * c * d * beta;
    const double e3 = a * b * d * gamma;
    const double e4 = a * b * c * delta;
    const double k = 1.0 / std::sqrt(e1 * e1 + e2 * e2 + e3 * e3 + e4 * e4);
    auto vec = [&](double w, double x, double y, double z) {
        return StateVector(2, {Amplitude{k * w, 0.0}, Amplitude{k * x, 0.0},
                               Amplitude{k * y, 0.0}, Amplitude{k * z, 0.0}});
    };
    return MeasurementBasis{{
        vec(e1, e2, e3, e4),
        vec(e2, -e1, -e4, e3),
        vec(e3, e4, -e1, -e2),
        vec(-e4, e3, -e2, e1),
    }};
}

MeasurementBasis basis_complex_2q(const TargetSpec &t, const ChannelSpec &ch) {
    const Amplitude a = ch.coefficients[0];
    const Amplitude b = ch.coefficients[1];
    const Amplitude c = ch.coefficients[2];
    const Amplitude d = ch.coefficients[3];
    const double alpha = t.magnitudes[0], beta = t.magnitudes[1];
    const double gamma = t.magnitudes[2], delta = t.magnitudes[3];
    const Amplitude e1 = phase_factor(-t.phases[0]);
    const Amplitude e2 = phase_factor(-t.phases[1]);
    const Amplitude e3 = phase_factor(-t.phases[2]);
    const Amplitude bcd = b * c * d, acd = a * c * d, abd = a * b * d, abc = a * b * c;

    // Upper (|00>,|01>) and lower (|10>,|11>) component pairs of the first
    // two vectors; the last two vectors rebalance the pairs against each
    // other with the weight ratio tau.
    const std::array<Amplitude, 2> u1{std::conj(bcd) * alpha, (std::conj(acd) * beta) * e1};
    const std::array<Amplitude, 2> u2{(std::conj(abd) * gamma) * e2,
                                      (std::conj(abc) * delta) * e3};
    const std::array<Amplitude, 2> v1{acd * beta, -(bcd * alpha) * e1};
    const std::array<Amplitude, 2> v2{-(abc * delta) * e2, (abd * gamma) * e3};

    const double upper = std::norm(u1[0]) + std::norm(u1[1]);
    const double lower = std::norm(u2[0]) + std::norm(u2[1]);
    const double k = 1.0 / std::sqrt(upper + lower);
    auto vec = [&](Amplitude w, Amplitude x, Amplitude y, Amplitude z) {
        return StateVector(2, {k * w, k * x, k * y, k * z});
    };

    std::vector<StateVector> out;
    out.push_back(vec(u1[0], u1[1], u2[0], u2[1]));
    out.push_back(vec(v1[0], v1[1], v2[0], v2[1]));
    if (upper == 0.0) {
        // alpha = beta = 0: the first two vectors live entirely on the lower
        // pair, so any orthonormal completion of the upper pair works.
        out.push_back(StateVector::basis_state(2, 0));
        out.push_back(StateVector::basis_state(2, 1));
    } else {
        const double tau = std::sqrt(lower / upper);
        out.push_back(vec(tau * u1[0], tau * u1[1], -u2[0] / tau, -u2[1] / tau));
        out.push_back(vec(tau * v1[0], tau * v1[1], -v2[0] / tau, -v2[1] / tau));
    }
    return MeasurementBasis{std::move(out)};
}

}  // namespace

MeasurementBasis build_basis(const TargetSpec &target, const ChannelSpec &channel) {
    require_compatible(target, channel);
    switch (target.variant) {
        case ProtocolVariant::Real1Q: return basis_real_1q(target, channel);
        case ProtocolVariant::Complex1Q: return basis_complex_1q(target, channel);
        case ProtocolVariant::Real2Q: return basis_real_2q(target, channel);
        case ProtocolVariant::Complex2Q: return basis_complex_2q(target, channel);
    }
    throw std::logic_error("unreachable protocol variant");
}

PatternVector collapse_pattern(const TargetSpec &target, int branch) {
    target.validate();
    if (branch < 1 || branch > branch_count(target.variant)) {
        throw std::invalid_argument("branch index out of range");
    }
    if (branch == 1) return PatternVector{target.magnitudes};
    if (target.complex_form()) {
        throw std::invalid_argument(
            "collapse patterns beyond branch 1 exist only for real-form targets");
    }
    const std::vector<double> &m = target.magnitudes;
    if (target.variant == ProtocolVariant::Real1Q) {
        return PatternVector{{m[1], -m[0]}};
    }
    switch (branch) {
        case 2: return PatternVector{{m[1], -m[0], -m[3], m[2]}};
        case 3: return PatternVector{{m[2], m[3], -m[0], -m[1]}};
        case 4: return PatternVector{{-m[3], m[2], -m[1], m[0]}};
    }
    throw std::logic_error("unreachable branch");
}

TwoOutcomeFilter TwoOutcomeFilter::from_pass_ratios(const std::vector<double> &ratios) {
    if (ratios.empty()) throw std::invalid_argument("filter needs at least one pass ratio");
    TwoOutcomeFilter filter;
    bool any_unit = false;
    for (double r : ratios) {
        if (!std::isfinite(r) || r <= 0.0) {
            throw std::domain_error("filter pass ratios must be finite and positive");
        }
        if (r > 1.0 + kTol) {
            throw std::domain_error(
                "filter pass ratio exceeds 1: no two-outcome unitary dilation exists");
        }
        const double f = std::min(r, 1.0);
        any_unit = any_unit || f == 1.0;
        filter.f.push_back(f);
        filter.g.push_back(std::sqrt(std::max(0.0, 1.0 - f * f)));
    }
    if (!any_unit) {
        throw std::domain_error("at least one pass ratio must equal 1");
    }
    return filter;
}

TwoOutcomeFilter build_filter(const StateVector &collapsed, const PatternVector &pattern) {
    if (pattern.entries.size() != collapsed.dim()) {
        throw std::invalid_argument("pattern length must match the collapsed state dimension");
    }
    std::vector<double> distortion(pattern.entries.size());
    for (std::size_t i = 0; i < distortion.size(); ++i) {
        const double got = std::abs(collapsed[i]);
        const double want = std::abs(pattern.entries[i]);
        const bool got_zero = got <= kTol;
        const bool want_zero = want <= kTol;
        if (got_zero != want_zero) {
            throw std::invalid_argument(
                got_zero ? "filter cannot create amplitude where the collapsed state has none"
                         : "filter cannot null a nonzero amplitude (pattern entry is zero)");
        }
        distortion[i] = got_zero ? 1.0 : got / want;
    }
    const double least = *std::min_element(distortion.begin(), distortion.end());
    std::vector<double> ratios(distortion.size());
    for (std::size_t i = 0; i < ratios.size(); ++i) ratios[i] = least / distortion[i];
    return TwoOutcomeFilter::from_pass_ratios(ratios);
}

Operator filter_unitary(const TwoOutcomeFilter &filter) {
    const std::size_t n = filter.size();
    if (n == 0 || (n & (n - 1)) != 0 || filter.g.size() != n) {
        throw std::invalid_argument("filter size must be a nonzero power of two");
    }
    Operator u = Operator::zero(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        u(i, i) = Amplitude{filter.f[i], 0.0};
        u(i, n + i) = Amplitude{filter.g[i], 0.0};
        u(n + i, i) = Amplitude{filter.g[i], 0.0};
        u(n + i, n + i) = Amplitude{-filter.f[i], 0.0};
    }
    return u;
}

bool is_signed_permutation(const Operator &op, double tol) {
    for (std::size_t r = 0; r < op.dim(); ++r) {
        std::size_t nonzero = 0;
        for (std::size_t c = 0; c < op.dim(); ++c) {
            const Amplitude &e = op(r, c);
            if (std::abs(e) <= tol) continue;
            ++nonzero;
            if (std::abs(e.imag()) > tol || std::abs(std::abs(e.real()) - 1.0) > tol) {
                return false;
            }
        }
        if (nonzero != 1) return false;
    }
    return unitarity_deviation(op) <= tol;
}

namespace {

Operator signed_matrix_4(const std::array<std::array<int, 4>, 4> &rows) {
    Operator op = Operator::zero(4);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            op(r, c) = Amplitude{static_cast<double>(rows[r][c]), 0.0};
        }
    }
    return op;
}

}  // namespace

RecoveryOp recovery_operator(ProtocolVariant variant, int branch) {
    const BranchMode mode = branch_mode(variant, branch);
    if (mode != BranchMode::Filtered) {
        throw std::invalid_argument("recovery operators exist only for filtered branches");
    }
    if (variant == ProtocolVariant::Real1Q) {
        return RecoveryOp{Operator(2, {kZero, Amplitude{-1.0, 0.0}, Amplitude{1.0, 0.0}, kZero})};
    }
    switch (branch) {
        case 2:  // Z (x) R
            return RecoveryOp{signed_matrix_4({{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}})};
        case 3:  // R (x) I
            return RecoveryOp{signed_matrix_4({{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}}})};
        case 4:  // (Z R) (x) R
            return RecoveryOp{signed_matrix_4({{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}})};
    }
    throw std::logic_error("unreachable branch");
}

double analytic_success(const TargetSpec &target, const ChannelSpec &channel) {
    require_compatible(target, channel);
    const std::vector<double> &m = target.magnitudes;
    const double a = channel.magnitude(0);
    const double b = channel.magnitude(1);
    switch (target.variant) {
        case ProtocolVariant::Real1Q:
            return squared(a) / (squared(b * m[0]) + squared(a * m[1]));
        case ProtocolVariant::Complex1Q:
            return squared(a * b) / (squared(b * m[0]) + squared(a * m[1]));
        case ProtocolVariant::Real2Q: {
            const double c = channel.magnitude(2);
            const double d = channel.magnitude(3);
            const double num = squared(a) * (squared(c * d) * (squared(b) + squared(a)) +
                                             squared(a * b) * (squared(d) + squared(c)));
            const double den = squared(c * d) * (squared(b * m[0]) + squared(a * m[1])) +
                               squared(a * b) * (squared(d * m[2]) + squared(c * m[3]));
            return num / den;
        }
        case ProtocolVariant::Complex2Q: {
            const double c = channel.magnitude(2);
            const double d = channel.magnitude(3);
            const double den = squared(b * c * d * m[0]) + squared(a * c * d * m[1]) +
                               squared(a * b * d * m[2]) + squared(a * b * c * m[3]);
            return squared(a * b * c * d) / den;
        }
    }
    throw std::logic_error("unreachable protocol variant");
}

BoundReport improvement_bound(const TargetSpec &target, const ChannelSpec &channel) {
    const double analytic = analytic_success(target, channel);
    const double a = channel.magnitude(0);
    const double b = channel.magnitude(1);
    std::optional<double> bound;
    switch (target.variant) {
        case ProtocolVariant::Real1Q: bound = 2.0 * squared(a); break;
        case ProtocolVariant::Complex1Q: bound = 2.0 * squared(a * b); break;
        case ProtocolVariant::Real2Q: bound = 4.0 * squared(a); break;
        case ProtocolVariant::Complex2Q: break;  // no closed-form lower bound
    }
    std::optional<double> ratio;
    if (bound) ratio = analytic / *bound;
    return BoundReport{analytic, bound, ratio};
}

std::vector<std::string> correction_notes(ProtocolVariant variant) {
    switch (variant) {
        case ProtocolVariant::Complex1Q:
            return {"second basis vector keeps -alpha*b unconjugated; conjugating b there "
                    "breaks orthogonality for complex channels"};
        case ProtocolVariant::Real2Q:
            return {"branch-2 filter pass ratios are {1, a^2/b^2, ad/bc, ac/bd}; the fourth "
                    "is forced below 1 by the minimal-distortion construction"};
        default:
            return {};
    }
}

}  // namespace rspsim
