#include "kmap/impulse.hpp"

#include <cmath>
#include <stdexcept>

#include "kmap/errors.hpp"

namespace kmap {

namespace {

constexpr std::size_t kMaxSquarings = 64;
constexpr double kRadiusTolerance = 1e-10;

void check_length(std::span<const double> v, std::size_t n, const char* what) {
    if (v.size() != n)
        throw std::invalid_argument(std::string(what) + " must have one entry per concept");
}

void guard(std::span<const double> v, std::size_t step) {
    for (double x : v)
        if (!std::isfinite(x) || std::abs(x) > kDivergenceGuard)
            throw DivergenceDetected(step);
}

void require_stable(const Matrix& w) {
    const StabilityReport s = spectral_radius(w);
    if (!s.stable)
        throw Unstable(s.spectral_radius);
}

Matrix propagator(const CognitiveMap& map, Orientation orientation) {
    const Matrix w = effective_matrix(map.adjacency(), orientation);
    return inverse(Matrix::identity(map.size()) - w);
}

}  // namespace

Matrix effective_matrix(const Matrix& w, Orientation orientation) {
    return orientation == Orientation::row_source ? w.transposed() : w;
}

ImpulseState impulse_simulate(const CognitiveMap& map, std::span<const double> v_init,
                              std::span<const double> p0, std::size_t n_steps,
                              Orientation orientation) {
    const std::size_t n = map.size();
    check_length(v_init, n, "v_init");
    check_length(p0, n, "p0");
    const Matrix w = effective_matrix(map.adjacency(), orientation);

    ImpulseState state;
    state.v_init.assign(v_init.begin(), v_init.end());
    state.p0.assign(p0.begin(), p0.end());
    state.trajectory.reserve(n_steps + 1);
    state.pulses.reserve(n_steps + 1);

    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = v_init[i] + p0[i];
    guard(v, 0);
    state.trajectory.push_back(v);
    state.pulses.push_back(state.p0);

    for (std::size_t step = 0; step < n_steps; ++step) {
        const std::vector<double> push = w * state.pulses.back();
        std::vector<double> next = state.trajectory.back();
        for (std::size_t i = 0; i < n; ++i)
            next[i] += push[i];
        guard(next, step + 1);

        std::vector<double> pulse(n);
        const auto& prev = state.trajectory.back();
        for (std::size_t i = 0; i < n; ++i)
            pulse[i] = next[i] - prev[i];
        state.trajectory.push_back(std::move(next));
        state.pulses.push_back(std::move(pulse));
    }
    return state;
}

std::vector<double> impulse_closed_form(const CognitiveMap& map, std::span<const double> v_init,
                                        std::span<const double> p0, Orientation orientation) {
    check_length(v_init, map.size(), "v_init");
    check_length(p0, map.size(), "p0");
    require_stable(map.adjacency());
    std::vector<double> v = propagator(map, orientation) * p0;
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] += v_init[i];
    return v;
}

StabilityReport spectral_radius(const Matrix& w) {
    if (w.rows() != w.cols())
        throw std::invalid_argument("spectral_radius: matrix must be square");

    StabilityReport report;
    const double n0 = frobenius_norm(w);
    if (w.empty() || n0 == 0.0)
        return report;

    // power = W^k / ||W^k||, log_norm = log ||W^k||.
    Matrix power = (1.0 / n0) * w;
    double log_norm = std::log(n0);
    double k = 1.0;
    double previous = std::exp(log_norm);
    report.converged = false;

    for (std::size_t it = 1; it <= kMaxSquarings; ++it) {
        Matrix squared = power * power;
        const double ns = frobenius_norm(squared);
        report.iterations_used = it;
        if (ns == 0.0 || !std::isfinite(ns)) {
            // Nilpotent: W^2k vanishes exactly.
            report.spectral_radius = 0.0;
            report.converged = ns == 0.0;
            report.stable = true;
            return report;
        }
        // ||W^2k|| / ||W^k|| = ns * ||W^k||.
        const double estimate = std::exp((std::log(ns) + log_norm) / k);
        power = (1.0 / ns) * squared;
        log_norm = 2.0 * log_norm + std::log(ns);
        k *= 2.0;

        report.spectral_radius = estimate;
        if (it > 1 && std::abs(estimate - previous) <= kRadiusTolerance * std::max(1.0, estimate)) {
            report.converged = true;
            break;
        }
        previous = estimate;
    }
    report.stable = report.spectral_radius < 1.0 - 1e-9;
    return report;
}

ImpulseOmega impulse_omega(const CognitiveMap& map, Orientation orientation) {
    require_stable(map.adjacency());
    return {propagator(map, orientation), orientation};
}

InfluenceProfile impulse_profile(const CognitiveMap& map, Orientation orientation) {
    const Matrix p = impulse_omega(map, orientation).omega;
    const std::size_t n = map.size();
    InfluenceProfile out;
    out.pressure.assign(n, 0.0);
    out.consequence.assign(n, 0.0);
    out.amp_pressure.assign(n, 0.0);
    out.amp_consequence.assign(n, 0.0);
    // p(i, j) is the response of i to a unit pulse on j.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            out.pressure[i] += p(i, j);
            out.amp_pressure[i] += std::abs(p(i, j));
            out.consequence[j] += p(i, j);
            out.amp_consequence[j] += std::abs(p(i, j));
        }
    return out;
}

double pressure_single(const CognitiveMap& map, ConceptId sink, Orientation orientation) {
    if (!map.contains(sink))
        throw std::invalid_argument("pressure_single: concept id out of range");
    const Matrix p = impulse_omega(map, orientation).omega;
    std::vector<double> pulse(map.size(), 1.0);
    pulse[sink.value] = 0.0;
    return (p * pulse)[sink.value];
}

}  // namespace kmap
