#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kmap/cognitive_map.hpp"
#include "kmap/dense.hpp"
#include "kmap/k_analysis.hpp"

namespace kmap {

/// Which adjacency index is the source of a propagating pulse.
///
/// row_source: a pulse on i reaches j through W(i, j), i.e. the update is
/// v += W^T p. This is the default; it reproduces the published impulse
/// pressure/consequence tables for the public-health map.
///
/// column_source: the update is applied literally as v += W p.
enum class Orientation { row_source, column_source };

inline constexpr Orientation kDefaultOrientation = Orientation::row_source;
inline constexpr double kDivergenceGuard = 1e300;

/// Matrix that multiplies pulse vectors for the chosen orientation.
Matrix effective_matrix(const Matrix& w, Orientation orientation);

struct ImpulseState {
    std::vector<double> v_init;
    std::vector<double> p0;
    std::vector<std::vector<double>> trajectory;  // v(0) .. v(n)
    std::vector<std::vector<double>> pulses;      // p(0) .. p(n)

    const std::vector<double>& final_values() const { return trajectory.back(); }
};

/// Iterates v(0) = v_init + p0, v(n+1) = v(n) + W_eff p(n), with
/// p(n) = v(n) - v(n-1). Throws DivergenceDetected (carrying the step) once a
/// component exceeds kDivergenceGuard in magnitude or stops being finite.
ImpulseState impulse_simulate(const CognitiveMap& map, std::span<const double> v_init,
                              std::span<const double> p0, std::size_t n_steps,
                              Orientation orientation = kDefaultOrientation);

/// v_init + (1 - W_eff)^-1 p0. Throws Unstable when rho(W) >= 1.
std::vector<double> impulse_closed_form(const CognitiveMap& map, std::span<const double> v_init,
                                        std::span<const double> p0,
                                        Orientation orientation = kDefaultOrientation);

struct StabilityReport {
    double spectral_radius = 0.0;
    bool stable = true;
    bool converged = true;
    std::size_t iterations_used = 0;
};

/// rho(W) from the Gelfand limit ||W^k||^(1/k), evaluated by repeated squaring
/// with the ratio ||W^2k|| / ||W^k|| cancelling the leading constant. Works
/// for complex dominant pairs. When the estimate has not settled within the
/// squaring budget, `converged` is false and the best estimate is returned.
StabilityReport spectral_radius(const Matrix& w);

struct ImpulseOmega {
    Matrix omega;  // (1 - W_eff)^-1
    Orientation orientation = kDefaultOrientation;
};

/// Throws Unstable when rho(W) >= 1.
ImpulseOmega impulse_omega(const CognitiveMap& map, Orientation orientation = kDefaultOrientation);

/// Impulse analogs of pressure and consequence with unit pulses. With
/// P = (1 - W_eff)^-1 the pressure on b is the b-component of P applied to
/// all-ones-except-b, and the consequence of a is the total response of the
/// other concepts to a unit pulse on a. For row_source and Omega = (1 - W)^-1
/// this is pressure_b = sum_k Omega(k, b) - Omega(b, b) and
/// consequence_a = sum_k Omega(a, k) - Omega(a, a).
InfluenceProfile impulse_profile(const CognitiveMap& map,
                                 Orientation orientation = kDefaultOrientation);

/// Pressure on `sink` computed constructively: apply P to a pulse vector of
/// ones with a zero at `sink` and read the `sink` component.
double pressure_single(const CognitiveMap& map, ConceptId sink,
                       Orientation orientation = kDefaultOrientation);

}  // namespace kmap
