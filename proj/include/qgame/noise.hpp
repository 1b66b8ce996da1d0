#pragma once

#include <optional>

#include "qgame/classes.hpp"

// The corrupted-source analysis: class payoff as an affine function of the
// noise level x, crossovers between such lines, the three threshold noise
// levels of the default game, and the two-level Boltzmann temperature map.

namespace qgame {

struct PayoffLine {
    double intercept{};  // payoff per player at x = 0
    double slope{};      // payoff change per unit x
    double at(double x) const { return intercept + slope * x; }
};

// Line through the class's pure-input averages; requires a class built by
// build_table (payoff fields populated).
PayoffLine payoff_line(const StrategyClass& cls);

// Intersection of two lines if it lies in [0,1]; absent for parallel or
// coincident lines and for out-of-range intersections.
std::optional<double> crossover(const PayoffLine& a, const PayoffLine& b);

struct NoiseThresholds {
    double x_cr;     // where the quantum class line meets the classical one
    double x_minus;  // where the quantum line drops to the classical x=0 value
    double x_plus;   // where the quantum line drops to the classical x=1 value
};

// Thresholds for the default payoff table: classical class (iv) against
// quantum class (viii), i.e. the lines 2 - 2x and 19/3 - 12x.
NoiseThresholds threshold_report();
NoiseThresholds threshold_report(const PayoffLine& classical_line,
                                 const PayoffLine& quantum_line);

// kT = delta_e / ln((1-x)/x), the two-level Boltzmann inverse. Defined for
// x in (0, 1/2): throws std::domain_error at x <= 0 (zero-temperature
// limit) and at x >= 1/2 (unobtainable: negative or infinite temperature).
double temperature_from_noise(double x, double delta_e = 1.0);

// x = 1/(1 + exp(delta_e/kT)); inverse of temperature_from_noise on
// (0, 1/2). Throws std::domain_error for non-positive inputs.
double noise_from_temperature(double kT, double delta_e = 1.0);

}
