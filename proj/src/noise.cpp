#include "qgame/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace qgame {

PayoffLine payoff_line(const StrategyClass& cls) {
    if (!std::isfinite(cls.avg_input0) || !std::isfinite(cls.avg_input1))
        throw std::invalid_argument("payoff_line: class has no payoff data");
    return {cls.avg_input0, cls.avg_input1 - cls.avg_input0};
}

std::optional<double> crossover(const PayoffLine& a, const PayoffLine& b) {
    const double slope_diff = b.slope - a.slope;
    if (slope_diff == 0.0)
        return std::nullopt;
    const double x = (a.intercept - b.intercept) / slope_diff;
    if (x < 0.0 || x > 1.0)
        return std::nullopt;
    return x;
}

NoiseThresholds threshold_report(const PayoffLine& classical_line,
                                 const PayoffLine& quantum_line) {
    const auto x_cr = crossover(classical_line, quantum_line);
    const auto x_minus = crossover(PayoffLine{classical_line.at(0.0), 0.0}, quantum_line);
    const auto x_plus = crossover(PayoffLine{classical_line.at(1.0), 0.0}, quantum_line);
    if (!x_cr || !x_minus || !x_plus)
        throw std::invalid_argument("threshold_report: lines do not cross in [0,1]");
    return {*x_cr, *x_minus, *x_plus};
}

NoiseThresholds threshold_report() {
    const PayoffTable table = default_payoff_table();
    const auto classical = build_table(Mode::Classical, table);
    const auto quantum = build_table(Mode::Quantum, table);
    const int iv = class_index_from_label("iv");
    const int viii = class_index_from_label("viii");
    return threshold_report(payoff_line(classical[iv]), payoff_line(quantum[viii]));
}

double temperature_from_noise(double x, double delta_e) {
    if (!(delta_e > 0.0))
        throw std::domain_error("temperature_from_noise: delta_e must be positive");
    if (x <= 0.0)
        throw std::domain_error("temperature_from_noise: x <= 0 is the zero-temperature limit");
    if (x >= 0.5)
        throw std::domain_error(
            "temperature_from_noise: unobtainable (negative or infinite temperature) for x >= 1/2");
    return delta_e / std::log((1.0 - x) / x);
}

double noise_from_temperature(double kT, double delta_e) {
    if (!(kT > 0.0) || !(delta_e > 0.0))
        throw std::domain_error("noise_from_temperature: inputs must be positive");
    return 1.0 / (1.0 + std::exp(delta_e / kT));
}

}
