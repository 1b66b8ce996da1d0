#pragma once

#include <array>
#include <variant>

#include "qgame/statevec.hpp"

// One round of the three-player game in its classical (probabilistic
// bit-flip) and quantum (J-entangled circuit) forms, for a pure input bit
// or a noisy source mixture.

namespace qgame {

// Per-player expected payoffs, player 1 first.
using PayoffVector = std::array<double, 3>;

// Map from 3-bit measured outcome (index 0..7, player 1 most significant)
// to the three players' payoffs.
struct PayoffTable {
    std::array<PayoffVector, 8> rows{};
};

// The bar-attendance payoff table used throughout: 000 scores (0,0,0),
// a lone attendee gets 1 while the others get -9, two attendees get 9
// with 1 for the abstainer, and 111 scores (2,2,2).
PayoffTable default_payoff_table();

enum class Mode { Classical, Quantum };

// Probability p of leaving the input bit unflipped.
struct ClassicalStrategy {
    double p{};
};

// Gate labels identified with p = 0, 1/2, 1 by the entangler-off
// correspondence: PHat0 -> sigma_x, PHatHalf -> (sigma_x+sigma_z)/sqrt(2),
// PHat1 -> identity.
enum class QuantumStrategy { PHat0, PHatHalf, PHat1 };

Gate2 strategy_gate(QuantumStrategy s);

double p_value(const ClassicalStrategy& s);
double p_value(QuantumStrategy s);

struct ClassicalProfile {
    std::array<ClassicalStrategy, 3> s{};
};

struct QuantumProfile {
    std::array<QuantumStrategy, 3> s{};
};

using StrategyProfile = std::variant<ClassicalProfile, QuantumProfile>;

Mode mode_of(const StrategyProfile& profile);

// Source corruption rate: the all-ones input triple is supplied with
// probability x, the all-zeros triple with probability 1-x.
class NoiseModel {
  public:
    explicit NoiseModel(double x);
    double x() const { return x_; }

  private:
    double x_;
};

struct RoundResult {
    OutcomeDistribution dist{};
    PayoffVector payoff{};
};

// out[p] = sum_k dist[k] * table.rows[k][p]
PayoffVector expected_payoff(const OutcomeDistribution& dist, const PayoffTable& table);

// Each player independently keeps the input bit with probability p_i and
// flips it otherwise; the outcome distribution is the product measure.
// Throws std::domain_error if any p lies outside [0,1].
RoundResult classical_round(const ClassicalProfile& profile, bool input_bit,
                            const PayoffTable& table);

// Measures J^dag (U1(x)U2(x)U3) J |bbb> for b = input_bit.
RoundResult quantum_round(const QuantumProfile& profile, bool input_bit,
                          const PayoffTable& table);

// (U1(x)U2(x)U3)|bbb> with no entangler; the classical-correspondence
// oracle for the p-hat labels.
PayoffVector jgates_off_round(const QuantumProfile& profile, bool input_bit,
                              const PayoffTable& table);

// Mode-dispatching pure-input round payoff.
PayoffVector round_payoff(const StrategyProfile& profile, bool input_bit,
                          const PayoffTable& table);

// (1-x) * payoff(input 0) + x * payoff(input 1)
PayoffVector mixed_payoff(const StrategyProfile& profile, const NoiseModel& noise,
                          const PayoffTable& table);

}
