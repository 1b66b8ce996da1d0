#include "qgame/game.hpp"

#include <stdexcept>

#include "qgame/kernels.hpp"

namespace qgame {

PayoffTable default_payoff_table() {
    PayoffTable t;
    t.rows[0] = {0, 0, 0};    // 000
    t.rows[1] = {-9, -9, 1};  // 001
    t.rows[2] = {-9, 1, -9};  // 010
    t.rows[3] = {1, 9, 9};    // 011
    t.rows[4] = {1, -9, -9};  // 100
    t.rows[5] = {9, 1, 9};    // 101
    t.rows[6] = {9, 9, 1};    // 110
    t.rows[7] = {2, 2, 2};    // 111
    return t;
}

Gate2 strategy_gate(QuantumStrategy s) {
    switch (s) {
    case QuantumStrategy::PHat0: return pauli_x();
    case QuantumStrategy::PHatHalf: return hadamard();
    case QuantumStrategy::PHat1: return identity2();
    }
    throw std::logic_error("strategy_gate: bad label");
}

double p_value(const ClassicalStrategy& s) { return s.p; }

double p_value(QuantumStrategy s) {
    switch (s) {
    case QuantumStrategy::PHat0: return 0.0;
    case QuantumStrategy::PHatHalf: return 0.5;
    case QuantumStrategy::PHat1: return 1.0;
    }
    throw std::logic_error("p_value: bad label");
}

Mode mode_of(const StrategyProfile& profile) {
    return std::holds_alternative<ClassicalProfile>(profile) ? Mode::Classical
                                                             : Mode::Quantum;
}

NoiseModel::NoiseModel(double x) : x_(x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("NoiseModel: x outside [0,1]");
}

PayoffVector expected_payoff(const OutcomeDistribution& dist, const PayoffTable& table) {
    // Pack the 8x3 table into rows padded to 4 for the kernel.
    std::array<double, 32> pay{};
    for (int k = 0; k < 8; ++k)
        for (int p = 0; p < 3; ++p)
            pay[4 * k + p] = table.rows[k][p];
    PayoffVector out{};
    kernels::active().weighted_sum3(dist.data(), pay.data(), out.data());
    return out;
}

RoundResult classical_round(const ClassicalProfile& profile, bool input_bit,
                            const PayoffTable& table) {
    for (const ClassicalStrategy& s : profile.s)
        if (!(s.p >= 0.0 && s.p <= 1.0))
            throw std::domain_error("classical_round: p outside [0,1]");

    // q[i] = probability that player i outputs 1.
    std::array<double, 3> q;
    for (int i = 0; i < 3; ++i)
        q[i] = input_bit ? profile.s[i].p : 1.0 - profile.s[i].p;

    RoundResult r;
    for (int k = 0; k < 8; ++k) {
        double prob = 1.0;
        for (int i = 0; i < 3; ++i) {
            const bool bit = (k >> (2 - i)) & 1;
            prob *= bit ? q[i] : 1.0 - q[i];
        }
        r.dist[k] = prob;
    }
    r.payoff = expected_payoff(r.dist, table);
    return r;
}

namespace {

const Gate8& j_gate() {
    static const Gate8 j = build_j_gate();
    return j;
}

const Gate8& j_gate_adjoint() {
    static const Gate8 jdag = adjoint(build_j_gate());
    return jdag;
}

} // namespace

RoundResult quantum_round(const QuantumProfile& profile, bool input_bit,
                          const PayoffTable& table) {
    const Gate8 u = kron3(strategy_gate(profile.s[0]), strategy_gate(profile.s[1]),
                          strategy_gate(profile.s[2]));
    StateVector state = basis_state(input_bit, input_bit, input_bit);
    state = apply(j_gate(), state);
    state = apply(u, state);
    state = apply(j_gate_adjoint(), state);

    RoundResult r;
    r.dist = measure_distribution(state);
    r.payoff = expected_payoff(r.dist, table);
    return r;
}

PayoffVector jgates_off_round(const QuantumProfile& profile, bool input_bit,
                              const PayoffTable& table) {
    const Gate8 u = kron3(strategy_gate(profile.s[0]), strategy_gate(profile.s[1]),
                          strategy_gate(profile.s[2]));
    const StateVector state = apply(u, basis_state(input_bit, input_bit, input_bit));
    return expected_payoff(measure_distribution(state), table);
}

PayoffVector round_payoff(const StrategyProfile& profile, bool input_bit,
                          const PayoffTable& table) {
    return std::visit(
        [&](const auto& p) {
            if constexpr (std::is_same_v<std::decay_t<decltype(p)>, ClassicalProfile>)
                return classical_round(p, input_bit, table).payoff;
            else
                return quantum_round(p, input_bit, table).payoff;
        },
        profile);
}

PayoffVector mixed_payoff(const StrategyProfile& profile, const NoiseModel& noise,
                          const PayoffTable& table) {
    const PayoffVector p0 = round_payoff(profile, false, table);
    const PayoffVector p1 = round_payoff(profile, true, table);
    const double x = noise.x();
    PayoffVector out;
    for (int i = 0; i < 3; ++i)
        out[i] = (1.0 - x) * p0[i] + x * p1[i];
    return out;
}

}
