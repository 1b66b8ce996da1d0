#include "qgame/golden.hpp"

#include <cmath>

#include "qgame/format.hpp"
#include "qgame/noise.hpp"

namespace qgame::golden {

namespace {

// Slot triples are (payoff at input 0, at input 1, at the 50:50 mixture),
// one slot per occupied p-value in value order.

std::vector<GoldenRow> make_classical_rows() {
    return {
        {"i", 1, {{1, 3, 0.5, 0.5, 0.5}}, 0.5, 0.5, 0.5},
        {"ii", 3, {{0, 1, 21.0 / 4, -17.0 / 4, 0.5}, {1, 2, 3.0 / 4, 1.0 / 4, 0.5}},
         9.0 / 4, -5.0 / 4, 0.5},
        {"iii", 3, {{0, 2, 11.0 / 2, -9.0 / 2, 0.5}, {1, 1, 3.0 / 2, 1.0 / 2, 1.0}},
         25.0 / 6, -17.0 / 6, 2.0 / 3},
        {"iv", 1, {{0, 3, 2.0, 0.0, 1.0}}, 2.0, 0.0, 1.0},
        {"v", 1, {{2, 3, 0.0, 2.0, 1.0}}, 0.0, 2.0, 1.0},
        {"vi", 3, {{0, 1, 1.0, 1.0, 1.0}, {2, 2, -9.0, 9.0, 0.0}},
         -17.0 / 3, 19.0 / 3, 1.0 / 3},
        {"vii", 3, {{0, 2, 9.0, -9.0, 0.0}, {2, 1, 1.0, 1.0, 1.0}},
         19.0 / 3, -17.0 / 3, 1.0 / 3},
        {"viii", 6,
         {{0, 1, 5.0, -4.0, 0.5}, {1, 1, 0.0, 0.0, 0.0}, {2, 1, -4.0, 5.0, 0.5}},
         1.0 / 3, 1.0 / 3, 1.0 / 3},
        {"ix", 3, {{1, 2, 1.0 / 4, 3.0 / 4, 0.5}, {2, 1, -17.0 / 4, 21.0 / 4, 0.5}},
         -5.0 / 4, 9.0 / 4, 0.5},
        {"x", 3, {{1, 1, 1.0 / 2, 3.0 / 2, 1.0}, {2, 2, -9.0 / 2, 11.0 / 2, 0.5}},
         -17.0 / 6, 25.0 / 6, 2.0 / 3},
    };
}

std::vector<GoldenRow> make_quantum_rows() {
    return {
        {"i", 1, {{1, 3, -15.0 / 4, 19.0 / 4, 0.5}}, -15.0 / 4, 19.0 / 4, 0.5},
        {"ii", 3, {{0, 1, -15.0 / 4, 19.0 / 4, 0.5}, {1, 2, -15.0 / 4, 19.0 / 4, 0.5}},
         -15.0 / 4, 19.0 / 4, 0.5},
        {"iii", 3, {{0, 2, -7.0 / 2, 9.0 / 2, 0.5}, {1, 1, 3.0 / 2, 1.0 / 2, 1.0}},
         -11.0 / 6, 19.0 / 6, 2.0 / 3},
        {"iv", 1, {{0, 3, 2.0, 0.0, 1.0}}, 2.0, 0.0, 1.0},
        {"v", 1, {{2, 3, 0.0, 2.0, 1.0}}, 0.0, 2.0, 1.0},
        {"vi", 3, {{0, 1, 1.0, 1.0, 1.0}, {2, 2, -9.0, 9.0, 0.0}},
         -17.0 / 3, 19.0 / 3, 1.0 / 3},
        {"vii", 3, {{0, 2, 9.0, -9.0, 0.0}, {2, 1, 1.0, 1.0, 1.0}},
         19.0 / 3, -17.0 / 3, 1.0 / 3},
        {"viii", 6,
         {{0, 1, 5.0, -4.0, 0.5}, {1, 1, 9.0, -9.0, 0.0}, {2, 1, 5.0, -4.0, 0.5}},
         19.0 / 3, -17.0 / 3, 1.0 / 3},
        {"ix", 3, {{1, 2, 19.0 / 4, -15.0 / 4, 0.5}, {2, 1, 19.0 / 4, -15.0 / 4, 0.5}},
         19.0 / 4, -15.0 / 4, 0.5},
        {"x", 3, {{1, 1, 3.0 / 2, 1.0 / 2, 1.0}, {2, 2, -7.0 / 2, 9.0 / 2, 0.5}},
         -11.0 / 6, 19.0 / 6, 2.0 / 3},
    };
}

const char* table_name(Mode mode) {
    return mode == Mode::Classical ? "Table I" : "Table II";
}

const char* slot_name(int value_index) {
    switch (value_index) {
    case 0: return "p=0";
    case 1: return "p=1/2";
    default: return "p=1";
    }
}

void compare(std::vector<std::string>& diffs, const std::string& where, double got,
             double want, double tol) {
    if (std::abs(got - want) > tol)
        diffs.push_back(where + ": got " + decimal12(got) + ", expected " +
                        decimal12(want));
}

void check_table(std::vector<std::string>& diffs, Mode mode, const PayoffTable& table,
                 double tol) {
    const std::vector<StrategyClass> rows = build_table(mode, table);
    const std::vector<GoldenRow>& want = mode == Mode::Classical ? classical_rows()
                                                                 : quantum_rows();
    const std::string name = table_name(mode);
    for (int i = 0; i < 10; ++i) {
        const std::string row = name + " row (" + std::string(class_label(i)) + ")";
        if (rows[i].multiplicity != want[i].multiplicity) {
            diffs.push_back(row + ": multiplicity " + std::to_string(rows[i].multiplicity) +
                            ", expected " + std::to_string(want[i].multiplicity));
            continue;
        }
        for (std::size_t s = 0; s < want[i].slots.size(); ++s) {
            const GoldenSlot& g = want[i].slots[s];
            const SlotStats& got = rows[i].slots[s];
            const std::string slot = row + " slot " + slot_name(g.value_index);
            compare(diffs, slot + " input 0", got.payoff_input0, g.input0, tol);
            compare(diffs, slot + " input 1", got.payoff_input1, g.input1, tol);
            compare(diffs, slot + " mixed", got.payoff_mixed, g.mixed, tol);
        }
        compare(diffs, row + " average input 0", rows[i].avg_input0, want[i].avg_input0, tol);
        compare(diffs, row + " average input 1", rows[i].avg_input1, want[i].avg_input1, tol);
        compare(diffs, row + " average mixed", rows[i].avg_mixed, want[i].avg_mixed, tol);
    }
}

void check_convergence(std::vector<std::string>& diffs, const PayoffTable& table,
                       double tol) {
    const auto classical = build_table(Mode::Classical, table);
    const auto quantum = build_table(Mode::Quantum, table);
    for (int i = 0; i < 10; ++i) {
        const std::string row = "x=0.5 convergence row (" + std::string(class_label(i)) + ")";
        for (std::size_t s = 0; s < classical[i].slots.size(); ++s)
            compare(diffs, row + " slot " + slot_name(classical[i].slots[s].value_index),
                    quantum[i].slots[s].payoff_mixed, classical[i].slots[s].payoff_mixed,
                    tol);
    }
}

void check_jgates_off(std::vector<std::string>& diffs, const PayoffTable& table,
                      double tol) {
    for (const StrategyProfile& qp : enumerate_profiles(Mode::Quantum)) {
        const QuantumProfile& quantum = std::get<QuantumProfile>(qp);
        ClassicalProfile classical;
        for (int i = 0; i < 3; ++i)
            classical.s[i] = ClassicalStrategy{p_value(quantum.s[i])};
        for (bool input : {false, true}) {
            const PayoffVector off = jgates_off_round(quantum, input, table);
            const PayoffVector want = classical_round(classical, input, table).payoff;
            for (int p = 0; p < 3; ++p)
                compare(diffs,
                        "entangler-off oracle " + profile_label(qp) + " input " +
                            (input ? "1" : "0") + " player " + std::to_string(p + 1),
                        off[p], want[p], tol);
        }
    }
}

void check_thresholds(std::vector<std::string>& diffs, const PayoffTable& table,
                      double tol) {
    const GoldenThresholds want = thresholds();
    const auto classical = build_table(Mode::Classical, table);
    const auto quantum = build_table(Mode::Quantum, table);
    try {
        const NoiseThresholds got = threshold_report(
            payoff_line(classical[class_index_from_label("iv")]),
            payoff_line(quantum[class_index_from_label("viii")]));
        compare(diffs, "threshold x_cr", got.x_cr, want.x_cr, tol);
        compare(diffs, "threshold x_minus", got.x_minus, want.x_minus, tol);
        compare(diffs, "threshold x_plus", got.x_plus, want.x_plus, tol);
        if (got.x_cr > 0.0 && got.x_cr < 0.5)
            compare(diffs, "threshold kT_cr", temperature_from_noise(got.x_cr), want.kt_cr,
                    1e-3);
        if (got.x_minus > 0.0 && got.x_minus < 0.5)
            compare(diffs, "threshold kT_minus", temperature_from_noise(got.x_minus),
                    want.kt_minus, 1e-3);
    } catch (const std::invalid_argument&) {
        diffs.push_back("threshold report: class lines do not cross in [0,1]");
    }
}

} // namespace

const std::vector<GoldenRow>& classical_rows() {
    static const std::vector<GoldenRow> rows = make_classical_rows();
    return rows;
}

const std::vector<GoldenRow>& quantum_rows() {
    static const std::vector<GoldenRow> rows = make_quantum_rows();
    return rows;
}

GoldenThresholds thresholds() {
    return {13.0 / 30, 13.0 / 36, 19.0 / 36, 3.727, 1.753};
}

std::vector<std::string> verify_all(const PayoffTable& table, double tol) {
    std::vector<std::string> diffs;
    check_table(diffs, Mode::Classical, table, tol);
    check_table(diffs, Mode::Quantum, table, tol);
    check_convergence(diffs, table, tol);
    check_jgates_off(diffs, table, tol);
    check_thresholds(diffs, table, tol);
    return diffs;
}

}
