#pragma once

#include <string>
#include <vector>

#include "qgame/classes.hpp"

// Embedded reference results: the two published-style class-payoff tables
// (Table I classical, Table II quantum), the threshold noise levels and
// temperatures, and the self-check that the simulator reproduces them.

namespace qgame::golden {

struct GoldenSlot {
    int value_index;
    int player_count;
    double input0;
    double input1;
    double mixed;
};

struct GoldenRow {
    const char* label;
    int multiplicity;
    std::vector<GoldenSlot> slots;
    double avg_input0;
    double avg_input1;
    double avg_mixed;
};

const std::vector<GoldenRow>& classical_rows();  // Table I
const std::vector<GoldenRow>& quantum_rows();    // Table II

struct GoldenThresholds {
    double x_cr;      // 13/30
    double x_minus;   // 13/36
    double x_plus;    // 19/36
    double kt_cr;     // 3.727 (in units of delta_e, 3 decimals)
    double kt_minus;  // 1.753
};

GoldenThresholds thresholds();

// Recomputes both class tables from `table`, the x = 0.5 convergence, the
// entangler-off correspondence for all 27 profiles, and the threshold
// constants, comparing against the references above. Returns one line per
// mismatch; empty means everything checks out. Temperatures are compared
// at a fixed 1e-3 (the references carry 3 decimals), everything else at
// `tol`.
std::vector<std::string> verify_all(const PayoffTable& table, double tol = 1e-9);

}
