#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "qgame/game.hpp"

// Enumeration of the 27 strategy profiles per mode, reduction to the 10
// permutation classes, full class-payoff tables, and equilibrium analysis
// over the restricted three-value strategy sets.

namespace qgame {

// Strategy values are indexed 0, 1, 2 for p = 0, 1/2, 1 (equivalently the
// sigma_x, Hadamard and identity gate labels).
inline constexpr int kNumValues = 3;

double value_p(int value_index);
int value_index(const StrategyProfile& profile, int player);
StrategyProfile make_profile(Mode mode, const std::array<int, 3>& values);

// Average payoff of a player holding a given strategy value within a class
// orbit: the "a(...)[...]"-cell of a table row.
struct SlotStats {
    int value_index{};
    int player_count{};
    double payoff_input0{};
    double payoff_input1{};
    double payoff_mixed{};  // x = 0.5 mixture
};

struct StrategyClass {
    Mode mode{};
    int index{};                      // 0..9 in table row order
    std::array<int, 3> value_counts{};  // players holding p = 0, 1/2, 1
    int multiplicity{};               // orbit size C
    std::vector<StrategyProfile> members;  // in enumeration order
    std::vector<SlotStats> slots;     // value order, only occupied values
    double avg_input0{};
    double avg_input1{};
    double avg_mixed{};
};

// Roman row labels "i".."x".
std::string_view class_label(int index);
// -1 when the label is not one of "i".."x".
int class_index_from_label(std::string_view label);

// All 27 ordered triples over the mode's three-value strategy set, in
// lexicographic order with value order 0 < 1/2 < 1.
std::vector<StrategyProfile> enumerate_profiles(Mode mode);

// Partition into the 10 permutation classes in table row order. The input
// must be exactly the canonical 27 profiles of one mode (any order);
// otherwise throws std::invalid_argument. Payoff fields are left NaN.
std::vector<StrategyClass> classify(const std::vector<StrategyProfile>& profiles);

// classify() plus per-slot payoffs for input 0, input 1 and the x = 0.5
// mixture, and the class averages over players.
std::vector<StrategyClass> build_table(Mode mode, const PayoffTable& table);

struct Deviation {
    int player{};          // 0-based
    int to_value_index{};
    double delta{};        // deviating player's payoff change
};

struct EquilibriumReport {
    StrategyProfile profile;
    bool is_nash{};
    std::vector<Deviation> deviations;  // all 6 unilateral deviations
    bool fair_within_profile{};
    bool orbit_fair{};
};

struct FairnessMetrics {
    bool fair_within_profile{};
    bool orbit_fair{};
};

// Deviations are searched within the mode's three-value strategy set; a
// deviation counts as improving only if delta > tol. The NoiseModel
// overloads evaluate payoffs at the given corruption rate x, with pure
// inputs recovered at x = 0 and x = 1.
EquilibriumReport nash_check(const StrategyProfile& profile, bool input_bit,
                             const PayoffTable& table, double tol = 1e-9);
EquilibriumReport nash_check(const StrategyProfile& profile, const NoiseModel& noise,
                             const PayoffTable& table, double tol = 1e-9);

struct DominantStrategy {
    int value_index{};
    bool strict{};
};

// A strategy that is a best response against all 9 opponent pairs for every
// player, if one exists. Candidates are scanned in value order, so the
// report is deterministic; non-strict dominance is flagged explicitly.
std::optional<DominantStrategy> dominance_check(Mode mode, bool input_bit,
                                                const PayoffTable& table,
                                                double tol = 1e-9);
std::optional<DominantStrategy> dominance_check(Mode mode, const NoiseModel& noise,
                                                const PayoffTable& table,
                                                double tol = 1e-9);

// fair_within_profile: the three expected payoffs of this profile coincide.
// orbit_fair: each player's payoff averaged over the profile's permutation
// orbit coincides across players.
FairnessMetrics fairness_metrics(const StrategyProfile& profile, bool input_bit,
                                 const PayoffTable& table, double tol = 1e-9);
FairnessMetrics fairness_metrics(const StrategyProfile& profile, const NoiseModel& noise,
                                 const PayoffTable& table, double tol = 1e-9);
// Class forms evaluate a representative member; both metrics are invariant
// under the orbit for permutation-covariant tables.
FairnessMetrics fairness_metrics(const StrategyClass& cls, bool input_bit,
                                 const PayoffTable& table, double tol = 1e-9);
FairnessMetrics fairness_metrics(const StrategyClass& cls, const NoiseModel& noise,
                                 const PayoffTable& table, double tol = 1e-9);

}
