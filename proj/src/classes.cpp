#include "qgame/classes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qgame {

namespace {

// Row order of the printed tables, keyed by (count of p=0, p=1/2, p=1).
constexpr std::array<std::array<int, 3>, 10> kClassCounts = {{
    {0, 3, 0},  // i
    {1, 2, 0},  // ii
    {2, 1, 0},  // iii
    {3, 0, 0},  // iv
    {0, 0, 3},  // v
    {1, 0, 2},  // vi
    {2, 0, 1},  // vii
    {1, 1, 1},  // viii
    {0, 2, 1},  // ix
    {0, 1, 2},  // x
}};

constexpr std::array<std::string_view, 10> kClassLabels = {
    "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x"};

int class_index_of_counts(const std::array<int, 3>& counts) {
    for (int i = 0; i < 10; ++i)
        if (kClassCounts[i] == counts)
            return i;
    return -1;
}

std::array<int, 3> profile_values(const StrategyProfile& profile) {
    return {value_index(profile, 0), value_index(profile, 1), value_index(profile, 2)};
}

PayoffVector payoff_at(const StrategyProfile& profile, double x, const PayoffTable& table) {
    return mixed_payoff(profile, NoiseModel(x), table);
}

} // namespace

double value_p(int idx) {
    switch (idx) {
    case 0: return 0.0;
    case 1: return 0.5;
    case 2: return 1.0;
    }
    throw std::out_of_range("value_p: index outside 0..2");
}

int value_index(const StrategyProfile& profile, int player) {
    return std::visit(
        [player](const auto& p) {
            const double v = p_value(p.s[player]);
            if (v == 0.0) return 0;
            if (v == 0.5) return 1;
            if (v == 1.0) return 2;
            throw std::invalid_argument("value_index: strategy not in {0, 1/2, 1}");
        },
        profile);
}

StrategyProfile make_profile(Mode mode, const std::array<int, 3>& values) {
    if (mode == Mode::Classical) {
        ClassicalProfile p;
        for (int i = 0; i < 3; ++i)
            p.s[i] = ClassicalStrategy{value_p(values[i])};
        return p;
    }
    QuantumProfile p;
    for (int i = 0; i < 3; ++i)
        p.s[i] = static_cast<QuantumStrategy>(values[i]);
    return p;
}

std::string_view class_label(int index) { return kClassLabels.at(index); }

int class_index_from_label(std::string_view label) {
    for (int i = 0; i < 10; ++i)
        if (kClassLabels[i] == label)
            return i;
    return -1;
}

std::vector<StrategyProfile> enumerate_profiles(Mode mode) {
    std::vector<StrategyProfile> out;
    out.reserve(27);
    for (int a = 0; a < kNumValues; ++a)
        for (int b = 0; b < kNumValues; ++b)
            for (int c = 0; c < kNumValues; ++c)
                out.push_back(make_profile(mode, {a, b, c}));
    return out;
}

std::vector<StrategyClass> classify(const std::vector<StrategyProfile>& profiles) {
    if (profiles.size() != 27)
        throw std::invalid_argument("classify: expected exactly 27 profiles");

    const Mode mode = mode_of(profiles.front());
    std::array<bool, 27> seen{};
    for (const StrategyProfile& p : profiles) {
        if (mode_of(p) != mode)
            throw std::invalid_argument("classify: mixed strategy modes");
        const auto v = profile_values(p);
        const int key = 9 * v[0] + 3 * v[1] + v[2];
        if (seen[key])
            throw std::invalid_argument("classify: duplicate profile");
        seen[key] = true;
    }

    std::vector<StrategyClass> classes(10);
    for (int i = 0; i < 10; ++i) {
        classes[i].mode = mode;
        classes[i].index = i;
        classes[i].value_counts = kClassCounts[i];
        const double nan = std::numeric_limits<double>::quiet_NaN();
        classes[i].avg_input0 = classes[i].avg_input1 = classes[i].avg_mixed = nan;
    }

    for (const StrategyProfile& p : enumerate_profiles(mode)) {
        const auto v = profile_values(p);
        std::array<int, 3> counts{};
        for (int i = 0; i < 3; ++i)
            ++counts[v[i]];
        classes[class_index_of_counts(counts)].members.push_back(p);
    }
    for (StrategyClass& c : classes)
        c.multiplicity = static_cast<int>(c.members.size());
    return classes;
}

std::vector<StrategyClass> build_table(Mode mode, const PayoffTable& table) {
    std::vector<StrategyClass> classes = classify(enumerate_profiles(mode));
    for (StrategyClass& cls : classes) {
        // Per-value payoff sums over all orbit members and players.
        std::array<double, 3> sum0{}, sum1{};
        double total0 = 0.0, total1 = 0.0;
        for (const StrategyProfile& member : cls.members) {
            const PayoffVector pay0 = round_payoff(member, false, table);
            const PayoffVector pay1 = round_payoff(member, true, table);
            for (int player = 0; player < 3; ++player) {
                const int v = value_index(member, player);
                sum0[v] += pay0[player];
                sum1[v] += pay1[player];
                total0 += pay0[player];
                total1 += pay1[player];
            }
        }
        for (int v = 0; v < kNumValues; ++v) {
            if (cls.value_counts[v] == 0)
                continue;
            const double n = cls.value_counts[v] * cls.multiplicity;
            SlotStats slot;
            slot.value_index = v;
            slot.player_count = cls.value_counts[v];
            slot.payoff_input0 = sum0[v] / n;
            slot.payoff_input1 = sum1[v] / n;
            slot.payoff_mixed = 0.5 * (slot.payoff_input0 + slot.payoff_input1);
            cls.slots.push_back(slot);
        }
        cls.avg_input0 = total0 / (3.0 * cls.multiplicity);
        cls.avg_input1 = total1 / (3.0 * cls.multiplicity);
        cls.avg_mixed = 0.5 * (cls.avg_input0 + cls.avg_input1);
    }
    return classes;
}

namespace {

bool all_equal(const std::array<double, 3>& v, double tol) {
    return std::abs(v[0] - v[1]) <= tol && std::abs(v[0] - v[2]) <= tol &&
           std::abs(v[1] - v[2]) <= tol;
}

FairnessMetrics fairness_at(const StrategyProfile& profile, double x,
                            const PayoffTable& table, double tol) {
    FairnessMetrics f;
    f.fair_within_profile = all_equal(payoff_at(profile, x, table), tol);

    const Mode mode = mode_of(profile);
    const auto values = profile_values(profile);
    std::array<double, 3> orbit_sum{};
    int orbit_size = 0;
    std::array<int, 3> perm = {0, 1, 2};
    std::vector<std::array<int, 3>> distinct;
    do {
        const std::array<int, 3> arranged = {values[perm[0]], values[perm[1]],
                                             values[perm[2]]};
        if (std::find(distinct.begin(), distinct.end(), arranged) != distinct.end())
            continue;
        distinct.push_back(arranged);
        const PayoffVector pay = payoff_at(make_profile(mode, arranged), x, table);
        for (int i = 0; i < 3; ++i)
            orbit_sum[i] += pay[i];
        ++orbit_size;
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (double& s : orbit_sum)
        s /= orbit_size;
    f.orbit_fair = all_equal(orbit_sum, tol);
    return f;
}

EquilibriumReport nash_check_at(const StrategyProfile& profile, double x,
                                const PayoffTable& table, double tol) {
    EquilibriumReport report;
    report.profile = profile;

    const Mode mode = mode_of(profile);
    const auto values = profile_values(profile);
    const PayoffVector base = payoff_at(profile, x, table);

    report.is_nash = true;
    for (int player = 0; player < 3; ++player) {
        for (int alt = 0; alt < kNumValues; ++alt) {
            if (alt == values[player])
                continue;
            auto deviated = values;
            deviated[player] = alt;
            const PayoffVector pay = payoff_at(make_profile(mode, deviated), x, table);
            const double delta = pay[player] - base[player];
            report.deviations.push_back({player, alt, delta});
            if (delta > tol)
                report.is_nash = false;
        }
    }

    const FairnessMetrics fair = fairness_at(profile, x, table, tol);
    report.fair_within_profile = fair.fair_within_profile;
    report.orbit_fair = fair.orbit_fair;
    return report;
}

std::optional<DominantStrategy> dominance_check_at(Mode mode, double x,
                                                   const PayoffTable& table, double tol) {
    for (int cand = 0; cand < kNumValues; ++cand) {
        bool dominant = true;
        bool strict = true;
        for (int player = 0; player < 3 && dominant; ++player) {
            for (int o1 = 0; o1 < kNumValues && dominant; ++o1) {
                for (int o2 = 0; o2 < kNumValues && dominant; ++o2) {
                    std::array<int, 3> values{};
                    values[(player + 1) % 3] = o1;
                    values[(player + 2) % 3] = o2;
                    values[player] = cand;
                    const double own =
                        payoff_at(make_profile(mode, values), x, table)[player];
                    for (int alt = 0; alt < kNumValues; ++alt) {
                        if (alt == cand)
                            continue;
                        values[player] = alt;
                        const double other =
                            payoff_at(make_profile(mode, values), x, table)[player];
                        values[player] = cand;
                        if (own < other - tol) {
                            dominant = false;
                            break;
                        }
                        if (own <= other + tol)
                            strict = false;
                    }
                }
            }
        }
        if (dominant)
            return DominantStrategy{cand, strict};
    }
    return std::nullopt;
}

} // namespace

EquilibriumReport nash_check(const StrategyProfile& profile, bool input_bit,
                             const PayoffTable& table, double tol) {
    return nash_check_at(profile, input_bit ? 1.0 : 0.0, table, tol);
}

EquilibriumReport nash_check(const StrategyProfile& profile, const NoiseModel& noise,
                             const PayoffTable& table, double tol) {
    return nash_check_at(profile, noise.x(), table, tol);
}

std::optional<DominantStrategy> dominance_check(Mode mode, bool input_bit,
                                                const PayoffTable& table, double tol) {
    return dominance_check_at(mode, input_bit ? 1.0 : 0.0, table, tol);
}

std::optional<DominantStrategy> dominance_check(Mode mode, const NoiseModel& noise,
                                                const PayoffTable& table, double tol) {
    return dominance_check_at(mode, noise.x(), table, tol);
}

FairnessMetrics fairness_metrics(const StrategyProfile& profile, bool input_bit,
                                 const PayoffTable& table, double tol) {
    return fairness_at(profile, input_bit ? 1.0 : 0.0, table, tol);
}

FairnessMetrics fairness_metrics(const StrategyProfile& profile, const NoiseModel& noise,
                                 const PayoffTable& table, double tol) {
    return fairness_at(profile, noise.x(), table, tol);
}

namespace {

const StrategyProfile& representative(const StrategyClass& cls) {
    if (cls.members.empty())
        throw std::invalid_argument("fairness_metrics: class has no members");
    return cls.members.front();
}

} // namespace

FairnessMetrics fairness_metrics(const StrategyClass& cls, bool input_bit,
                                 const PayoffTable& table, double tol) {
    return fairness_at(representative(cls), input_bit ? 1.0 : 0.0, table, tol);
}

FairnessMetrics fairness_metrics(const StrategyClass& cls, const NoiseModel& noise,
                                 const PayoffTable& table, double tol) {
    return fairness_at(representative(cls), noise.x(), table, tol);
}

}
