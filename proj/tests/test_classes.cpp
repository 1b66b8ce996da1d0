#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "qgame/classes.hpp"
#include "qgame/golden.hpp"
#include "oracle.hpp"

using namespace qgame;

namespace {

constexpr double kTol = 1e-9;

constexpr auto SX = QuantumStrategy::PHat0;
constexpr auto H = QuantumStrategy::PHatHalf;
constexpr auto ID = QuantumStrategy::PHat1;

StrategyProfile qprofile(QuantumStrategy a, QuantumStrategy b, QuantumStrategy c) {
    return QuantumProfile{{a, b, c}};
}

StrategyProfile cprofile(double a, double b, double c) {
    return ClassicalProfile{{ClassicalStrategy{a}, ClassicalStrategy{b}, ClassicalStrategy{c}}};
}

void check_against_frozen(const std::vector<StrategyClass>& got,
                          const std::vector<oracle::Row>& want) {
    REQUIRE(got.size() == 10);
    for (int i = 0; i < 10; ++i) {
        INFO("row ", want[i].label);
        CHECK(std::string(class_label(i)) == want[i].label);
        CHECK(got[i].multiplicity == want[i].multiplicity);
        REQUIRE(got[i].slots.size() == want[i].slots.size());
        for (std::size_t s = 0; s < want[i].slots.size(); ++s) {
            const oracle::Slot& w = want[i].slots[s];
            const SlotStats& g = got[i].slots[s];
            CHECK(g.value_index == w.value);
            CHECK(g.player_count == w.players);
            CHECK(g.payoff_input0 == doctest::Approx(w.in0).epsilon(kTol));
            CHECK(g.payoff_input1 == doctest::Approx(w.in1).epsilon(kTol));
            CHECK(g.payoff_mixed == doctest::Approx(w.mixed).epsilon(kTol));
        }
        CHECK(got[i].avg_input0 == doctest::Approx(want[i].avg0).epsilon(kTol));
        CHECK(got[i].avg_input1 == doctest::Approx(want[i].avg1).epsilon(kTol));
        CHECK(got[i].avg_mixed == doctest::Approx(want[i].avg_mixed).epsilon(kTol));
    }
}

} // namespace

TEST_CASE("enumerate_profiles yields 27 distinct profiles in lexicographic order") {
    for (Mode mode : {Mode::Classical, Mode::Quantum}) {
        const auto profiles = enumerate_profiles(mode);
        REQUIRE(profiles.size() == 27);
        CHECK(value_index(profiles[0], 0) == 0);
        CHECK(value_index(profiles[0], 1) == 0);
        CHECK(value_index(profiles[0], 2) == 0);
        std::set<int> keys;
        int last_key = -1;
        for (const StrategyProfile& p : profiles) {
            CHECK(mode_of(p) == mode);
            const int key =
                9 * value_index(p, 0) + 3 * value_index(p, 1) + value_index(p, 2);
            CHECK(key > last_key);  // strictly increasing = lexicographic and distinct
            last_key = key;
            keys.insert(key);
        }
        CHECK(keys.size() == 27);
    }
}

TEST_CASE("classify partitions the 27 profiles into the 10 table-ordered classes") {
    for (Mode mode : {Mode::Classical, Mode::Quantum}) {
        const auto classes = classify(enumerate_profiles(mode));
        REQUIRE(classes.size() == 10);
        int total = 0;
        for (int i = 0; i < 10; ++i) {
            CHECK(classes[i].multiplicity == oracle::multiplicities()[i]);
            CHECK(classes[i].members.size() ==
                  static_cast<std::size_t>(classes[i].multiplicity));
            total += classes[i].multiplicity;
        }
        CHECK(total == 27);
    }
}

TEST_CASE("class membership follows the orbit structure") {
    const auto classes = classify(enumerate_profiles(Mode::Classical));
    // (0,1/2,1) sits in class (viii) with orbit size 6.
    CHECK(classes[7].multiplicity == 6);
    CHECK(classes[7].value_counts == std::array<int, 3>{1, 1, 1});
    // (1/2,1/2,1/2) is its own orbit.
    CHECK(classes[0].multiplicity == 1);
    CHECK(classes[0].value_counts == std::array<int, 3>{0, 3, 0});
}

TEST_CASE("classify rejects anything but the canonical 27-profile list") {
    auto profiles = enumerate_profiles(Mode::Classical);
    profiles.pop_back();
    CHECK_THROWS_AS(classify(profiles), std::invalid_argument);

    profiles = enumerate_profiles(Mode::Classical);
    profiles[3] = profiles[4];  // duplicate
    CHECK_THROWS_AS(classify(profiles), std::invalid_argument);

    profiles = enumerate_profiles(Mode::Classical);
    profiles[3] = qprofile(SX, SX, SX);  // mixed modes
    CHECK_THROWS_AS(classify(profiles), std::invalid_argument);

    profiles = enumerate_profiles(Mode::Classical);
    profiles[3] = cprofile(0.25, 0, 0);  // off-grid value
    CHECK_THROWS_AS(classify(profiles), std::invalid_argument);
}

TEST_CASE("build_table reproduces the frozen classical table") {
    check_against_frozen(build_table(Mode::Classical, default_payoff_table()),
                         oracle::classical_table());
}

TEST_CASE("build_table reproduces the frozen quantum table") {
    check_against_frozen(build_table(Mode::Quantum, default_payoff_table()),
                         oracle::quantum_table());
}

TEST_CASE("embedded golden rows agree with the test-side frozen tables") {
    const auto check = [](const std::vector<golden::GoldenRow>& lib,
                          const std::vector<oracle::Row>& frozen) {
        REQUIRE(lib.size() == frozen.size());
        for (std::size_t i = 0; i < lib.size(); ++i) {
            CHECK(std::string(lib[i].label) == frozen[i].label);
            CHECK(lib[i].multiplicity == frozen[i].multiplicity);
            REQUIRE(lib[i].slots.size() == frozen[i].slots.size());
            for (std::size_t s = 0; s < lib[i].slots.size(); ++s) {
                CHECK(lib[i].slots[s].value_index == frozen[i].slots[s].value);
                CHECK(lib[i].slots[s].player_count == frozen[i].slots[s].players);
                CHECK(lib[i].slots[s].input0 == doctest::Approx(frozen[i].slots[s].in0));
                CHECK(lib[i].slots[s].input1 == doctest::Approx(frozen[i].slots[s].in1));
                CHECK(lib[i].slots[s].mixed == doctest::Approx(frozen[i].slots[s].mixed));
            }
            CHECK(lib[i].avg_input0 == doctest::Approx(frozen[i].avg0));
            CHECK(lib[i].avg_input1 == doctest::Approx(frozen[i].avg1));
            CHECK(lib[i].avg_mixed == doctest::Approx(frozen[i].avg_mixed));
        }
    };
    check(golden::classical_rows(), oracle::classical_table());
    check(golden::quantum_rows(), oracle::quantum_table());
}

TEST_CASE("class averages are consistent with members and the 0.5 mixture") {
    const PayoffTable t = default_payoff_table();
    for (Mode mode : {Mode::Classical, Mode::Quantum}) {
        for (const StrategyClass& cls : build_table(mode, t)) {
            CHECK(cls.avg_mixed ==
                  doctest::Approx(0.5 * (cls.avg_input0 + cls.avg_input1)).epsilon(1e-12));
            for (const StrategyProfile& member : cls.members) {
                const PayoffVector p0 = round_payoff(member, false, t);
                const PayoffVector p1 = round_payoff(member, true, t);
                CHECK((p0[0] + p0[1] + p0[2]) / 3.0 ==
                      doctest::Approx(cls.avg_input0).epsilon(kTol));
                CHECK((p1[0] + p1[1] + p1[2]) / 3.0 ==
                      doctest::Approx(cls.avg_input1).epsilon(kTol));
            }
        }
    }
}

TEST_CASE("quantum classes (vii) and (viii) tie on average but differ on Nash") {
    const PayoffTable t = default_payoff_table();
    const auto quantum = build_table(Mode::Quantum, t);
    CHECK(quantum[6].avg_input0 == doctest::Approx(19.0 / 3).epsilon(kTol));
    CHECK(quantum[7].avg_input0 == doctest::Approx(19.0 / 3).epsilon(kTol));

    CHECK_FALSE(nash_check(qprofile(SX, SX, ID), false, t).is_nash);
    CHECK(nash_check(qprofile(SX, H, ID), false, t).is_nash);
}

TEST_CASE("input swap breaks the quantum table's symmetry: 19/3 appears twice vs once") {
    const auto quantum = build_table(Mode::Quantum, default_payoff_table());
    int at_input0 = 0, at_input1 = 0;
    for (const StrategyClass& cls : quantum) {
        if (std::abs(cls.avg_input0 - 19.0 / 3) <= kTol)
            ++at_input0;
        if (std::abs(cls.avg_input1 - 19.0 / 3) <= kTol)
            ++at_input1;
    }
    CHECK(at_input0 == 2);
    CHECK(at_input1 == 1);
}

TEST_CASE("nash_check confirms the coherent equilibrium and its deviation deltas") {
    const PayoffTable t = default_payoff_table();
    const EquilibriumReport r = nash_check(qprofile(SX, H, ID), false, t);
    CHECK(r.is_nash);
    REQUIRE(r.deviations.size() == 6);
    // Deltas frozen from the class table: (viii) member payoffs (5,9,5).
    const auto delta_of = [&](int player, int to_value) {
        for (const Deviation& d : r.deviations)
            if (d.player == player && d.to_value_index == to_value)
                return d.delta;
        FAIL("missing deviation");
        return 0.0;
    };
    CHECK(delta_of(0, 1) == doctest::Approx(19.0 / 4 - 5.0).epsilon(kTol));
    CHECK(delta_of(0, 2) == doctest::Approx(-7.0 / 2 - 5).epsilon(kTol));
    CHECK(delta_of(1, 0) == doctest::Approx(0.0).epsilon(kTol));
    CHECK(delta_of(1, 2) == doctest::Approx(-9.0 - 9.0).epsilon(kTol));
    CHECK(delta_of(2, 0) == doctest::Approx(-7.0 / 2 - 5).epsilon(kTol));
    CHECK(delta_of(2, 1) == doctest::Approx(-15.0 / 4 - 5).epsilon(kTol));
}

TEST_CASE("all class (viii) members are Nash at input 0; class (vii) members are not") {
    const PayoffTable t = default_payoff_table();
    const auto classes = classify(enumerate_profiles(Mode::Quantum));
    for (const StrategyProfile& member : classes[7].members)
        CHECK(nash_check(member, false, t).is_nash);
    for (const StrategyProfile& member : classes[6].members)
        CHECK_FALSE(nash_check(member, false, t).is_nash);
}

TEST_CASE("brute-force Nash sweep at input 0 finds classes (iv) and (viii) only") {
    const PayoffTable t = default_payoff_table();
    const auto classes = classify(enumerate_profiles(Mode::Quantum));
    std::set<int> nash_classes;
    for (int c = 0; c < 10; ++c)
        for (const StrategyProfile& member : classes[c].members)
            if (nash_check(member, false, t).is_nash)
                nash_classes.insert(c);
    CHECK(nash_classes == std::set<int>{3, 7});
}

TEST_CASE("classical all-flip profile is Nash and p=0 strictly dominant at input 0") {
    const PayoffTable t = default_payoff_table();
    const EquilibriumReport r = nash_check(cprofile(0, 0, 0), false, t);
    CHECK(r.is_nash);
    for (const Deviation& d : r.deviations)
        CHECK(d.delta < 0.0);

    const auto dom = dominance_check(Mode::Classical, false, t);
    REQUIRE(dom.has_value());
    CHECK(dom->value_index == 0);
    CHECK(dom->strict);
}

TEST_CASE("classical dominance flips to p=1 at input 1") {
    const auto dom = dominance_check(Mode::Classical, true, default_payoff_table());
    REQUIRE(dom.has_value());
    CHECK(dom->value_index == 2);
    CHECK(dom->strict);
}

TEST_CASE("the quantum game has no dominant strategy at input 0") {
    const PayoffTable t = default_payoff_table();
    CHECK_FALSE(dominance_check(Mode::Quantum, false, t).has_value());

    // Independent brute-force search over the 27 profiles.
    for (int cand = 0; cand < 3; ++cand) {
        bool dominant = true;
        for (int player = 0; player < 3 && dominant; ++player)
            for (int o1 = 0; o1 < 3 && dominant; ++o1)
                for (int o2 = 0; o2 < 3 && dominant; ++o2)
                    for (int alt = 0; alt < 3 && dominant; ++alt) {
                        std::array<int, 3> with_cand{}, with_alt{};
                        with_cand[player] = cand;
                        with_alt[player] = alt;
                        with_cand[(player + 1) % 3] = with_alt[(player + 1) % 3] = o1;
                        with_cand[(player + 2) % 3] = with_alt[(player + 2) % 3] = o2;
                        const double own = round_payoff(
                            make_profile(Mode::Quantum, with_cand), false, t)[player];
                        const double other = round_payoff(
                            make_profile(Mode::Quantum, with_alt), false, t)[player];
                        if (own < other - kTol)
                            dominant = false;
                    }
        CHECK_FALSE(dominant);
    }
}

TEST_CASE("fairness metrics distinguish equal payoffs from orbit-averaged equality") {
    const PayoffTable t = default_payoff_table();

    const FairnessMetrics hhh = fairness_metrics(qprofile(H, H, H), false, t);
    CHECK(hhh.fair_within_profile);  // all three get -15/4
    CHECK(hhh.orbit_fair);

    const auto quantum_rows = build_table(Mode::Quantum, t);
    const FairnessMetrics class_i = fairness_metrics(quantum_rows[0], false, t);
    CHECK(class_i.fair_within_profile);
    const FairnessMetrics class_viii = fairness_metrics(quantum_rows[7], false, t);
    CHECK_FALSE(class_viii.fair_within_profile);
    CHECK(class_viii.orbit_fair);

    const FairnessMetrics cqe = fairness_metrics(qprofile(SX, H, ID), false, t);
    CHECK_FALSE(cqe.fair_within_profile);  // (5,9,5)
    CHECK(cqe.orbit_fair);                 // each player averages 19/3 over the orbit

    // Orbit average computed directly.
    const auto classes = classify(enumerate_profiles(Mode::Quantum));
    std::array<double, 3> orbit_sum{};
    for (const StrategyProfile& member : classes[7].members) {
        const PayoffVector p = round_payoff(member, false, t);
        for (int i = 0; i < 3; ++i)
            orbit_sum[i] += p[i];
    }
    for (double s : orbit_sum)
        CHECK(s / 6.0 == doctest::Approx(19.0 / 3).epsilon(kTol));
}

TEST_CASE("nash_check at a noise level interpolates the pure-input checks") {
    const PayoffTable t = default_payoff_table();
    const EquilibriumReport at_zero = nash_check(qprofile(SX, H, ID), NoiseModel(0.0), t);
    const EquilibriumReport at_bit = nash_check(qprofile(SX, H, ID), false, t);
    CHECK(at_zero.is_nash == at_bit.is_nash);
    REQUIRE(at_zero.deviations.size() == at_bit.deviations.size());
    for (std::size_t i = 0; i < at_zero.deviations.size(); ++i)
        CHECK(at_zero.deviations[i].delta ==
              doctest::Approx(at_bit.deviations[i].delta).epsilon(1e-12));
}
