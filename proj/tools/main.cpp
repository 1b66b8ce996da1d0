// qgame: three-player entangled-game simulator with a corrupted qubit source.
//
// Subcommands reproduce the class-payoff tables (classical and quantum), the
// payoff-vs-noise sweep behind the crossover figure, the threshold noise
// levels and temperatures, the equilibrium survey, and a golden self-check.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qgame/classes.hpp"
#include "qgame/format.hpp"
#include "qgame/game.hpp"
#include "qgame/golden.hpp"
#include "qgame/noise.hpp"

namespace {

using namespace qgame;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

Mode parse_mode(const std::string& game) {
    return game == "classical" ? Mode::Classical : Mode::Quantum;
}

// "aaa(2)[0] 1" style cell: one 'a' per player on this value, payoff at
// input 0 in (), at input 1 in [], then the x = 0.5 mixture.
std::string slot_cell(const SlotStats& slot) {
    std::string out(static_cast<std::size_t>(slot.player_count), 'a');
    out += "(" + rational_label(slot.payoff_input0) + ")";
    out += "[" + rational_label(slot.payoff_input1) + "]";
    out += " " + rational_label(slot.payoff_mixed);
    return out;
}

std::string render_md(const std::vector<StrategyClass>& rows) {
    std::ostringstream os;
    os << "| Class | p = 0 | p = 1/2 | p = 1 | C | avg | mixed |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const StrategyClass& cls : rows) {
        std::array<std::string, 3> cells = {"-", "-", "-"};
        for (const SlotStats& slot : cls.slots)
            cells[slot.value_index] = slot_cell(slot);
        os << "| (" << class_label(cls.index) << ") | " << cells[0] << " | " << cells[1]
           << " | " << cells[2] << " | " << cls.multiplicity << " | ("
           << rational_label(cls.avg_input0) << ")[" << rational_label(cls.avg_input1)
           << "] | " << rational_label(cls.avg_mixed) << " |\n";
    }
    return os.str();
}

std::string render_csv(const std::vector<StrategyClass>& rows) {
    std::ostringstream os;
    os << "class,C,p0_input0,p0_input1,p0_mixed,phalf_input0,phalf_input1,phalf_mixed,"
          "p1_input0,p1_input1,p1_mixed,avg_input0,avg_input1,avg_mixed\n";
    for (const StrategyClass& cls : rows) {
        std::array<std::string, 9> cells{};  // 3 slots x 3 numbers, empty when absent
        for (const SlotStats& slot : cls.slots) {
            cells[slot.value_index * 3 + 0] = decimal12(slot.payoff_input0);
            cells[slot.value_index * 3 + 1] = decimal12(slot.payoff_input1);
            cells[slot.value_index * 3 + 2] = decimal12(slot.payoff_mixed);
        }
        os << class_label(cls.index) << "," << cls.multiplicity;
        for (const std::string& c : cells)
            os << "," << c;
        os << "," << decimal12(cls.avg_input0) << "," << decimal12(cls.avg_input1) << ","
           << decimal12(cls.avg_mixed) << "\n";
    }
    return os.str();
}

// Round through 12 significant digits so the JSON emitter prints the same
// precision as the CSV.
double round12(double v) { return std::stod(decimal12(v)); }

std::string render_json(const std::vector<StrategyClass>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const StrategyClass& cls : rows) {
        nlohmann::json slots = nlohmann::json::array();
        for (const SlotStats& slot : cls.slots)
            slots.push_back({{"p_value", value_p(slot.value_index)},
                             {"player_count", slot.player_count},
                             {"input0", round12(slot.payoff_input0)},
                             {"input1", round12(slot.payoff_input1)},
                             {"mixed", round12(slot.payoff_mixed)}});
        arr.push_back({{"class_id", std::string(class_label(cls.index))},
                       {"multiplicity", cls.multiplicity},
                       {"slots", slots},
                       {"avg_input0", round12(cls.avg_input0)},
                       {"avg_input1", round12(cls.avg_input1)},
                       {"avg_mixed", round12(cls.avg_mixed)}});
    }
    return arr.dump(2) + "\n";
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return kExitFailure;
    }
    file << text;
    if (!file) {
        std::cerr << "error: failed writing output file: " << out_path << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

struct Selection {
    Mode mode;
    int class_index;
    std::string text;  // as given, echoed in the CSV header
};

std::optional<Selection> parse_selection(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        return std::nullopt;
    const std::string game = text.substr(0, colon);
    const std::string label = text.substr(colon + 1);
    if (game != "classical" && game != "quantum")
        return std::nullopt;
    const int index = class_index_from_label(label);
    if (index < 0)
        return std::nullopt;
    return Selection{parse_mode(game), index, text};
}

int cmd_sweep(double from, double to, double step, const std::vector<std::string>& selects,
              const std::string& out_path) {
    if (!(from >= 0.0 && from < to && to <= 1.0 && step > 0.0)) {
        std::cerr << "error: sweep range must satisfy 0 <= from < to <= 1 with step > 0\n";
        return kExitUsage;
    }
    std::vector<Selection> selections;
    for (const std::string& s : selects) {
        const auto parsed = parse_selection(s);
        if (!parsed) {
            std::cerr << "error: bad selection '" << s
                      << "' (expected <classical|quantum>:<i..x>)\n";
            return kExitUsage;
        }
        selections.push_back(*parsed);
    }

    const PayoffTable table = default_payoff_table();
    const auto classical = build_table(Mode::Classical, table);
    const auto quantum = build_table(Mode::Quantum, table);

    std::ostringstream os;
    os << "x";
    for (const Selection& sel : selections)
        os << "," << sel.text;
    os << "\n";

    const int steps = static_cast<int>(std::floor((to - from) / step + 1e-9));
    for (int k = 0; k <= steps; ++k) {
        const double x = from + k * step;
        os << decimal12(x);
        for (const Selection& sel : selections) {
            const auto& rows = sel.mode == Mode::Classical ? classical : quantum;
            const PayoffLine line = payoff_line(rows[sel.class_index]);
            os << "," << decimal12(line.at(x));
        }
        os << "\n";
    }
    return write_output(os.str(), out_path);
}

int cmd_table(const std::string& game, const std::string& format,
              const std::string& out_path) {
    const auto rows = build_table(parse_mode(game), default_payoff_table());
    std::string text;
    if (format == "md")
        text = render_md(rows);
    else if (format == "csv")
        text = render_csv(rows);
    else
        text = render_json(rows);
    return write_output(text, out_path);
}

int cmd_crossover(const std::string& a_sel, const std::string& b_sel, double delta_e) {
    const auto a = parse_selection(a_sel);
    const auto b = parse_selection(b_sel);
    if (!a || !b) {
        std::cerr << "error: bad class selection (expected <classical|quantum>:<i..x>)\n";
        return kExitUsage;
    }
    const PayoffTable table = default_payoff_table();
    const auto classical = build_table(Mode::Classical, table);
    const auto quantum = build_table(Mode::Quantum, table);
    const auto line_of = [&](const Selection& sel) {
        return payoff_line((sel.mode == Mode::Classical ? classical : quantum)[sel.class_index]);
    };
    const PayoffLine line_a = line_of(*a);
    const PayoffLine line_b = line_of(*b);

    std::cout << "lines: " << a->text << ": " << rational_label(line_a.intercept) << " + ("
              << rational_label(line_a.slope) << ")x;  " << b->text << ": "
              << rational_label(line_b.intercept) << " + (" << rational_label(line_b.slope)
              << ")x\n";

    const auto report = [&](const char* name, std::optional<double> x) {
        std::cout << name;
        if (x) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.6f", *x);
            std::cout << " = " << rational_label(*x) << " ≈ " << buf << "\n";
        } else {
            std::cout << ": no crossing in [0,1]\n";
        }
        return x;
    };
    const auto x_cr = report("x_cr", crossover(line_a, line_b));
    const auto x_minus = report("x_-", crossover(PayoffLine{line_a.at(0.0), 0.0}, line_b));
    const auto x_plus = report("x_+", crossover(PayoffLine{line_a.at(1.0), 0.0}, line_b));

    const auto report_kt = [&](const char* name, const std::optional<double>& x) {
        std::cout << name;
        if (!x) {
            std::cout << ": n/a (no crossing)\n";
            return;
        }
        if (*x <= 0.0) {
            std::cout << " = 0 (zero-temperature limit, x <= 0)\n";
        } else if (*x >= 0.5) {
            std::cout << " unobtainable (x ≥ 1/2)\n";
        } else {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.6f", temperature_from_noise(*x, delta_e));
            if (delta_e == 1.0)
                std::cout << " ≈ " << buf << " ΔE\n";
            else
                std::cout << " ≈ " << buf << " (energy units, ΔE = "
                          << decimal12(delta_e) << ")\n";
        }
    };
    report_kt("k_B T_cr", x_cr);
    report_kt("k_B T_-", x_minus);
    report_kt("k_B T_+", x_plus);
    return kExitOk;
}

int cmd_equilibria(const std::string& game, int input_bit, std::optional<double> noise,
                   double tol) {
    const PayoffTable table = default_payoff_table();
    const Mode mode = parse_mode(game);
    const auto classes = classify(enumerate_profiles(mode));

    const auto class_of = [&](const StrategyProfile& p) -> std::string {
        const std::array<int, 3> values = {value_index(p, 0), value_index(p, 1),
                                           value_index(p, 2)};
        std::array<int, 3> counts{};
        for (int v : values)
            ++counts[v];
        for (const StrategyClass& cls : classes)
            if (cls.value_counts == counts)
                return std::string(class_label(cls.index));
        return "?";
    };

    std::cout << "game=" << game << (noise ? " noise=" + decimal12(*noise)
                                           : " input=" + std::to_string(input_bit))
              << " tol=" << decimal12(tol) << "\n";

    int nash_count = 0;
    for (const StrategyProfile& profile : enumerate_profiles(mode)) {
        const EquilibriumReport report =
            noise ? nash_check(profile, NoiseModel(*noise), table, tol)
                  : nash_check(profile, input_bit != 0, table, tol);
        if (report.is_nash)
            ++nash_count;
        char line[160];
        std::snprintf(line, sizeof(line), "%-12s class=%-5s nash=%-3s fair=%-3s orbit_fair=%s",
                      profile_label(profile).c_str(), class_of(profile).c_str(),
                      report.is_nash ? "yes" : "no",
                      report.fair_within_profile ? "yes" : "no",
                      report.orbit_fair ? "yes" : "no");
        std::cout << line << "\n";
    }
    std::cout << "Nash profiles: " << nash_count << "\n";

    const auto dom = noise ? dominance_check(mode, NoiseModel(*noise), table, tol)
                           : dominance_check(mode, input_bit != 0, table, tol);
    if (dom)
        std::cout << "dominant strategy: p=" << rational_label(value_p(dom->value_index))
                  << (dom->strict ? " (strict)" : " (non-strict)") << "\n";
    else
        std::cout << "dominant strategy: none\n";
    return kExitOk;
}

bool parse_payoff_override(const std::string& text, PayoffTable& table) {
    const auto eq = text.find('=');
    if (eq == std::string::npos)
        return false;
    const std::string outcome = text.substr(0, eq);
    int index = -1;
    if (outcome.size() == 3 && outcome.find_first_not_of("01") == std::string::npos)
        index = 4 * (outcome[0] - '0') + 2 * (outcome[1] - '0') + (outcome[2] - '0');
    else if (outcome.size() == 1 && outcome[0] >= '0' && outcome[0] <= '7')
        index = outcome[0] - '0';
    if (index < 0)
        return false;

    std::istringstream values(text.substr(eq + 1));
    PayoffVector row{};
    char comma = ',';
    if (!(values >> row[0] >> comma >> row[1] >> comma >> row[2]))
        return false;
    table.rows[index] = row;
    return true;
}

int cmd_verify(const std::vector<std::string>& overrides, double tol) {
    PayoffTable table = default_payoff_table();
    for (const std::string& o : overrides) {
        if (!parse_payoff_override(o, table)) {
            std::cerr << "error: bad payoff override '" << o
                      << "' (expected <outcome>=<a,b,c>, outcome as 3 bits or 0..7)\n";
            return kExitUsage;
        }
    }
    const std::vector<std::string> diffs = golden::verify_all(table, tol);
    if (diffs.empty()) {
        std::cout << "[PASS] Table I golden comparison\n"
                  << "[PASS] Table II golden comparison\n"
                  << "[PASS] x=0.5 convergence\n"
                  << "[PASS] entangler-off correspondence\n"
                  << "[PASS] threshold constants\n"
                  << "verify: OK\n";
        return kExitOk;
    }
    for (const std::string& d : diffs)
        std::cout << "[FAIL] " << d << "\n";
    std::cout << "verify: FAIL (" << diffs.size() << " mismatches)\n";
    return kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Three-player quantum-vs-classical game with a corrupted qubit source"};
    app.require_subcommand(1);
    // Let --tol be given after the subcommand name as well.
    app.fallthrough();
    double tol = 1e-9;
    app.add_option("--tol", tol, "Comparison tolerance")->capture_default_str();

    // table
    auto* table_cmd = app.add_subcommand("table", "Print a class-payoff table");
    std::string game = "quantum";
    std::string format = "md";
    std::string out_path;
    table_cmd->add_option("--game", game, "Which game")
        ->required()
        ->check(CLI::IsMember({"classical", "quantum"}));
    table_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "md", "json"}));
    table_cmd->add_option("-o,--out", out_path, "Write to file instead of stdout");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Payoff-vs-noise CSV sweep");
    double from = 0.0, to = 1.0, step = 0.01;
    std::vector<std::string> selects;
    std::string sweep_out;
    sweep_cmd->add_option("--from", from, "Start noise level")->capture_default_str();
    sweep_cmd->add_option("--to", to, "End noise level")->capture_default_str();
    sweep_cmd->add_option("--step", step, "Step size")->capture_default_str();
    sweep_cmd->add_option("--select", selects,
                          "mode:class column (repeatable), e.g. quantum:viii");
    sweep_cmd->add_option("-o,--out", sweep_out, "Write to file instead of stdout");

    // crossover
    auto* cross_cmd = app.add_subcommand("crossover",
                                         "Threshold noise levels and temperatures");
    std::string sel_a = "classical:iv";
    std::string sel_b = "quantum:viii";
    double delta_e = 1.0;
    cross_cmd->add_option("--a", sel_a, "First class line")->capture_default_str();
    cross_cmd->add_option("--b", sel_b, "Second class line")->capture_default_str();
    cross_cmd->add_option("--delta-e", delta_e, "Two-level energy separation")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // equilibria
    auto* eq_cmd = app.add_subcommand("equilibria", "Nash/fairness survey of all 27 profiles");
    std::string eq_game = "quantum";
    int input_bit = 0;
    double noise_x = 0.0;
    eq_cmd->add_option("--game", eq_game, "Which game")
        ->required()
        ->check(CLI::IsMember({"classical", "quantum"}));
    auto* input_opt = eq_cmd->add_option("--input", input_bit, "Pure input bit")
                          ->check(CLI::IsMember({0, 1}));
    auto* noise_opt = eq_cmd->add_option("--noise", noise_x, "Noise level x in [0,1]")
                          ->check(CLI::Range(0.0, 1.0));
    input_opt->excludes(noise_opt);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Golden self-check");
    std::vector<std::string> overrides;
    verify_cmd->add_option("--payoff-override", overrides,
                           "Replace a payoff row, e.g. 111=2,2,3 (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (table_cmd->parsed())
            return cmd_table(game, format, out_path);
        if (sweep_cmd->parsed()) {
            if (selects.empty())
                selects = {"classical:iv", "quantum:viii"};
            return cmd_sweep(from, to, step, selects, sweep_out);
        }
        if (cross_cmd->parsed())
            return cmd_crossover(sel_a, sel_b, delta_e);
        if (eq_cmd->parsed())
            return cmd_equilibria(eq_game, input_bit,
                                  noise_opt->count() > 0 ? std::optional<double>(noise_x)
                                                         : std::nullopt,
                                  tol);
        if (verify_cmd->parsed())
            return cmd_verify(overrides, tol);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
