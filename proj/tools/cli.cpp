#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "tri/definability.hpp"
#include "tri/operators.hpp"
#include "tri/parser.hpp"
#include "tri/ranking.hpp"
#include "tri/semantics.hpp"

namespace tri::cli {

namespace {

// Raised for malformed inputs that CLI11 cannot see (formulas, literals).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Formula parse_for(const std::string& text, std::size_t n) {
    Formula f = parse(text);
    if (f.var_bound() > n)
        throw UsageError("formula '" + text + "' mentions x" + std::to_string(f.var_bound() - 1) +
                         " but -n is " + std::to_string(n));
    return f;
}

Interpretation literal_for(const std::string& text, std::size_t n) {
    Interpretation w = parse_interpretation(text);
    if (w.size() != n)
        throw UsageError("interpretation '" + text + "' has " + std::to_string(w.size()) +
                         " value(s), expected " + std::to_string(n));
    return w;
}

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

std::string join_worlds(const std::vector<Interpretation>& worlds) {
    std::string out;
    for (const auto& w : worlds) {
        if (!out.empty()) out += ' ';
        out += w.to_string(',');
    }
    return out;
}

std::string describe_pair(const Ranking& phi, const Ranking& theta) {
    return "phi=" + phi.serialize() + " theta=" + theta.serialize();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kleene three-valued modal logic: evaluation, rankings and belief change", "tri"};
    app.require_subcommand(1);

    std::size_t n = 1;
    std::string formula_text, second_text, at_text, op_text = "ci", levels_text, path;
    std::vector<std::string> literals;
    bool machine = false, as_formula = false, include_bot = false;
    std::string variant = "box1";
    std::optional<std::size_t> samples;
    std::uint64_t seed = 1;

    auto add_n = [&](CLI::App* sub) { sub->add_option("-n", n, "variable count")->required(); };

    auto* eval_cmd = app.add_subcommand("eval", "value of a formula at one interpretation");
    add_n(eval_cmd);
    eval_cmd->add_option("formula", formula_text)->required();
    eval_cmd->add_option("--at", at_text, "interpretation, e.g. 1,u,0")->required();

    auto* table_cmd = app.add_subcommand("table", "truth table over all interpretations");
    add_n(table_cmd);
    table_cmd->add_option("formula", formula_text)->required();

    auto* classify_cmd = app.add_subcommand("classify", "models, quasi-models and countermodels");
    add_n(classify_cmd);
    classify_cmd->add_option("formula", formula_text)->required();
    classify_cmd->add_flag("--machine", machine, "one 'interpretation value' line per world");

    auto* capture_cmd = app.add_subcommand("capture", "formula whose models are exactly the given interpretations");
    add_n(capture_cmd);
    capture_cmd->add_option("interpretations", literals);

    auto* encode_cmd = app.add_subcommand("encode-ranking", "formula whose ranking is the given one");
    auto* file_opt = encode_cmd->add_option("file", path, "ranking file, '-' for stdin");
    auto* levels_opt = encode_cmd->add_option("--levels", levels_text, "ranking as level digits, e.g. 321");
    file_opt->excludes(levels_opt);

    auto* revise_cmd = app.add_subcommand("revise", "apply an operator table to two formulas");
    add_n(revise_cmd);
    revise_cmd->add_option("--op", op_text, "9 digits, ci or drastic");
    revise_cmd->add_option("phi", formula_text)->required();
    revise_cmd->add_option("theta", second_text)->required();
    revise_cmd->add_flag("--formula", as_formula, "print the resulting formula instead of its ranking");

    auto* check_cmd = app.add_subcommand("check", "exhaustive postulate checks");
    check_cmd->require_subcommand(1);
    auto* ci_cmd = check_cmd->add_subcommand("ci", "cautious improvement postulates CI1-CI8, CI1', CI2'");
    add_n(ci_cmd);
    ci_cmd->add_option("--samples", samples, "random pairs instead of all pairs");
    ci_cmd->add_option("--seed", seed);
    auto* charac_cmd = check_cmd->add_subcommand("charac", "syntactic characterization of one operator");
    add_n(charac_cmd);
    charac_cmd->add_option("--op", op_text, "9 digits, ci or drastic")->required();
    auto* all_cmd = check_cmd->add_subcommand("all-operators", "characterization of all 3^9 operators");
    add_n(all_cmd);
    all_cmd->add_option("--samples", samples, "random tables also checked on all ranking pairs (default 50)");
    all_cmd->add_option("--seed", seed);

    auto* closure_cmd = app.add_subcommand("closure", "non-definability with a single modality");
    closure_cmd->add_option("--variant", variant)->check(CLI::IsMember({"box1", "box2"}));
    closure_cmd->add_flag("--include-bot", include_bot, "also generate from the ranking of bot");
    closure_cmd->add_flag("--machine", machine, "'ranking IN|OUT' lines and a verdict");

    std::vector<const char*> argv{"tri"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "tri: " << e.what() << '\n';
        return 2;
    }

    std::ostringstream buf;
    int status = 0;
    try {
        if (*eval_cmd) {
            const Formula f = parse_for(formula_text, n);
            buf << to_char(eval(f, literal_for(at_text, n))) << '\n';
        } else if (*table_cmd) {
            buf << truth_table(parse_for(formula_text, n), n);
        } else if (*classify_cmd) {
            const Formula f = parse_for(formula_text, n);
            if (machine) {
                const TruthColumn col = eval_all(f, n);
                for (std::size_t w = 0; w < col.size(); ++w)
                    buf << Interpretation::from_index(w, n).to_string(',') << ' ' << to_char(col[w]) << '\n';
            } else {
                const Classification c = classify(f, n);
                buf << "models: " << join_worlds(c.models) << '\n'
                    << "quasi-models: " << join_worlds(c.quasi_models) << '\n'
                    << "countermodels: " << join_worlds(c.countermodels) << '\n';
            }
        } else if (*capture_cmd) {
            std::vector<Interpretation> worlds;
            for (const auto& lit : literals) worlds.push_back(literal_for(lit, n));
            if (n == 0 && !worlds.empty()) throw UsageError("capture needs at least one variable");
            buf << render(capture_set(worlds, n)) << '\n';
        } else if (*encode_cmd) {
            if (path.empty() && levels_text.empty()) throw UsageError("encode-ranking needs a file or --levels");
            const Ranking r = levels_text.empty() ? parse_ranking_file(read_text(path)) : Ranking::parse(levels_text);
            buf << render(formula_of_ranking(r)) << '\n';
        } else if (*revise_cmd) {
            const OperatorTable t = OperatorTable::parse(op_text);
            const Formula f = parse_for(formula_text, n);
            const Formula g = parse_for(second_text, n);
            if (n == 0) throw UsageError("revise needs at least one variable");
            const Ranking r = apply_semantic(t, ranking_of_formula(f, n), ranking_of_formula(g, n));
            if (as_formula)
                buf << render(formula_of_ranking(r)) << '\n';
            else
                buf << r.to_file();
        } else if (*ci_cmd) {
            PairSampling sampling{samples, seed};
            if (!samples && n >= 2) sampling.samples = 1000;
            const CiReport report = check_ci_postulates(n, sampling);
            for (const auto& r : report.results) {
                buf << r.name << (r.holds ? " PASS" : " FAIL");
                if (r.witness) buf << " (" << describe_pair(r.witness->phi, r.witness->theta) << ')';
                buf << '\n';
            }
            if (!report.ci1_prime_truth_table.holds && report.ci1_prime_cell)
                buf << "note: CI1' does not hold as truth-table equality; differs at phi="
                    << to_char(report.ci1_prime_cell->first) << " theta=" << to_char(report.ci1_prime_cell->second)
                    << '\n';
            buf << "pairs checked: " << report.pairs << (sampling.samples ? " (sampled)" : " (all)") << '\n';
            status = report.all_hold() ? 0 : 1;
        } else if (*charac_cmd) {
            const OperatorTable t = OperatorTable::parse(op_text);
            const CharacterizationReport report = check_characterization(t, n);
            buf << "operator " << t.serialize() << '\n'
                << "postulates sound: " << (report.sound ? "PASS" : "FAIL");
            if (report.failure)
                buf << " (" << describe_pair(report.failure->phi, report.failure->theta) << " level "
                    << index_of(report.failure->target) << ')';
            buf << '\n'
                << "table reconstructed: " << (report.unique ? "PASS" : "FAIL") << '\n'
                << "pairs checked: " << report.pairs_checked << '\n';
            status = report.holds() ? 0 : 1;
        } else if (*all_cmd) {
            const SweepReport report = sweep_all_operators(n, samples.value_or(50), seed);
            buf << "operators: " << report.tables << " cell-checked, " << report.full_checks
                << " checked on all ranking pairs, " << report.failures.size() << " failure(s)\n";
            for (const auto& t : report.failures) buf << "FAIL " << t.serialize() << '\n';
            status = report.failures.empty() ? 0 : 1;
        } else if (*closure_cmd) {
            const auto v = variant == "box1" ? ModalVariant::Box1 : ModalVariant::Box2;
            const NonDefinabilityReport report = verify_nondefinability(v, include_bot);
            buf << render_report(report, machine);
            status = report.disjoint ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "tri: " << e.what() << '\n';
        return 2;
    }
    out << buf.str();
    return status;
}

}  // namespace tri::cli
