// domord — exact verification tools for the dominance order, total
// non-negativity, and ball-filling probabilities.
//
// Exit codes: 0 = property holds / computation done, 1 = property refuted
// (witness in the report), 2 = usage or precondition error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "domord/domord.hpp"

namespace {

using domord::json;

constexpr int kExitHolds = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
    std::string out_path;  // empty = stdout
    int threads = domord::default_thread_count();
};

// Reports embed the config that produced them; re-running a config must
// reproduce the report byte for byte, so nothing time- or host-dependent
// goes in here.
void emit(const GlobalOpts& g, const json& config, const json& result) {
    json report{{"config", config}, {"result", result}};
    std::string text = report.dump(2);
    text += '\n';
    if (g.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(g.out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output path " + g.out_path);
        out << text;
    }
}

domord::SequenceView parse_seq_arg(const std::string& lit, bool infinite) {
    return domord::parse_sequence(lit, /*finite=*/!infinite);
}

int run_preset_sec5_uniform013(const GlobalOpts& g) {
    domord::DistributionSpec y = domord::make_distribution("pmf:0=1/3,1=1/3,3=1/3");
    domord::Partition lhs({4, 2}), rhs({3, 3});
    domord::Rational p_lhs = domord::event_probability(y, {lhs, 12, 6});
    domord::Rational p_rhs = domord::event_probability(y, {rhs, 12, 6});
    domord::ConditionReport rep = domord::condition_C(lhs, rhs, y);
    json result{{"dist", "pmf:0=1/3,1=1/3,3=1/3"},
                {"lhs", domord::to_json(lhs)},
                {"rhs", domord::to_json(rhs)},
                {"P_lhs_12_6", domord::format_rational(p_lhs)},
                {"P_rhs_12_6", domord::format_rational(p_rhs)},
                {"condition", domord::to_json(rep)},
                {"dominates", domord::dominates(lhs, rhs)}};
    emit(g, json{{"command", "preset"}, {"name", "sec5-uniform013"}}, result);
    return rep.holds ? kExitHolds : kExitRefuted;
}

int run_preset_sec5_qfamily(const GlobalOpts& g) {
    domord::Partition lhs({4, 2}), rhs({3, 3});
    auto family = [](const domord::Rational& q) {
        std::map<int, domord::Rational> pmf;
        domord::Rational third = q / 3;
        if (third > 0) {
            pmf[0] = third;
            pmf[1] = third;
            pmf[3] = third;
        }
        if (q != 1) pmf[2] = domord::Rational(1) - q;
        return domord::DistributionSpec(std::move(pmf));
    };
    auto diff_at = [&](const domord::Rational& q) -> domord::Rational {
        domord::DistributionSpec x = family(q);
        return domord::event_probability(x, {domord::Partition({4, 2}), 12, 6}) -
               domord::event_probability(x, {domord::Partition({3, 3}), 12, 6});
    };

    json grid = json::array();
    std::optional<domord::Rational> first_violation;
    for (int num = 1; num <= 19; ++num) {
        domord::Rational q = domord::rational(num, 20);
        domord::Rational d = diff_at(q);
        grid.push_back(json{{"q", domord::format_rational(q)},
                            {"P_lhs_minus_P_rhs", domord::format_rational(d)},
                            {"violates", d > 0}});
        if (d > 0 && !first_violation) first_violation = q;
        std::cerr << "q=" << domord::format_rational(q)
                  << (d > 0 ? " violates" : " holds") << "\n";
    }

    // refinement toward q = 1 on the 1/100 grid, exploratory
    json refined = json::array();
    std::optional<domord::Rational> refined_first;
    for (int num = 95; num <= 99; ++num) {
        domord::Rational q = domord::rational(num, 100);
        domord::Rational d = diff_at(q);
        refined.push_back(json{{"q", domord::format_rational(q)},
                               {"P_lhs_minus_P_rhs", domord::format_rational(d)},
                               {"violates", d > 0}});
        if (d > 0 && !refined_first) refined_first = q;
    }

    json result{{"lhs", domord::to_json(lhs)},
                {"rhs", domord::to_json(rhs)},
                {"j", 12},
                {"t", 6},
                {"grid", std::move(grid)},
                {"grid_has_violation", first_violation.has_value()},
                {"refined_scan", std::move(refined)},
                {"exploratory", true}};
    if (first_violation)
        result["first_violating_q"] = domord::format_rational(*first_violation);
    if (refined_first)
        result["refined_first_violating_q"] = domord::format_rational(*refined_first);
    emit(g, json{{"command", "preset"}, {"name", "sec5-qfamily"}}, result);
    return kExitHolds;
}

int run_preset_lemma23(const GlobalOpts& g) {
    domord::SequenceView unimodal_not_lc = domord::parse_sequence("2,3,5,9,17");
    domord::SequenceView lc_not_tn2 = domord::parse_sequence("1,0,0,1,1");
    json result{
        {"unimodal_not_log_concave",
         {{"seq", "2,3,5,9,17"}, {"shape", domord::to_json(domord::shape(unimodal_not_lc))}}},
        {"log_concave_not_tn2",
         {{"seq", "1,0,0,1,1"},
          {"shape", domord::to_json(domord::shape(lc_not_tn2))},
          {"tn2", domord::to_json(domord::tn2_via_char(lc_not_tn2, 4))}}}};
    emit(g, json{{"command", "preset"}, {"name", "lemma23-counterexamples"}}, result);
    return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dominance-order and total-non-negativity toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--out", g.out_path, "write the JSON report to this path (default stdout)");
    app.add_option("--threads", g.threads,
                   "worker thread cap (default: DOMORD_THREADS or hardware)");

    // dominance
    std::string dom_lhs, dom_rhs;
    CLI::App* dominance = app.add_subcommand("dominance", "does lhs dominate rhs?");
    dominance->add_option("--lhs", dom_lhs, "parts, e.g. 3,1")->required();
    dominance->add_option("--rhs", dom_rhs, "parts, e.g. 2,2")->required();

    // dual
    std::string dual_input;
    CLI::App* dual_cmd = app.add_subcommand("dual", "conjugate partition");
    dual_cmd->add_option("--input", dual_input, "partition parts")->required();

    // hasse
    int hasse_n = 0;
    CLI::App* hasse = app.add_subcommand("hasse", "cover edges of the dominance order on P_n");
    hasse->add_option("--n", hasse_n, "weight")->required()->check(CLI::NonNegativeNumber);

    // prob
    std::string prob_dist, prob_shape;
    int prob_total = 0, prob_cap = 0;
    CLI::App* prob = app.add_subcommand("prob", "exact ball-filling probability");
    prob->add_option("--dist", prob_dist, "uniform:r | binomial:m:p | pmf:k=mass,...")->required();
    prob->add_option("--shape", prob_shape, "partition parts")->required();
    prob->add_option("--total", prob_total, "total ball count j")->required();
    prob->add_option("--cap", prob_cap, "per-row cap t")->required();

    // condition
    std::string cond_dist, cond_seq, cond_lhs, cond_rhs;
    CLI::App* condition = app.add_subcommand("condition", "decide C(lhs, rhs, X) exactly");
    condition->add_option("--dist", cond_dist, "distribution literal");
    condition->add_option("--seq", cond_seq,
                          "unnormalized non-negative coefficients (needs |lhs| = |rhs|)");
    condition->add_option("--lhs", cond_lhs)->required();
    condition->add_option("--rhs", cond_rhs)->required();

    // equivalence
    std::string equiv_dist;
    int equiv_n = 0;
    bool equiv_no_table = false;
    CLI::App* equivalence =
        app.add_subcommand("equivalence", "dominance vs condition over all pairs in P_n");
    equivalence->add_option("--dist", equiv_dist)->required();
    equivalence->add_option("--n", equiv_n)->required()->check(CLI::NonNegativeNumber);
    equivalence->add_flag("--no-table", equiv_no_table, "omit the full truth table");

    // mc
    std::string mc_dist, mc_shape;
    int mc_total = 0, mc_cap = 0;
    std::uint64_t mc_trials = 100000, mc_seed = 1;
    CLI::App* mc = app.add_subcommand("mc", "seeded Monte Carlo cross-check");
    mc->add_option("--dist", mc_dist)->required();
    mc->add_option("--shape", mc_shape)->required();
    mc->add_option("--total", mc_total)->required();
    mc->add_option("--cap", mc_cap)->required();
    mc->add_option("--trials", mc_trials);
    mc->add_option("--seed", mc_seed);

    // tn-check
    std::string tn_seq, tn_matrix = "toeplitz";
    int tn_k = 3, tn_rows = 6, tn_cols = 20;
    bool tn_strict = false, tn_infinite = false;
    CLI::App* tn_check = app.add_subcommand("tn-check", "windowed TN_k / TP_k certification");
    tn_check->add_option("--seq", tn_seq, "coefficient prefix")->required();
    tn_check->add_option("--matrix", tn_matrix, "toeplitz | power")
        ->check(CLI::IsMember({"toeplitz", "power"}));
    tn_check->add_option("--k", tn_k, "max minor order (default 3)");
    tn_check->add_option("--rows", tn_rows, "row window bound (default 6)");
    tn_check->add_option("--cols", tn_cols, "column window bound (default 20)");
    tn_check->add_flag("--strict", tn_strict, "require minors > 0 (TP)");
    tn_check->add_flag("--infinite", tn_infinite,
                       "treat the prefix as a window of an infinite-support sequence");

    // tn2-char
    std::string tn2_seq;
    int tn2_bound = -1;
    bool tn2_infinite = false;
    CLI::App* tn2 = app.add_subcommand("tn2-char", "TN_2 via the product characterization");
    tn2->add_option("--seq", tn2_seq)->required();
    tn2->add_option("--bound", tn2_bound, "index bound (default: prefix end)");
    tn2->add_flag("--infinite", tn2_infinite);

    // shape
    std::string shape_seq;
    bool shape_infinite = false;
    CLI::App* shape_cmd = app.add_subcommand("shape", "unimodality and log-concavity");
    shape_cmd->add_option("--seq", shape_seq)->required();
    shape_cmd->add_flag("--infinite", shape_infinite);

    // transfer-identity
    std::string ti_seq, ti_rows, ti_cols;
    CLI::App* transfer = app.add_subcommand("transfer-identity",
                                            "minor expansion identity at one index pair");
    transfer->add_option("--seq", ti_seq)->required();
    transfer->add_option("--rows", ti_rows, "strictly increasing, first >= 1")->required();
    transfer->add_option("--cols", ti_cols, "strictly increasing")->required();

    // conjecture
    int cj_A = 2, cj_a = 2, cj_B = -1, cj_b = -1;
    bool cj_mappings = false;
    CLI::App* conjecture =
        app.add_subcommand("conjecture", "injection search (single cell or full sweep)");
    conjecture->add_option("--A", cj_A)->required();
    conjecture->add_option("--a", cj_a)->required();
    conjecture->add_option("--B", cj_B, "fix B for a single cell");
    conjecture->add_option("--b", cj_b, "fix b for a single cell");
    conjecture->add_flag("--mappings", cj_mappings, "include witness mappings in the report");

    // preset
    std::string preset_name;
    CLI::App* preset = app.add_subcommand("preset", "named demos");
    preset->add_option("name", preset_name, "sec5-uniform013 | sec5-qfamily | lemma23-counterexamples")
        ->required();

    // --out / --threads are app-level; let them appear after the subcommand
    for (CLI::App* sub : {dominance, dual_cmd, hasse, prob, condition, equivalence, mc,
                          tn_check, tn2, shape_cmd, transfer, conjecture, preset})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*dominance) {
            domord::Composition lhs = domord::parse_composition(dom_lhs);
            domord::Composition rhs = domord::parse_composition(dom_rhs);
            bool dom = domord::dominates(lhs, rhs);
            emit(g, json{{"command", "dominance"}, {"lhs", dom_lhs}, {"rhs", dom_rhs}},
                 json{{"dominates", dom}});
            return dom ? kExitHolds : kExitRefuted;
        }
        if (*dual_cmd) {
            domord::Partition p = domord::parse_partition(dual_input);
            emit(g, json{{"command", "dual"}, {"input", dual_input}},
                 json{{"dual", domord::to_json(domord::dual(p))}});
            return kExitHolds;
        }
        if (*hasse) {
            std::vector<domord::Partition> ps = domord::enumerate_partitions(hasse_n);
            json edges = json::array();
            for (const domord::Partition& upper : ps)
                for (const domord::Partition& lower : ps)
                    if (domord::covers(upper, lower))
                        edges.push_back(json{domord::to_json(upper), domord::to_json(lower)});
            emit(g, json{{"command", "hasse"}, {"n", hasse_n}},
                 json{{"partitions", ps.size()}, {"cover_edges", std::move(edges)}});
            return kExitHolds;
        }
        if (*prob) {
            domord::DistributionSpec x = domord::make_distribution(prob_dist);
            domord::EventQuery q{domord::parse_partition(prob_shape), prob_total, prob_cap};
            domord::Rational value = domord::event_probability(x, q);
            emit(g,
                 json{{"command", "prob"},
                      {"dist", prob_dist},
                      {"shape", prob_shape},
                      {"total", prob_total},
                      {"cap", prob_cap}},
                 json{{"probability", domord::format_rational(value)}});
            return kExitHolds;
        }
        if (*condition) {
            if (cond_dist.empty() == cond_seq.empty())
                throw std::invalid_argument("condition: give exactly one of --dist or --seq");
            domord::Partition lhs = domord::parse_partition(cond_lhs);
            domord::Partition rhs = domord::parse_partition(cond_rhs);
            domord::ConditionReport rep;
            json config{{"command", "condition"}, {"lhs", cond_lhs}, {"rhs", cond_rhs}};
            if (!cond_dist.empty()) {
                config["dist"] = cond_dist;
                rep = domord::condition_C(lhs, rhs, domord::make_distribution(cond_dist));
            } else {
                config["seq"] = cond_seq;
                rep = domord::condition_C_coeffs(lhs, rhs, domord::parse_poly(cond_seq));
            }
            emit(g, config, domord::to_json(rep));
            return rep.holds ? kExitHolds : kExitRefuted;
        }
        if (*equivalence) {
            domord::DistributionSpec x = domord::make_distribution(equiv_dist);
            domord::EquivalenceReport rep = domord::verify_equivalence(equiv_n, x, g.threads);
            std::cerr << "equivalence n=" << equiv_n << ": " << rep.table.size()
                      << " pairs, " << rep.discrepancies << " discrepancies\n";
            if (!rep.hypotheses_met)
                std::cerr << "hypotheses not met: "
                          << (!rep.range_ok ? "range has a gap" : "sequence is not TN2")
                          << " (sweep ran anyway)\n";
            emit(g,
                 json{{"command", "equivalence"},
                      {"dist", equiv_dist},
                      {"n", equiv_n},
                      {"no_table", equiv_no_table}},
                 domord::to_json(rep, /*include_table=*/!equiv_no_table));
            return rep.equivalence_holds ? kExitHolds : kExitRefuted;
        }
        if (*mc) {
            domord::DistributionSpec x = domord::make_distribution(mc_dist);
            domord::EventQuery q{domord::parse_partition(mc_shape), mc_total, mc_cap};
            domord::MonteCarloResult res = domord::monte_carlo(x, q, mc_trials, mc_seed, g.threads);
            emit(g,
                 json{{"command", "mc"},
                      {"dist", mc_dist},
                      {"shape", mc_shape},
                      {"total", mc_total},
                      {"cap", mc_cap},
                      {"trials", mc_trials},
                      {"seed", mc_seed}},
                 domord::to_json(res));
            return kExitHolds;
        }
        if (*tn_check) {
            domord::SequenceView p = parse_seq_arg(tn_seq, tn_infinite);
            domord::MatrixKind kind = tn_matrix == "power" ? domord::MatrixKind::power
                                                           : domord::MatrixKind::toeplitz;
            domord::TNReport rep = domord::check_tn(p, kind, tn_k, tn_rows, tn_cols, tn_strict);
            emit(g,
                 json{{"command", "tn-check"},
                      {"seq", tn_seq},
                      {"matrix", tn_matrix},
                      {"k", tn_k},
                      {"rows", tn_rows},
                      {"cols", tn_cols},
                      {"strict", tn_strict},
                      {"infinite", tn_infinite}},
                 domord::to_json(rep));
            return rep.holds ? kExitHolds : kExitRefuted;
        }
        if (*tn2) {
            domord::SequenceView p = parse_seq_arg(tn2_seq, tn2_infinite);
            int bound = tn2_bound >= 0 ? tn2_bound
                                       : static_cast<int>(p.prefix_length()) - 1;
            domord::TNReport rep = domord::tn2_via_char(p, bound);
            emit(g,
                 json{{"command", "tn2-char"},
                      {"seq", tn2_seq},
                      {"bound", bound},
                      {"infinite", tn2_infinite}},
                 domord::to_json(rep));
            return rep.holds ? kExitHolds : kExitRefuted;
        }
        if (*shape_cmd) {
            domord::SequenceView p = parse_seq_arg(shape_seq, shape_infinite);
            emit(g, json{{"command", "shape"}, {"seq", shape_seq}, {"infinite", shape_infinite}},
                 domord::to_json(domord::shape(p)));
            return kExitHolds;
        }
        if (*transfer) {
            domord::SequenceView p = domord::parse_sequence(ti_seq, true);
            domord::Composition rows = domord::parse_composition(ti_rows);
            domord::Composition cols = domord::parse_composition(ti_cols);
            domord::MinorIndex idx(rows.parts, cols.parts);
            domord::TransferIdentityReport rep = domord::transfer_identity_check(p, idx);
            emit(g,
                 json{{"command", "transfer-identity"},
                      {"seq", ti_seq},
                      {"rows", ti_rows},
                      {"cols", ti_cols}},
                 domord::to_json(rep));
            return rep.equal ? kExitHolds : kExitRefuted;
        }
        if (*conjecture) {
            if ((cj_B >= 0) != (cj_b >= 0))
                throw std::invalid_argument("conjecture: give both --B and --b, or neither");
            if (cj_B >= 0) {
                domord::InjectionResult res = domord::find_injection(cj_A, cj_a, cj_B, cj_b);
                std::cerr << "cell A=" << cj_A << " B=" << cj_B << " a=" << cj_a
                          << " b=" << cj_b << ": " << (res.found ? "found" : "VIOLATOR")
                          << "\n";
                emit(g,
                     json{{"command", "conjecture"},
                          {"A", cj_A},
                          {"a", cj_a},
                          {"B", cj_B},
                          {"b", cj_b},
                          {"mappings", cj_mappings}},
                     domord::to_json(res, cj_mappings));
                return res.found ? kExitHolds : kExitRefuted;
            }
            domord::SweepReport rep = domord::sweep(cj_A, cj_a, g.threads);
            for (const domord::InjectionResult& cell : rep.cells)
                std::cerr << "cell A=" << cell.A << " B=" << cell.B << " a=" << cell.a
                          << " b=" << cell.b << ": "
                          << (cell.found ? "found" : "VIOLATOR") << " (left "
                          << cell.left_size << ", right " << cell.right_size << ")\n";
            emit(g,
                 json{{"command", "conjecture"},
                      {"A", cj_A},
                      {"a", cj_a},
                      {"mappings", cj_mappings}},
                 domord::to_json(rep, cj_mappings));
            return rep.all_found ? kExitHolds : kExitRefuted;
        }
        if (*preset) {
            if (preset_name == "sec5-uniform013") return run_preset_sec5_uniform013(g);
            if (preset_name == "sec5-qfamily") return run_preset_sec5_qfamily(g);
            if (preset_name == "lemma23-counterexamples") return run_preset_lemma23(g);
            throw std::invalid_argument("unknown preset '" + preset_name + "'");
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const domord::insufficient_coefficients& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
