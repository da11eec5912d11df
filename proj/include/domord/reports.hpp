#pragma once

#include <json.hpp>

#include "domord/matching.hpp"
#include "domord/partitions.hpp"
#include "domord/prob.hpp"
#include "domord/sequences.hpp"
#include "domord/tn.hpp"

// JSON views of the report types.  Rationals are "num/den" strings; floats
// appear only in Monte Carlo fields.

namespace domord {

using json = nlohmann::json;

inline json to_json(const Rational& q) { return format_rational(q); }

inline json to_json(const Composition& c) { return json(c.parts); }
inline json to_json(const Partition& p) { return json(p.parts()); }

inline json to_json(const MinorIndex& idx) {
    return json{{"rows", idx.rows}, {"cols", idx.cols}};
}

inline json to_json(const ShapeReport& r) {
    return json{{"unimodal", r.unimodal},
                {"log_concave", r.log_concave},
                {"strictly_log_concave", r.strictly_log_concave},
                {"prefix_only", r.prefix_only}};
}

inline json to_json(const TNReport& r) {
    json j{{"holds", r.holds},
           {"k", r.k},
           {"window", {{"rows", r.row_bound}, {"cols", r.col_bound}}},
           {"strict", r.strict}};
    if (r.witness) {
        j["witness"] = to_json(*r.witness);
        j["witness"]["value"] = to_json(*r.witness_value);
    }
    if (r.pair_witness) {
        j["pair_witness"] = {{"lhs", to_json(r.pair_witness->lhs)},
                             {"rhs", to_json(r.pair_witness->rhs)},
                             {"p_lhs", to_json(r.pair_witness->p_lhs)},
                             {"p_rhs", to_json(r.pair_witness->p_rhs)}};
    }
    return j;
}

inline json to_json(const TransferIdentityReport& r) {
    return json{{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"equal", r.equal}};
}

inline json to_json(const ConditionWitness& w) {
    return json{{"j", w.total},
                {"t", w.cap},
                {"p_lhs", to_json(w.p_lhs)},
                {"p_rhs", to_json(w.p_rhs)}};
}

inline json to_json(const ConditionReport& r) {
    json j{{"holds", r.holds},
           {"bounds", {{"j_max", r.total_bound}, {"t_max", r.cap_bound}}}};
    if (r.witness) j["witness"] = to_json(*r.witness);
    return j;
}

inline json to_json(const EquivalenceReport& r, bool include_table = true) {
    json j{{"n", r.n},
           {"hypotheses_met", r.hypotheses_met},
           {"range_contiguous", r.range_ok},
           {"tn2", to_json(r.tn2)},
           {"pairs", r.table.size()},
           {"discrepancies", r.discrepancies},
           {"equivalence_holds", r.equivalence_holds}};
    if (r.range_gap) j["range_gap"] = *r.range_gap;
    if (include_table) {
        json table = json::array();
        for (const EquivalencePair& row : r.table) {
            json e{{"lhs", to_json(row.lhs)},
                   {"rhs", to_json(row.rhs)},
                   {"dominates", row.dominates_},
                   {"condition_holds", row.condition_holds},
                   {"agree", row.agree}};
            if (row.witness) e["witness"] = to_json(*row.witness);
            table.push_back(std::move(e));
        }
        j["table"] = std::move(table);
    } else {
        json bad = json::array();
        for (const EquivalencePair& row : r.table)
            if (!row.agree)
                bad.push_back(json{{"lhs", to_json(row.lhs)}, {"rhs", to_json(row.rhs)}});
        j["disagreeing_pairs"] = std::move(bad);
    }
    return j;
}

inline json to_json(const MonteCarloResult& r) {
    return json{{"estimate", r.estimate},
                {"stderr", r.stderr_},
                {"hits", r.hits},
                {"trials", r.trials},
                {"seed", r.seed}};
}

inline json to_json(const InjectionResult& r, bool include_mapping = false) {
    json j{{"A", r.A},
           {"B", r.B},
           {"a", r.a},
           {"b", r.b},
           {"left_size", r.left_size},
           {"right_size", r.right_size},
           {"matched", r.matched},
           {"found", r.found},
           {"runtime_ms", r.runtime_ms}};
    if (r.found && include_mapping) {
        InjectionProblem prob = build_injection_problem(r.A, r.a, r.B, r.b);
        json mapping = json::array();
        for (const auto& [l, rr] : r.mapping)
            mapping.push_back(json{
                {"left", {to_json(prob.left[l].first), to_json(prob.left[l].second)}},
                {"right", {to_json(prob.right[rr].first), to_json(prob.right[rr].second)}}});
        j["mapping"] = std::move(mapping);
    }
    if (!r.found) {
        InjectionProblem prob = build_injection_problem(r.A, r.a, r.B, r.b);
        json viol = json::array();
        for (std::size_t u : r.violator)
            viol.push_back(json{to_json(prob.left[u].first), to_json(prob.left[u].second)});
        j["violator"] = std::move(viol);
        j["violator_size"] = r.violator.size();
        j["violator_neighborhood"] = r.violator_neighborhood;
    }
    return j;
}

inline json to_json(const SweepReport& r, bool include_mappings = false) {
    json cells = json::array();
    for (const InjectionResult& c : r.cells) cells.push_back(to_json(c, include_mappings));
    return json{{"A_max", r.A_max},
                {"a_max", r.a_max},
                {"all_found", r.all_found},
                {"cells", std::move(cells)}};
}

}  // namespace domord
