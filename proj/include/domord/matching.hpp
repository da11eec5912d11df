#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "domord/parallel.hpp"
#include "domord/partitions.hpp"
#include "domord/rational.hpp"

namespace domord {

// Maximum bipartite matching, Hopcroft-Karp layering.  Vertices are 0-based
// enumeration indices on each side.  After solve(), a non-saturating matching
// yields a Hall violator: the left vertices reachable from free left vertices
// by alternating paths.
class BipartiteMatcher {
  public:
    BipartiteMatcher(std::size_t n_left, std::size_t n_right)
        : adj_(n_left), match_left_(n_left, kFree), match_right_(n_right, kFree) {}

    void add_edge(std::size_t l, std::size_t r) {
        if (l >= adj_.size() || r >= match_right_.size())
            throw std::out_of_range("BipartiteMatcher: edge out of range");
        adj_[l].push_back(r);
    }

    std::size_t solve() {
        std::size_t matched = 0;
        while (bfs_layers()) {
            for (std::size_t u = 0; u < adj_.size(); ++u)
                if (match_left_[u] == kFree && dfs_augment(u)) ++matched;
        }
        return matched;
    }

    const std::vector<long>& left_match() const { return match_left_; }
    const std::vector<long>& right_match() const { return match_right_; }

    bool saturates_left() const {
        for (long m : match_left_)
            if (m == kFree) return false;
        return true;
    }

    // S = free left vertices plus everything reachable from them alternating
    // (unmatched edge to the right, matched edge back).  When the matching is
    // maximum and not left-saturating, |N(S)| = |S| - #free < |S|.
    std::vector<std::size_t> hall_violator() const {
        std::vector<char> in_s(adj_.size(), 0);
        std::vector<char> right_seen(match_right_.size(), 0);
        std::queue<std::size_t> q;
        for (std::size_t u = 0; u < adj_.size(); ++u)
            if (match_left_[u] == kFree) {
                in_s[u] = 1;
                q.push(u);
            }
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (std::size_t v : adj_[u]) {
                if (right_seen[v]) continue;
                right_seen[v] = 1;
                long back = match_right_[v];
                if (back != kFree && !in_s[static_cast<std::size_t>(back)]) {
                    in_s[static_cast<std::size_t>(back)] = 1;
                    q.push(static_cast<std::size_t>(back));
                }
            }
        }
        std::vector<std::size_t> s;
        for (std::size_t u = 0; u < adj_.size(); ++u)
            if (in_s[u]) s.push_back(u);
        return s;
    }

  private:
    static constexpr long kFree = -1;
    static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

    bool bfs_layers() {
        level_.assign(adj_.size(), kInf);
        std::queue<std::size_t> q;
        for (std::size_t u = 0; u < adj_.size(); ++u)
            if (match_left_[u] == kFree) {
                level_[u] = 0;
                q.push(u);
            }
        bool reachable_free = false;
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (std::size_t v : adj_[u]) {
                long back = match_right_[v];
                if (back == kFree) {
                    reachable_free = true;
                } else if (level_[static_cast<std::size_t>(back)] == kInf) {
                    level_[static_cast<std::size_t>(back)] = level_[u] + 1;
                    q.push(static_cast<std::size_t>(back));
                }
            }
        }
        return reachable_free;
    }

    bool dfs_augment(std::size_t u) {
        for (std::size_t v : adj_[u]) {
            long back = match_right_[v];
            if (back == kFree ||
                (level_[static_cast<std::size_t>(back)] == level_[u] + 1 &&
                 dfs_augment(static_cast<std::size_t>(back)))) {
                match_left_[u] = static_cast<long>(v);
                match_right_[v] = static_cast<long>(u);
                return true;
            }
        }
        level_[u] = kInf;
        return false;
    }

    std::vector<std::vector<std::size_t>> adj_;
    std::vector<long> match_left_;
    std::vector<long> match_right_;
    std::vector<std::uint32_t> level_;
};

// Left side 𝒰^A_b × 𝒰^B_a, right side 𝒰^A_a × 𝒰^B_b, edges where the left
// concatenation dominates the right one.
struct InjectionProblem {
    int A = 0, a = 0, B = 0, b = 0;
    std::vector<std::pair<Composition, Composition>> left;
    std::vector<std::pair<Composition, Composition>> right;
};

inline InjectionProblem build_injection_problem(int A, int a, int B, int b) {
    if (!(A >= B && B >= 0 && a >= b && b >= 0))
        throw std::invalid_argument("build_injection_problem: need A >= B >= 0, a >= b >= 0");
    InjectionProblem prob;
    prob.A = A;
    prob.a = a;
    prob.B = B;
    prob.b = b;
    std::vector<Composition> ul = enumerate_compositions(A, b);
    std::vector<Composition> ur = enumerate_compositions(B, a);
    for (const Composition& l : ul)
        for (const Composition& r : ur) prob.left.emplace_back(l, r);
    std::vector<Composition> vl = enumerate_compositions(A, a);
    std::vector<Composition> vr = enumerate_compositions(B, b);
    for (const Composition& l : vl)
        for (const Composition& r : vr) prob.right.emplace_back(l, r);
    return prob;
}

// λ₁μ₁ ⊵ λ₂μ₂ on the concatenations, compared through rearrangement.
inline bool compatible(const std::pair<Composition, Composition>& left_elem,
                       const std::pair<Composition, Composition>& right_elem) {
    return dominates(concat(left_elem.first, left_elem.second),
                     concat(right_elem.first, right_elem.second));
}

struct InjectionResult {
    int A = 0, a = 0, B = 0, b = 0;
    bool found = false;
    std::size_t left_size = 0, right_size = 0;
    std::size_t matched = 0;
    // found: left index -> right index, a verified dominance-compatible injection
    std::vector<std::pair<std::size_t, std::size_t>> mapping;
    // not found: S ⊆ left with |N(S)| < |S|
    std::vector<std::size_t> violator;
    std::size_t violator_neighborhood = 0;
    double runtime_ms = 0.0;
};

namespace detail {
inline std::vector<int> sorted_concat(const std::pair<Composition, Composition>& e) {
    std::vector<int> v = e.first.parts;
    v.insert(v.end(), e.second.parts.begin(), e.second.parts.end());
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v;
}
}  // namespace detail

// Builds the compatibility graph for (A, a, B, b), runs maximum matching and
// reports either a left-saturating injection or a Hall violator.
inline InjectionResult find_injection(int A, int a, int B, int b) {
    auto t0 = std::chrono::steady_clock::now();
    InjectionProblem prob = build_injection_problem(A, a, B, b);

    InjectionResult res;
    res.A = A;
    res.a = a;
    res.B = B;
    res.b = b;
    res.left_size = prob.left.size();
    res.right_size = prob.right.size();

    // Dominance depends only on the rearranged concatenations; group the
    // elements into partition classes and decide each class pair once.
    std::map<std::vector<int>, std::size_t> class_ids;
    std::vector<std::vector<int>> class_parts;
    auto class_of = [&](const std::pair<Composition, Composition>& e) {
        std::vector<int> key = detail::sorted_concat(e);
        auto it = class_ids.find(key);
        if (it != class_ids.end()) return it->second;
        std::size_t id = class_parts.size();
        class_ids.emplace(key, id);
        class_parts.push_back(std::move(key));
        return id;
    };
    std::vector<std::size_t> left_class(prob.left.size()), right_class(prob.right.size());
    for (std::size_t i = 0; i < prob.left.size(); ++i) left_class[i] = class_of(prob.left[i]);
    for (std::size_t j = 0; j < prob.right.size(); ++j) right_class[j] = class_of(prob.right[j]);

    std::size_t n_classes = class_parts.size();
    std::vector<char> dom(n_classes * n_classes, 0);
    for (std::size_t x = 0; x < n_classes; ++x)
        for (std::size_t y = 0; y < n_classes; ++y)
            dom[x * n_classes + y] =
                detail::prefix_dominates(class_parts[x], class_parts[y]) ? 1 : 0;

    BipartiteMatcher matcher(prob.left.size(), prob.right.size());
    for (std::size_t i = 0; i < prob.left.size(); ++i)
        for (std::size_t j = 0; j < prob.right.size(); ++j)
            if (dom[left_class[i] * n_classes + right_class[j]]) matcher.add_edge(i, j);

    res.matched = matcher.solve();
    res.found = matcher.saturates_left();
    if (res.found) {
        for (std::size_t i = 0; i < prob.left.size(); ++i)
            res.mapping.emplace_back(i, static_cast<std::size_t>(matcher.left_match()[i]));
    } else {
        res.violator = matcher.hall_violator();
        std::vector<char> seen(prob.right.size(), 0);
        for (std::size_t u : res.violator)
            for (std::size_t j = 0; j < prob.right.size(); ++j)
                if (dom[left_class[u] * n_classes + right_class[j]] && !seen[j]) {
                    seen[j] = 1;
                    ++res.violator_neighborhood;
                }
    }
    auto t1 = std::chrono::steady_clock::now();
    res.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return res;
}

// Post-hoc check of a reported result: injectivity plus compatibility of
// every matched pair, or a re-count of the violator's neighborhood.
inline bool verify_injection_result(const InjectionResult& res) {
    InjectionProblem prob = build_injection_problem(res.A, res.a, res.B, res.b);
    if (res.found) {
        if (res.mapping.size() != prob.left.size()) return false;
        std::vector<char> used(prob.right.size(), 0);
        for (const auto& [l, r] : res.mapping) {
            if (l >= prob.left.size() || r >= prob.right.size()) return false;
            if (used[r]) return false;
            used[r] = 1;
            if (!compatible(prob.left[l], prob.right[r])) return false;
        }
        return true;
    }
    // recompute N(S) from scratch
    std::vector<char> seen(prob.right.size(), 0);
    std::size_t neighborhood = 0;
    for (std::size_t u : res.violator) {
        if (u >= prob.left.size()) return false;
        for (std::size_t j = 0; j < prob.right.size(); ++j)
            if (!seen[j] && compatible(prob.left[u], prob.right[j])) {
                seen[j] = 1;
                ++neighborhood;
            }
    }
    return neighborhood < res.violator.size();
}

struct SweepReport {
    int A_max = 0, a_max = 0;
    std::vector<InjectionResult> cells;
    bool all_found = true;
};

// find_injection over every cell A >= B >= 0, a >= b >= 0 within the bounds.
// Cells run in parallel; the report order is deterministic.
inline SweepReport sweep(int A_max, int a_max, int threads = 1) {
    SweepReport rep;
    rep.A_max = A_max;
    rep.a_max = a_max;
    std::vector<std::array<int, 4>> cells;
    for (int A = 0; A <= A_max; ++A)
        for (int B = 0; B <= A; ++B)
            for (int a = 0; a <= a_max; ++a)
                for (int b = 0; b <= a; ++b) cells.push_back({A, a, B, b});
    rep.cells.resize(cells.size());
    parallel_for(cells.size(), threads, [&](std::size_t i) {
        rep.cells[i] = find_injection(cells[i][0], cells[i][1], cells[i][2], cells[i][3]);
    });
    for (const InjectionResult& cell : rep.cells)
        if (!cell.found) rep.all_found = false;
    return rep;
}

}  // namespace domord
