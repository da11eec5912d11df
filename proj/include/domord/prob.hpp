#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "domord/parallel.hpp"
#include "domord/partitions.hpp"
#include "domord/poly.hpp"
#include "domord/rational.hpp"
#include "domord/sequences.hpp"
#include "domord/tn.hpp"

namespace domord {

// Finite-support pmf on ℕ with exact masses.  Masses are positive on the
// stored support and sum to 1.
class DistributionSpec {
  public:
    explicit DistributionSpec(std::map<int, Rational> pmf) : pmf_(std::move(pmf)) {
        Rational total(0);
        for (const auto& [k, mass] : pmf_) {
            if (k < 0) throw std::invalid_argument("DistributionSpec: negative support point");
            if (mass <= 0) throw std::invalid_argument("DistributionSpec: mass must be positive");
            total += mass;
        }
        if (total != 1)
            throw std::invalid_argument("DistributionSpec: masses sum to " +
                                        format_rational(total) + ", expected 1");
    }

    const std::map<int, Rational>& pmf() const { return pmf_; }

    Rational mass(int k) const {
        auto it = pmf_.find(k);
        return it == pmf_.end() ? Rational(0) : it->second;
    }

    // Largest support point r.
    int max_range() const { return pmf_.empty() ? 0 : pmf_.rbegin()->first; }

    // range(X) == {0, 1, ..., r}?
    bool range_contiguous() const {
        int expect = 0;
        for (const auto& [k, mass] : pmf_)
            if (k != expect++) return false;
        return expect > 0;
    }

    // First gap in {0..r} not in the support, if any.
    std::optional<int> range_gap() const {
        int expect = 0;
        for (const auto& [k, mass] : pmf_) {
            if (k != expect) return expect;
            ++expect;
        }
        return std::nullopt;
    }

    Poly pgf() const {
        std::vector<Rational> coeffs(static_cast<std::size_t>(max_range()) + 1, Rational(0));
        for (const auto& [k, mass] : pmf_) coeffs[static_cast<std::size_t>(k)] = mass;
        return Poly(std::move(coeffs));
    }

    SequenceView sequence() const { return SequenceView(pgf().coeffs(), true); }

  private:
    std::map<int, Rational> pmf_;
};

// Literals: "uniform:r", "binomial:m:num/den", "pmf:k=mass,...".
inline DistributionSpec make_distribution(const std::string& spec) {
    auto bad = [&](const std::string& why) {
        return std::invalid_argument("make_distribution: " + why + " in '" + spec + "'");
    };
    std::size_t colon = spec.find(':');
    if (colon == std::string::npos) throw bad("missing ':'");
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);

    if (kind == "uniform") {
        int r;
        try {
            r = std::stoi(rest);
        } catch (const std::exception&) {
            throw bad("bad range");
        }
        if (r < 0) throw bad("negative range");
        std::map<int, Rational> pmf;
        for (int k = 0; k <= r; ++k) pmf[k] = rational(1, r + 1);
        return DistributionSpec(std::move(pmf));
    }
    if (kind == "binomial") {
        std::size_t c2 = rest.find(':');
        if (c2 == std::string::npos) throw bad("binomial needs m and p");
        int m;
        try {
            m = std::stoi(rest.substr(0, c2));
        } catch (const std::exception&) {
            throw bad("bad trial count");
        }
        if (m < 0) throw bad("negative trial count");
        Rational q = parse_rational(rest.substr(c2 + 1));
        if (q <= 0 || q >= 1) throw bad("p outside (0,1)");
        std::map<int, Rational> pmf;
        Rational one_minus = Rational(1) - q;
        for (int k = 0; k <= m; ++k) {
            Rational mass(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(k)));
            for (int i = 0; i < k; ++i) mass *= q;
            for (int i = 0; i < m - k; ++i) mass *= one_minus;
            pmf[k] = mass;
        }
        return DistributionSpec(std::move(pmf));
    }
    if (kind == "pmf") {
        std::map<int, Rational> pmf;
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            std::size_t next = rest.find(',', pos);
            std::string tok = rest.substr(pos, next == std::string::npos ? next : next - pos);
            std::size_t eq = tok.find('=');
            if (eq == std::string::npos) throw bad("pmf entry '" + tok + "' missing '='");
            int k;
            try {
                k = std::stoi(tok.substr(0, eq));
            } catch (const std::exception&) {
                throw bad("bad support point in '" + tok + "'");
            }
            if (pmf.count(k)) throw bad("duplicate support point " + std::to_string(k));
            Rational mass = parse_rational(tok.substr(eq + 1));
            if (mass < 0) throw bad("negative mass at " + std::to_string(k));
            if (mass == 0) throw bad("zero mass at " + std::to_string(k));
            pmf[k] = mass;
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        return DistributionSpec(std::move(pmf));  // throws unless masses sum to 1
    }
    throw bad("unknown kind '" + kind + "'");
}

// E(ν, X, j, t): each row i receives the sum of ν(i) independent draws of X;
// the event asks every row total <= t and the grand total == j.
struct EventQuery {
    Partition shape;
    int total = 0;  // j
    int cap = 0;    // t
};

// Exact P(E(ν,X,j,t)) as the x^j coefficient of Π_i (p_X^{ν(i)}|_t).
inline Rational event_probability(const DistributionSpec& x, const EventQuery& q) {
    if (q.total < 0 || q.cap < 0)
        throw std::invalid_argument("event_probability: negative total or cap");
    Poly f = row_product(q.shape, x.pgf(), static_cast<unsigned>(q.cap));
    return f.coeff(static_cast<std::size_t>(q.total));
}

struct ConditionWitness {
    int total = 0;  // j
    int cap = 0;    // t
    Rational p_lhs, p_rhs;
};

struct ConditionReport {
    bool holds = true;
    std::optional<ConditionWitness> witness;
    int total_bound = 0;  // j scanned over [0, total_bound]
    int cap_bound = 0;    // t scanned over [0, cap_bound]
};

namespace detail {
// Shared scan: compares x^j coefficients of f(lhs,p,t) against f(rhs,p,t)
// over the complete bounds.  r is the largest index with a nonzero
// coefficient of p; beyond j_max both probabilities vanish and beyond t_max
// the truncations are no-ops, so the scan decides the full condition.
inline ConditionReport condition_scan(const Partition& lhs, const Partition& rhs,
                                      const Poly& p, int r) {
    ConditionReport rep;
    rep.total_bound = r * std::max(lhs.weight(), rhs.weight());
    rep.cap_bound = r * std::max(lhs.largest(), rhs.largest());
    for (int t = 0; t <= rep.cap_bound; ++t) {
        Poly fl = row_product(lhs, p, static_cast<unsigned>(t));
        Poly fr = row_product(rhs, p, static_cast<unsigned>(t));
        for (int j = 0; j <= rep.total_bound; ++j) {
            Rational pl = fl.coeff(static_cast<std::size_t>(j));
            Rational pr = fr.coeff(static_cast<std::size_t>(j));
            if (pl > pr) {
                rep.holds = false;
                rep.witness = ConditionWitness{j, t, pl, pr};
                return rep;
            }
        }
    }
    return rep;
}
}  // namespace detail

// Decides C(lhs, rhs, X) exactly: P(E(lhs,X,j,t)) <= P(E(rhs,X,j,t)) for all
// j, t.  The scan over j <= r·max(|λ|,|μ|), t <= r·max(λ(1),μ(1)) is
// complete for finite-support X.
inline ConditionReport condition_C(const Partition& lhs, const Partition& rhs,
                                   const DistributionSpec& x) {
    return detail::condition_scan(lhs, rhs, x.pgf(), x.max_range());
}

// Unnormalized variant on a non-negative coefficient sequence; valid when
// |lhs| = |rhs| (the p(1)^{|λ|} factors then agree on both sides).
inline ConditionReport condition_C_coeffs(const Partition& lhs, const Partition& rhs,
                                          const Poly& coeffs) {
    if (lhs.weight() != rhs.weight())
        throw std::invalid_argument("condition_C_coeffs: weights must agree");
    for (const Rational& c : coeffs.coeffs())
        if (c < 0)
            throw std::invalid_argument("condition_C_coeffs: negative coefficient");
    auto deg = coeffs.degree();
    int r = deg ? static_cast<int>(*deg) : 0;
    return detail::condition_scan(lhs, rhs, coeffs, r);
}

struct EquivalencePair {
    Partition lhs, rhs;
    bool dominates_ = false;
    bool condition_holds = false;
    bool agree = false;
    std::optional<ConditionWitness> witness;
};

struct EquivalenceReport {
    int n = 0;
    bool hypotheses_met = false;
    bool range_ok = false;
    std::optional<int> range_gap;
    TNReport tn2;
    std::vector<EquivalencePair> table;
    std::size_t discrepancies = 0;
    bool equivalence_holds = false;
};

// Sweeps every ordered pair (λ, μ) in 𝒫_n² and compares dominance against
// the exact condition.  Hypotheses (contiguous range, TN_2) are checked and
// reported, never assumed; the sweep runs either way.  Row products
// f(ν, p, t) are shared across pairs, so each (partition, cap) is convolved
// once; the per-pair scan then matches condition_C (same bounds, same
// first-witness order).
inline EquivalenceReport verify_equivalence(int n, const DistributionSpec& x,
                                            int threads = 1) {
    EquivalenceReport rep;
    rep.n = n;
    rep.range_ok = x.range_contiguous();
    rep.range_gap = x.range_gap();
    SequenceView seq = x.sequence();
    int s = seq.support_bound() ? static_cast<int>(*seq.support_bound()) : 0;
    rep.tn2 = tn2_via_char(seq, s);
    rep.hypotheses_met = rep.range_ok && rep.tn2.holds;

    std::vector<Partition> parts = enumerate_partitions(n);
    int r = x.max_range();
    int t_top = r * n;
    Poly p = x.pgf();

    // memo[partition index][t] = f(parts[idx], p, t)
    std::vector<std::vector<Poly>> memo(parts.size());
    parallel_for(parts.size(), threads, [&](std::size_t idx) {
        memo[idx].reserve(static_cast<std::size_t>(t_top) + 1);
        for (int t = 0; t <= t_top; ++t)
            memo[idx].push_back(row_product(parts[idx], p, static_cast<unsigned>(t)));
    });

    std::size_t count = parts.size() * parts.size();
    rep.table.resize(count);
    parallel_for(count, threads, [&](std::size_t i) {
        std::size_t li = i / parts.size(), ri = i % parts.size();
        EquivalencePair row;
        row.lhs = parts[li];
        row.rhs = parts[ri];
        row.dominates_ = dominates(row.lhs, row.rhs);
        row.condition_holds = true;
        int total_bound = r * n;
        int cap_bound = r * std::max(row.lhs.largest(), row.rhs.largest());
        for (int t = 0; t <= cap_bound && row.condition_holds; ++t) {
            const Poly& fl = memo[li][static_cast<std::size_t>(t)];
            const Poly& fr = memo[ri][static_cast<std::size_t>(t)];
            for (int j = 0; j <= total_bound; ++j) {
                Rational pl = fl.coeff(static_cast<std::size_t>(j));
                Rational pr = fr.coeff(static_cast<std::size_t>(j));
                if (pl > pr) {
                    row.condition_holds = false;
                    row.witness = ConditionWitness{j, t, pl, pr};
                    break;
                }
            }
        }
        row.agree = row.dominates_ == row.condition_holds;
        rep.table[i] = std::move(row);
    });
    for (const EquivalencePair& row : rep.table)
        if (!row.agree) ++rep.discrepancies;
    rep.equivalence_holds = rep.discrepancies == 0;
    return rep;
}

struct MonteCarloResult {
    double estimate = 0.0;
    double stderr_ = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    std::uint64_t seed = 0;
};

namespace detail {
// splitmix64 finalizer; block b of a run with seed s uses the engine seed
// mix64(s + (b+1)·golden), i.e. the b-th output of the splitmix64 stream.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace detail

// Seeded estimator for P(E(ν,X,j,t)).  Trials are processed in fixed blocks
// of 2^16; block b draws from mt19937_64 seeded with the b-th splitmix64
// output of the run seed, so the result depends only on (seed, trials), not
// on the thread count.  A draw compares a uniform 53-bit fraction u against
// the cumulative rational masses; the comparison table stores
// ceil(cum·2^53), which decides u < cum exactly.
inline MonteCarloResult monte_carlo(const DistributionSpec& x, const EventQuery& q,
                                    std::uint64_t trials, std::uint64_t seed,
                                    int threads = 1) {
    if (trials < 1) throw std::invalid_argument("monte_carlo: trials must be >= 1");

    std::vector<int> values;
    std::vector<std::uint64_t> thresholds;
    Rational cum(0);
    const Integer two53 = Integer(1) << 53;
    for (const auto& [k, mass] : x.pmf()) {
        cum += mass;
        Integer scaled_num = cum.get_num() * two53;
        Integer ceil_q;
        mpz_cdiv_q(ceil_q.get_mpz_t(), scaled_num.get_mpz_t(), cum.get_den().get_mpz_t());
        values.push_back(k);
        thresholds.push_back(static_cast<std::uint64_t>(ceil_q.get_ui()));
    }

    std::vector<int> row_sizes;
    for (int part : q.shape.parts())
        if (part > 0) row_sizes.push_back(part);

    constexpr std::uint64_t kBlock = 1u << 16;
    std::uint64_t blocks = (trials + kBlock - 1) / kBlock;
    std::vector<std::uint64_t> block_hits(blocks, 0);

    parallel_for(blocks, threads, [&](std::size_t b) {
        std::mt19937_64 eng(detail::mix64(seed + static_cast<std::uint64_t>(b)));
        std::uint64_t lo = static_cast<std::uint64_t>(b) * kBlock;
        std::uint64_t hi = std::min(trials, lo + kBlock);
        std::uint64_t hits = 0;
        for (std::uint64_t trial = lo; trial < hi; ++trial) {
            long total = 0;
            bool capped = true;
            for (int cells : row_sizes) {
                long row = 0;
                for (int c = 0; c < cells; ++c) {
                    std::uint64_t u = eng() >> 11;
                    std::size_t idx = 0;
                    while (u >= thresholds[idx]) ++idx;
                    row += values[idx];
                }
                if (row > q.cap) capped = false;
                total += row;
            }
            if (capped && total == q.total) ++hits;
        }
        block_hits[b] = hits;
    });

    MonteCarloResult res;
    res.trials = trials;
    res.seed = seed;
    for (std::uint64_t h : block_hits) res.hits += h;
    res.estimate = static_cast<double>(res.hits) / static_cast<double>(trials);
    res.stderr_ = std::sqrt(res.estimate * (1.0 - res.estimate) /
                            static_cast<double>(trials));
    return res;
}

}  // namespace domord
