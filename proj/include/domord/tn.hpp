#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domord/partitions.hpp"
#include "domord/poly.hpp"
#include "domord/rational.hpp"
#include "domord/sequences.hpp"

namespace domord {

// Square submatrix selector: strictly increasing row and column index
// vectors of equal length >= 1.
struct MinorIndex {
    std::vector<int> rows;
    std::vector<int> cols;

    MinorIndex() = default;
    MinorIndex(std::vector<int> r, std::vector<int> c)
        : rows(std::move(r)), cols(std::move(c)) {
        validate();
    }

    std::size_t order() const { return rows.size(); }

    void validate() const {
        if (rows.empty() || rows.size() != cols.size())
            throw std::invalid_argument("MinorIndex: rows/cols must have equal length >= 1");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] < 0 || cols[i] < 0)
                throw std::invalid_argument("MinorIndex: negative index");
            if (i + 1 < rows.size() && (rows[i] >= rows[i + 1] || cols[i] >= cols[i + 1]))
                throw std::invalid_argument("MinorIndex: indices must be strictly increasing");
        }
    }
};

// 𝒯_p entry: p_{j-i}, zero below the diagonal band.
inline Rational toeplitz_entry(const SequenceView& p, long i, long j) {
    return p.at(j - i);
}

// 𝒮_p entry: coefficient of x^j in p(x)^i.
inline Rational power_entry(const SequenceView& p, long i, long j) {
    if (i < 0 || j < 0) throw std::invalid_argument("power_entry: negative index");
    if (!p.support_is_finite && p.prefix_length() <= static_cast<std::size_t>(j))
        throw insufficient_coefficients("power_entry: prefix too short for column " +
                                        std::to_string(j));
    return power(p.generating_function(), static_cast<unsigned>(i),
                 static_cast<unsigned>(j))
        .coeff(static_cast<std::size_t>(j));
}

class ToeplitzView {
  public:
    explicit ToeplitzView(SequenceView p) : p_(std::move(p)) {}
    Rational entry(long i, long j) const { return toeplitz_entry(p_, i, j); }

  private:
    SequenceView p_;
};

// Materializes rows 0..row_count-1 of 𝒮_p up to column col_count-1, so that
// repeated entry lookups share the power computations.
class PowerView {
  public:
    PowerView(const SequenceView& p, int row_count, int col_count) {
        if (!p.support_is_finite && p.prefix_length() < static_cast<std::size_t>(col_count))
            throw insufficient_coefficients(
                "PowerView: prefix of length " + std::to_string(p.prefix_length()) +
                " cannot fill columns below " + std::to_string(col_count));
        unsigned cap = col_count > 0 ? static_cast<unsigned>(col_count - 1) : 0u;
        Poly base = p.generating_function();
        rows_.reserve(static_cast<std::size_t>(row_count));
        Poly acc = Poly::one();
        for (int i = 0; i < row_count; ++i) {
            if (i > 0) acc = truncate(multiply(acc, base), cap);
            rows_.push_back(acc);
        }
    }

    Rational entry(long i, long j) const {
        if (i < 0 || j < 0) throw std::invalid_argument("PowerView: negative index");
        if (static_cast<std::size_t>(i) >= rows_.size())
            throw std::out_of_range("PowerView: row beyond materialized window");
        return rows_[static_cast<std::size_t>(i)].coeff(static_cast<std::size_t>(j));
    }

  private:
    std::vector<Poly> rows_;
};

// Exact determinant of the selected submatrix, Gaussian elimination with
// first-nonzero pivoting.
template <class View>
Rational minor_det(const View& m, const MinorIndex& idx) {
    idx.validate();
    std::size_t n = idx.order();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m.entry(idx.rows[i], idx.cols[j]);

    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rational factor = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= factor * a[c][j];
        }
    }
    return det;
}

// A violation of Lemma 2.1(iii): p_lhs > p_rhs with lhs ⊵ rhs.
struct CharIIIWitness {
    Partition lhs, rhs;
    Rational p_lhs, p_rhs;
};

struct TNReport {
    bool holds = true;
    std::optional<MinorIndex> witness;
    std::optional<Rational> witness_value;
    std::optional<CharIIIWitness> pair_witness;
    int k = 0;
    int row_bound = 0;
    int col_bound = 0;
    bool strict = false;
};

namespace detail {
// Next size-r combination of {0..bound-1} in lexicographic order.
inline bool next_combination(std::vector<int>& c, int bound) {
    int r = static_cast<int>(c.size());
    for (int i = r - 1; i >= 0; --i) {
        if (c[i] < bound - (r - i)) {
            ++c[i];
            for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<int> first_combination(int r) {
    std::vector<int> c(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) c[i] = i;
    return c;
}
}  // namespace detail

// Enumerates every minor of order <= k with rows < row_bound and
// cols < col_bound; holds iff all are >= 0 (> 0 when strict).  The first
// violation in enumeration order (order ascending, then rows, then cols,
// lexicographic) is returned as witness.
template <class View>
TNReport check_tn_view(const View& m, int k, int row_bound, int col_bound,
                       bool strict = false) {
    TNReport rep;
    rep.k = k;
    rep.row_bound = row_bound;
    rep.col_bound = col_bound;
    rep.strict = strict;
    for (int order = 1; order <= k; ++order) {
        if (order > row_bound || order > col_bound) break;
        std::vector<int> rows = detail::first_combination(order);
        do {
            std::vector<int> cols = detail::first_combination(order);
            do {
                MinorIndex idx(rows, cols);
                Rational d = minor_det(m, idx);
                if (d < 0 || (strict && d == 0)) {
                    rep.holds = false;
                    rep.witness = idx;
                    rep.witness_value = d;
                    return rep;
                }
            } while (detail::next_combination(cols, col_bound));
        } while (detail::next_combination(rows, row_bound));
    }
    return rep;
}

enum class MatrixKind { toeplitz, power };

inline TNReport check_tn(const SequenceView& p, MatrixKind kind, int k, int row_bound,
                         int col_bound, bool strict = false) {
    if (kind == MatrixKind::toeplitz) {
        if (!p.support_is_finite &&
            p.prefix_length() < static_cast<std::size_t>(col_bound))
            throw insufficient_coefficients("check_tn: prefix shorter than column window");
        return check_tn_view(ToeplitzView(p), k, row_bound, col_bound, strict);
    }
    PowerView v(p, row_bound, col_bound);
    return check_tn_view(v, k, row_bound, col_bound, strict);
}

// Window that certifies TN_2 of 𝒯_p completely for finite-support p: any
// 2x2 minor with a negative value has row span <= s and column indices
// <= 2s after shifting (entries depend on j-i only), s the largest nonzero
// index.  Minors outside reduce to in-window ones or are products of
// non-negative entries.
inline std::pair<int, int> complete_tn2_window(const SequenceView& p) {
    if (!p.support_is_finite)
        throw std::invalid_argument("complete_tn2_window: finite support required");
    int s_len = p.support_bound() ? static_cast<int>(*p.support_bound()) + 1 : 0;
    int rows = s_len + 1;
    int cols = s_len + rows;
    return {rows, cols};
}

// Lemma 2.1(ii): non-negativity plus p_a p_d <= p_b p_c for all
// a >= b >= c >= d >= 0 with a + d = b + c and a <= bound.  A violating
// quadruple is reported as the equivalent 2x2 Toeplitz minor
// rows {0, a-b} x cols {c, a}.
inline TNReport tn2_via_char(const SequenceView& p, int bound) {
    TNReport rep;
    rep.k = 2;
    rep.row_bound = bound + 1;
    rep.col_bound = bound + 1;
    for (int n = 0; n <= bound; ++n) {
        if (p.at(n) < 0) {
            rep.holds = false;
            rep.witness = MinorIndex({0}, {n});
            rep.witness_value = p.at(n);
            return rep;
        }
    }
    for (int a = 0; a <= bound; ++a) {
        for (int b = 0; b <= a; ++b) {
            for (int c = std::max(0, a - b); c <= b; ++c) {
                int d = b + c - a;
                if (p.at(a) * p.at(d) > p.at(b) * p.at(c)) {
                    rep.holds = false;
                    rep.witness = MinorIndex({0, a - b}, {c, a});
                    rep.witness_value = p.at(b) * p.at(c) - p.at(a) * p.at(d);
                    return rep;
                }
            }
        }
    }
    return rep;
}

namespace detail {
// Non-increasing vectors of length m with entries in [0, part_bound],
// descending lexicographic.
inline void box_partitions_rec(int m, int max_first, std::vector<int>& cur,
                               std::vector<Partition>& out) {
    if (static_cast<int>(cur.size()) == m) {
        out.push_back(Partition(cur));
        return;
    }
    for (int v = max_first; v >= 0; --v) {
        cur.push_back(v);
        box_partitions_rec(m, v, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Partition> box_partitions(int m, int part_bound) {
    std::vector<Partition> out;
    std::vector<int> cur;
    box_partitions_rec(m, part_bound, cur, out);
    return out;
}
}  // namespace detail

// Lemma 2.1(iii): non-negativity plus p_λ <= p_μ for every λ ⊵ μ in 𝒫^m
// with parts <= part_bound, where p_λ multiplies over all m entries
// (zero parts contribute p_0).  On a product violation the equivalent 2x2
// minor is attached as witness via the quadruple scan.
inline TNReport char_iii_check(const SequenceView& p, int m, int part_bound) {
    TNReport rep;
    rep.k = 2;
    rep.row_bound = part_bound + 1;
    rep.col_bound = part_bound + 1;
    for (int n = 0; n <= part_bound; ++n) {
        if (p.at(n) < 0) {
            rep.holds = false;
            rep.witness = MinorIndex({0}, {n});
            rep.witness_value = p.at(n);
            return rep;
        }
    }
    auto product_of = [&](const Partition& lam) {
        Rational acc(1);
        for (int part : lam.parts()) acc *= p.at(part);
        return acc;
    };
    for (int mm = 2; mm <= m; ++mm) {
        std::vector<Partition> box = detail::box_partitions(mm, part_bound);
        for (const Partition& lam : box) {
            for (const Partition& mu : box) {
                if (lam.weight() != mu.weight() || !dominates(lam, mu)) continue;
                Rational pl = product_of(lam), pm = product_of(mu);
                if (pl > pm) {
                    rep.holds = false;
                    rep.pair_witness = CharIIIWitness{lam, mu, pl, pm};
                    TNReport quad = tn2_via_char(p, part_bound);
                    if (!quad.holds) {
                        rep.witness = quad.witness;
                        rep.witness_value = quad.witness_value;
                    }
                    return rep;
                }
            }
        }
    }
    return rep;
}

struct TransferIdentityReport {
    Rational lhs, rhs;
    bool equal = false;
};

// The minor-expansion identity behind the Toeplitz-to-power transfer:
//   det(𝒮_p[A x a]) = Σ_{0 <= b_1 < ... < b_ℓ <= a_ℓ}
//                     det(𝒮_p[B x b]) det(𝒯_p[b x a]),
// with B = A - 1 elementwise.  Terms with b_ℓ > a_ℓ vanish, which makes the
// sum finite.  Holds for arbitrary real sequences, no TN hypothesis.
inline TransferIdentityReport transfer_identity_check(const SequenceView& p,
                                                      const MinorIndex& idx) {
    idx.validate();
    if (idx.rows[0] < 1)
        throw std::invalid_argument("transfer_identity_check: requires A_1 >= 1");
    int order = static_cast<int>(idx.order());
    int max_row = idx.rows.back();
    int max_col = idx.cols.back();

    PowerView spower(p, max_row + 1, max_col + 1);
    ToeplitzView stoeplitz(p);

    TransferIdentityReport rep;
    rep.lhs = minor_det(spower, idx);

    std::vector<int> shifted(idx.rows);
    for (int& r : shifted) --r;

    rep.rhs = Rational(0);
    std::vector<int> b = detail::first_combination(order);
    do {
        MinorIndex left(shifted, b);
        MinorIndex right(b, idx.cols);
        rep.rhs += minor_det(spower, left) * minor_det(stoeplitz, right);
    } while (detail::next_combination(b, max_col + 1));

    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace domord
