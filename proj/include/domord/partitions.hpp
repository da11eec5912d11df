#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace domord {

// A composition is a finite vector of non-negative integer parts.  Length is
// part of its identity: trailing zeros matter for the fixed-length families.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {
        for (int x : parts)
            if (x < 0) throw std::invalid_argument("Composition: negative part");
    }

    int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    std::size_t size() const { return parts.size(); }
    // 0-based access; reads 0 beyond the stored length.
    int part(std::size_t i) const { return i < parts.size() ? parts[i] : 0; }

    bool operator==(const Composition& o) const { return parts == o.parts; }
    auto operator<=>(const Composition& o) const { return parts <=> o.parts; }
};

// A partition stores non-increasing parts.  Trailing zeros may be stored
// (fixed-length families) but equality ignores them.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> p) : parts_(std::move(p)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Partition: parts not non-increasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    std::size_t size() const { return parts_.size(); }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int largest() const { return parts_.empty() ? 0 : parts_[0]; }

    std::size_t nonzero_count() const {
        std::size_t n = parts_.size();
        while (n > 0 && parts_[n - 1] == 0) --n;
        return n;
    }

    Partition stripped() const {
        std::vector<int> p(parts_.begin(), parts_.begin() + nonzero_count());
        return Partition(std::move(p));
    }

    Composition as_composition() const { return Composition(parts_); }

    bool operator==(const Partition& o) const {
        std::size_t n = nonzero_count();
        if (n != o.nonzero_count()) return false;
        return std::equal(parts_.begin(), parts_.begin() + n, o.parts_.begin());
    }

    // Lexicographic on stripped parts; used for deterministic ordering only.
    bool operator<(const Partition& o) const {
        std::size_t a = nonzero_count(), b = o.nonzero_count();
        return std::lexicographical_compare(parts_.begin(), parts_.begin() + a,
                                            o.parts_.begin(), o.parts_.begin() + b);
    }

  private:
    std::vector<int> parts_;
};

inline Partition rearrange_to_partition(const Composition& c) {
    std::vector<int> p = c.parts;
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Partition(std::move(p));
}

namespace detail {
// lhs >= rhs prefix-wise on already non-increasing part vectors of any length.
inline bool prefix_dominates(const std::vector<int>& lhs, const std::vector<int>& rhs) {
    long ls = 0, rs = 0;
    std::size_t n = std::max(lhs.size(), rhs.size());
    long lw = std::accumulate(lhs.begin(), lhs.end(), 0L);
    long rw = std::accumulate(rhs.begin(), rhs.end(), 0L);
    if (lw != rw) return false;
    for (std::size_t i = 0; i < n; ++i) {
        ls += i < lhs.size() ? lhs[i] : 0;
        rs += i < rhs.size() ? rhs[i] : 0;
        if (ls < rs) return false;
    }
    return true;
}
}  // namespace detail

// True iff lhs dominates rhs (lhs ⊵ rhs): equal weight and every prefix sum
// of lhs is >= the corresponding prefix sum of rhs.
inline bool dominates(const Partition& lhs, const Partition& rhs) {
    return detail::prefix_dominates(lhs.parts(), rhs.parts());
}

// Compositions are compared through their non-increasing rearrangements.
inline bool dominates(const Composition& lhs, const Composition& rhs) {
    return dominates(rearrange_to_partition(lhs), rearrange_to_partition(rhs));
}

// Cover test: lhs ·▷ rhs iff one unit moves from row j up to row i < j and
// either i = j-1 or rhs(j) = rhs(i).
inline bool covers(const Partition& lhs, const Partition& rhs) {
    std::size_t n = std::max(lhs.size(), rhs.size());
    long i = -1, j = -1;
    for (std::size_t k = 0; k < n; ++k) {
        int d = lhs.part(k) - rhs.part(k);
        if (d == 0) continue;
        if (d == 1 && i < 0 && j < 0)
            i = static_cast<long>(k);
        else if (d == -1 && i >= 0 && j < 0)
            j = static_cast<long>(k);
        else
            return false;
    }
    if (i < 0 || j < 0) return false;
    return i == j - 1 || rhs.part(j) == rhs.part(i);
}

// Conjugate partition: dual(λ)(i) counts the parts of λ that are >= i.
inline Partition dual(const Partition& lam) {
    std::vector<int> out;
    int top = lam.largest();
    out.reserve(top);
    for (int i = 1; i <= top; ++i) {
        int cnt = 0;
        for (int p : lam.parts())
            if (p >= i) ++cnt;
        out.push_back(cnt);
    }
    return Partition(std::move(out));
}

// All compositions of n with exactly m non-negative parts, ascending lex.
inline std::vector<Composition> enumerate_compositions(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("enumerate_compositions: negative argument");
    std::vector<Composition> out;
    std::vector<int> cur(static_cast<std::size_t>(m), 0);
    std::function<void(int, int)> rec = [&](int idx, int rem) {
        if (idx == m) {
            if (rem == 0) out.push_back(Composition(cur));
            return;
        }
        if (idx == m - 1) {
            cur[idx] = rem;
            out.push_back(Composition(cur));
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[idx] = v;
            rec(idx + 1, rem - v);
        }
    };
    if (m == 0) {
        if (n == 0) out.push_back(Composition{});
        return out;
    }
    rec(0, n);
    return out;
}

namespace detail {
inline void partitions_rec(int n, int maxp, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int first = std::min(n, maxp); first >= 1; --first) {
        cur.push_back(first);
        partitions_rec(n - first, first, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

// All partitions of n, descending lex: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(n, n, cur, out);
    return out;
}

// Partitions of n with exactly m non-negative parts (trailing zeros kept),
// i.e. at most m positive parts, padded to length m.  Descending lex.
inline std::vector<Partition> enumerate_partitions(int n, int m) {
    std::vector<Partition> out;
    for (const Partition& p : enumerate_partitions(n)) {
        if (p.nonzero_count() > static_cast<std::size_t>(m)) continue;
        std::vector<int> padded = p.parts();
        padded.resize(static_cast<std::size_t>(m), 0);
        out.push_back(Partition(std::move(padded)));
    }
    return out;
}

inline Composition concat(const Composition& a, const Composition& b) {
    std::vector<int> p = a.parts;
    p.insert(p.end(), b.parts.begin(), b.parts.end());
    return Composition(std::move(p));
}

// Text literal: comma-separated decimal parts, "" = empty.
inline Composition parse_composition(const std::string& text) {
    std::vector<int> parts;
    if (!text.empty()) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
            if (tok.empty()) throw std::invalid_argument("parse_composition: empty part in '" + text + "'");
            std::size_t used = 0;
            int v;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("parse_composition: bad part '" + tok + "'");
            }
            if (used != tok.size() || v < 0)
                throw std::invalid_argument("parse_composition: bad part '" + tok + "'");
            parts.push_back(v);
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    }
    return Composition(std::move(parts));
}

inline Partition parse_partition(const std::string& text) {
    Composition c = parse_composition(text);
    return Partition(c.parts);  // throws unless non-increasing
}

inline std::string format_parts(const std::vector<int>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s;
}

inline std::string format(const Composition& c) { return format_parts(c.parts); }
inline std::string format(const Partition& p) { return format_parts(p.parts()); }

}  // namespace domord
