#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domord/poly.hpp"
#include "domord/rational.hpp"

namespace domord {

// Thrown when an entry of an infinite-support sequence is requested beyond
// the stored coefficient prefix.
class insufficient_coefficients : public std::runtime_error {
  public:
    explicit insufficient_coefficients(const std::string& what)
        : std::runtime_error(what) {}
};

// A stored prefix of a sequence p = {p_n}.  When support_is_finite, every
// entry beyond the prefix is exactly 0; otherwise such queries throw.
// Negative indices always read 0.
struct SequenceView {
    std::vector<Rational> coeffs;
    bool support_is_finite = true;

    SequenceView() = default;
    explicit SequenceView(std::vector<Rational> c, bool finite = true)
        : coeffs(std::move(c)), support_is_finite(finite) {}

    Rational at(long n) const {
        if (n < 0) return Rational(0);
        if (static_cast<std::size_t>(n) < coeffs.size()) return coeffs[static_cast<std::size_t>(n)];
        if (support_is_finite) return Rational(0);
        throw insufficient_coefficients("sequence entry " + std::to_string(n) +
                                        " beyond stored prefix of length " +
                                        std::to_string(coeffs.size()));
    }

    std::size_t prefix_length() const { return coeffs.size(); }

    // Largest stored index with a nonzero coefficient; nullopt if none.
    std::optional<std::size_t> support_bound() const {
        for (std::size_t i = coeffs.size(); i-- > 0;)
            if (coeffs[i] != 0) return i;
        return std::nullopt;
    }

    bool nonnegative_prefix() const {
        for (const Rational& c : coeffs)
            if (c < 0) return false;
        return true;
    }

    Poly generating_function() const { return Poly(coeffs); }
};

inline SequenceView parse_sequence(const std::string& text, bool finite = true) {
    Poly p = parse_poly(text);
    return SequenceView(p.coeffs(), finite);
}

// Shape predicates evaluated on the stored prefix.  For finite support the
// unimodality test sees the zero tail (one appended zero is enough: two tail
// zeros can never straddle a strict valley).  The log-concavity tests use the
// stored triples p_{k-1}, p_k, p_{k+1}; a zero tail cannot break the
// non-strict inequality.
struct ShapeReport {
    bool unimodal = true;
    bool log_concave = true;
    bool strictly_log_concave = true;
    bool prefix_only = false;  // set when support_is_finite is false
};

inline ShapeReport shape(const SequenceView& p) {
    ShapeReport r;
    r.prefix_only = !p.support_is_finite;

    std::vector<Rational> v = p.coeffs;
    if (p.support_is_finite) v.push_back(Rational(0));

    // unimodal: no i < j < k with p_i > p_j < p_k
    bool seen_descent = false;
    Rational prev;
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (idx > 0) {
            if (v[idx] < prev) seen_descent = true;
            else if (v[idx] > prev && seen_descent) {
                r.unimodal = false;
                break;
            }
        }
        prev = v[idx];
    }

    for (std::size_t k = 1; k + 1 < p.coeffs.size(); ++k) {
        Rational lhs = p.coeffs[k] * p.coeffs[k];
        Rational rhs = p.coeffs[k + 1] * p.coeffs[k - 1];
        if (lhs < rhs) r.log_concave = false;
        if (lhs <= rhs) r.strictly_log_concave = false;
    }
    return r;
}

}  // namespace domord
