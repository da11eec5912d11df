#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domord/partitions.hpp"
#include "domord/rational.hpp"

namespace domord {

// Truncated formal power series over exact rationals.  coeffs[i] is the
// coefficient of x^i; stored leading zeros are allowed.  The zero polynomial
// has no nonzero coefficient and its semantic degree is "none".
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    static Poly one() { return Poly({Rational(1)}); }
    static Poly zero() { return Poly(); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    std::size_t stored_size() const { return coeffs_.size(); }

    // Largest index with nonzero coefficient; nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            if (coeffs_[i] != 0) return i;
        return std::nullopt;
    }

    bool is_zero() const { return !degree().has_value(); }

    bool operator==(const Poly& o) const {
        std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (coeff(i) != o.coeff(i)) return false;
        return true;
    }

  private:
    std::vector<Rational> coeffs_;
};

// Exact Cauchy product.
inline Poly multiply(const Poly& f, const Poly& g) {
    if (f.stored_size() == 0 || g.stored_size() == 0) return Poly::zero();
    std::vector<Rational> out(f.stored_size() + g.stored_size() - 1, Rational(0));
    for (std::size_t i = 0; i < f.stored_size(); ++i) {
        if (f.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < g.stored_size(); ++j) {
            if (g.coeffs()[j] == 0) continue;
            out[i + j] += f.coeffs()[i] * g.coeffs()[j];
        }
    }
    return Poly(std::move(out));
}

// Coefficients 0..t retained; idempotent.
inline Poly truncate(const Poly& p, unsigned t) {
    if (p.stored_size() <= t + 1) return p;
    std::vector<Rational> out(p.coeffs().begin(), p.coeffs().begin() + t + 1);
    return Poly(std::move(out));
}

// p^k, exact; p^0 = 1.  When degree_cap is given, coefficients beyond it are
// dropped after each step, so the cap also bounds the intermediate work.
inline Poly power(const Poly& p, unsigned k, std::optional<unsigned> degree_cap = std::nullopt) {
    Poly acc = Poly::one();
    for (unsigned i = 0; i < k; ++i) {
        acc = multiply(acc, p);
        if (degree_cap) acc = truncate(acc, *degree_cap);
    }
    return acc;
}

// f ⊑ g: every coefficient of f is <= the corresponding coefficient of g.
inline bool coeff_dominated_by(const Poly& f, const Poly& g) {
    std::size_t n = std::max(f.stored_size(), g.stored_size());
    for (std::size_t i = 0; i < n; ++i)
        if (f.coeff(i) > g.coeff(i)) return false;
    return true;
}

// Formal derivative iterated `order` times; order 0 is the identity.
inline Poly formal_derivative(const Poly& p, unsigned order = 1) {
    Poly cur = p;
    for (unsigned step = 0; step < order; ++step) {
        if (cur.stored_size() <= 1) return Poly::zero();
        std::vector<Rational> out(cur.stored_size() - 1);
        for (std::size_t n = 0; n + 1 < cur.stored_size(); ++n)
            out[n] = Rational(static_cast<long>(n + 1)) * cur.coeffs()[n + 1];
        cur = Poly(std::move(out));
    }
    return cur;
}

// f(λ, p, t, x) = Π over parts of truncate(p^part, t).  Empty λ gives 1;
// zero parts contribute the factor 1.
inline Poly row_product(const std::vector<int>& parts, const Poly& p, unsigned t) {
    Poly acc = Poly::one();
    for (int part : parts) {
        if (part < 0) throw std::invalid_argument("row_product: negative part");
        if (part == 0) continue;
        acc = multiply(acc, power(p, static_cast<unsigned>(part), t));
    }
    return acc;
}

inline Poly row_product(const Composition& c, const Poly& p, unsigned t) {
    return row_product(c.parts, p, t);
}
inline Poly row_product(const Partition& lam, const Poly& p, unsigned t) {
    return row_product(lam.parts(), p, t);
}

// Text literal: comma-separated rationals, index = degree, e.g. "1,1/2,0,1/3".
inline Poly parse_poly(const std::string& text) {
    std::vector<Rational> coeffs;
    if (!text.empty()) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
            coeffs.push_back(parse_rational(tok));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    }
    return Poly(std::move(coeffs));
}

inline std::string format(const Poly& p) {
    std::string s;
    for (std::size_t i = 0; i < p.stored_size(); ++i) {
        if (i) s += ',';
        s += format_rational(p.coeffs()[i]);
    }
    return s;
}

}  // namespace domord
