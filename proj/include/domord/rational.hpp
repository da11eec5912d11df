#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace domord {

// All arithmetic in the library is exact.  Rationals are GMP-backed and kept
// in lowest terms with a positive denominator (mpq_class canonical form).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "num", "-num", "num/den" with optional sign on the numerator.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty literal");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("parse_rational: bad literal '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

// "num/den", or just "num" when the denominator is 1.
inline std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace domord
