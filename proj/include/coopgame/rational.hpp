#ifndef COOPGAME_RATIONAL_HPP
#define COOPGAME_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "coopgame/errors.hpp"

namespace coopgame {

// All solution-concept arithmetic is exact: rationals over arbitrary
// precision integers. GMP keeps results canonical under +,-,*,/.
using Int = mpz_class;
using Rat = mpq_class;

// "p/q" or "p". Whitespace is not accepted; the sign belongs to p.
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal");
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw parse_error("bad rational literal '" + text + "'");
    if (r.get_den() == 0)
        throw parse_error("zero denominator in rational literal '" + text + "'");
    r.canonicalize();
    return r;
}

// Canonical "p/q" (or "p" for integers); inverse of parse_rational.
inline std::string format_rational(const Rat& r) {
    return r.get_str();
}

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int factorial(unsigned k) {
    Int f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace coopgame

#endif
