#pragma once

#include <gmpxx.h>

#include <string>

#include "lsv/errors.hpp"

namespace lsv {

// Exact rational scalar. mpq_class keeps values canonical (gcd(p,q) = 1,
// q > 0) as long as canonicalize() runs after every raw p/q construction,
// which the helpers below guarantee.
using Rational = mpq_class;

inline Rational rat(long p, long q = 1) {
    if (q == 0) throw Error("rational with zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" with optional leading minus.
Rational rat_from_string(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rational& r);

}  // namespace lsv
