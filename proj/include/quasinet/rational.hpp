#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace quasinet {

using Rational = mpq_class;

/// Thrown for every invalid input: bad labels, broken invariants, malformed
/// files. The CLI maps it to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Canonical "num/den" rendering; integers keep the "/1" so every value has
/// the same shape on the wire.
std::string to_string(const Rational& value);

/// Accepts "n", "n/d" and "-n/d". Rejects zero denominators, whitespace and
/// decimal notation.
Rational parse_rational(std::string_view text);

double to_double(const Rational& value);

/// mpq_class(n, d) does not reduce; everything downstream assumes reduced
/// values, so build non-literal ratios through here.
inline Rational ratio(long num, long den) {
    if (den == 0) throw Error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace quasinet
