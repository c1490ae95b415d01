#ifndef HSJACK_RATIONAL_HPP
#define HSJACK_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hsjack {

using Rational = mpq_class;
using Integer = mpz_class;

// Thrown for malformed user input (bad rationals, invalid motifs, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when an exact computation hits a degenerate case, e.g. a zero pivot.
class SingularSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "p/q", "p" or a plain integer with optional sign. Throws InvalidInput.
Rational parse_rational(const std::string& text);

/// Always "p/q", also for integers ("3/1"), as used by the JSON output.
std::string to_pq(const Rational& q);

/// Compact form: "3", "-2/5".
std::string to_short(const Rational& q);

double to_double(const Rational& q);

inline Rational make_rational(long p, long q = 1)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace hsjack

#endif
