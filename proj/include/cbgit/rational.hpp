#pragma once

// Exact rational arithmetic on top of GMP, plus the "p/q" string format
// used by every serialized document.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cbgit {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Malformed or out-of-range input to any public operation.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input that is well formed but beyond the supported computation size.
class unsupported_size : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw invalid_input("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// "p/q" in lowest terms with q > 0, or "p" when q = 1.
inline std::string to_string(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    return c.get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p/q" or an integer literal. Whitespace and a zero denominator are rejected.
inline Rational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto strip_plus = [](std::string_view s) {
        return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw invalid_input("not a rational literal: '" + std::string(text) + "'");
    Integer p(strip_plus(num), 10), q(strip_plus(den), 10);
    if (q == 0) throw invalid_input("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline Integer floor_of(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

inline Integer ceil_of(const Rational& q) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return c;
}

/// Distance to the nearest integer: min(y - floor(y), ceil(y) - y).
inline Rational dist_to_integers(const Rational& y) {
    Rational down = y - Rational(floor_of(y));
    Rational up = Rational(ceil_of(y)) - y;
    return down < up ? down : up;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw unsupported_size("integer does not fit in a machine word");
    return z.get_si();
}

}  // namespace cbgit
