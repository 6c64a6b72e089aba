#pragma once

// Exact rational arithmetic for the whole library. GMP-backed through
// boost::multiprecision; consumers link against -lgmp.
//
// Three things are easy to get wrong with mpq and are centralized here:
//  * mpq constructed from a string is NOT canonicalized, so parsing never
//    uses the string constructor.
//  * the (num, den) constructor canonicalizes only when both arguments are
//    bigints; plain int arguments send a negative denominator through an
//    unsigned conversion. Ratio construction with a runtime-signed
//    denominator must go through make_rational below.
//  * a zero denominator raises SIGFPE inside GMP instead of throwing, so it
//    is rejected before any mpq is built.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dglcp {

using bigint = boost::multiprecision::mpz_int;
using rational = boost::multiprecision::mpq_rational;

// Input that the user got wrong (files, flags, malformed games).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A broken internal invariant. Reaching this is a bug, not a user mistake.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline rational make_rational(const bigint& num, const bigint& den) {
    if (den == 0) throw input_error("zero denominator");
    return rational(num, den);
}

namespace detail {
inline bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}
}  // namespace detail

// Accepts "n", "-n", "n/d", "-n/d" with decimal digits. In strict mode the
// input must already be canonical: d >= 1, gcd(n, d) = 1, no "-0", no
// leading zeros, and zero written as "0" or "0/1".
inline rational parse_rational(const std::string& text, bool strict = false) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && s[0] == '-') {
        neg = true;
        s = s.substr(1);
    }
    std::string num_part = s, den_part = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num_part = s.substr(0, slash);
        den_part = s.substr(slash + 1);
    }
    if (!detail::all_digits(num_part) || !detail::all_digits(den_part))
        throw input_error("bad rational literal: '" + text + "'");
    bigint num(num_part);
    bigint den(den_part);
    if (den == 0)
        throw input_error("zero denominator in rational literal: '" + text + "'");
    if (neg) num = -num;
    rational r(num, den);  // canonicalizes
    if (strict) {
        bool leading_zero = (num_part.size() > 1 && num_part[0] == '0') ||
                            (den_part.size() > 1 && den_part[0] == '0');
        if (leading_zero || (neg && num == 0) ||
            numerator(r) != num || denominator(r) != den)
            throw input_error("rational literal not canonical: '" + text + "'");
    }
    return r;
}

// Always "num/den" with the reduced denominator, e.g. "2/1", "-1/3", "0/1".
// Uniform output keeps serialized files byte-stable.
inline std::string format_rational(const rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const rational& r) {
    return r.template convert_to<double>();
}

inline int sign(const rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

}  // namespace dglcp
