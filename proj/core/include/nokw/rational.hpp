#ifndef NOKW_RATIONAL_HPP
#define NOKW_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "nokw/errors.hpp"

namespace nokw {

/// Exact rational number.  All linear algebra in the library is carried out
/// over Rat; no floating point appears anywhere.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p", "-p" or "p/q" into a canonicalized rational.
/// Throws invalid_input on malformed text or a zero denominator.
inline Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw invalid_input("empty rational literal");
    Rat value;
    // mpq_class::set_str accepts "p/q"; validate shape first so stray
    // characters fail loudly instead of being half-parsed.
    const std::string allowed = "0123456789/+-";
    for (char c : text) {
        if (allowed.find(c) == std::string::npos)
            throw invalid_input("malformed rational literal: '" + text + "'");
    }
    if (value.set_str(text, 10) != 0)
        throw invalid_input("malformed rational literal: '" + text + "'");
    if (value.get_den() == 0)
        throw invalid_input("zero denominator in rational literal: '" + text + "'");
    value.canonicalize();
    return value;
}

/// Canonical text form "p" or "p/q" with q > 0 and gcd(p, q) = 1.
inline std::string rat_to_string(const Rat& value) {
    Rat v = value;
    v.canonicalize();
    return v.get_str();
}

inline bool is_integer(const Rat& value) { return value.get_den() == 1; }

/// Exact conversion to a machine integer; throws when the value is fractional
/// or out of range (the desk-scale data handled here always fits).
inline long to_long(const Rat& value) {
    if (!is_integer(value)) throw internal_error("expected an integer, got " + rat_to_string(value));
    if (!value.get_num().fits_slong_p()) throw internal_error("integer out of machine range");
    return value.get_num().get_si();
}

} // namespace nokw

#endif // NOKW_RATIONAL_HPP
