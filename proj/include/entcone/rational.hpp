#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace entcone {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// The two-argument cpp_rational constructor rejects negative denominators,
// so build quotients by division instead.
inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    return Rational(num) / Rational(den);
}

inline std::string rational_to_string(const Rational& q) {
    return q.str();
}

// Accepts "p", "p/q" and plain decimal forms like "1.5" or "-0.25".
Rational rational_from_string(const std::string& s);

} // namespace entcone
