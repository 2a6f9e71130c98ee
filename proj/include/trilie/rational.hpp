#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "trilie/error.hpp"

namespace trilie {

// Exact field element. mpq_class keeps values canonical (reduced, positive
// denominator) after every arithmetic operation.
using Scalar = mpq_class;

// Parses "p", "p/q", "-p/q" (optional surrounding whitespace is rejected).
inline Scalar parse_rational(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty rational literal");
    }
    std::string s(text);
    auto slash = s.find('/');
    auto valid_int = [](std::string_view part, bool allow_sign) {
        if (part.empty()) {
            return false;
        }
        std::size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) {
            i = 1;
        }
        if (i == part.size()) {
            return false;
        }
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                return false;
            }
        }
        return true;
    };
    std::string_view num = std::string_view(s).substr(0, slash);
    std::string_view den = slash == std::string::npos ? std::string_view("1")
                                                      : std::string_view(s).substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) {
        throw ParseError("invalid rational literal '" + s + "'");
    }
    std::string num_str(num[0] == '+' ? num.substr(1) : num);
    mpz_class n(num_str, 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in '" + s + "'");
    }
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string format_rational(const Scalar& q) {
    return q.get_str(10);
}

} // namespace trilie
