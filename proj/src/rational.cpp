#include "pbound/rational.hpp"

#include <algorithm>
#include <cctype>

#include "pbound/error.hpp"

namespace pbound {

std::string rational_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

static bool all_digits(const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

Rational parse_rational(const std::string& token) {
    const auto slash = token.find('/');
    std::string num = slash == std::string::npos ? token : token.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : token.substr(slash + 1);

    std::string digits = num;
    if (!digits.empty() && digits[0] == '-') digits.erase(0, 1);
    if (!all_digits(digits) || !all_digits(den))
        throw Error("invalid rational '" + token + "'");
    BigInt q(den);
    if (q == 0) throw Error("invalid rational '" + token + "': zero denominator");
    return Rational(BigInt(num), q);
}

}  // namespace pbound
