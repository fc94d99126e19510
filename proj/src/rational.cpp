#include "radon_nets/rational.hpp"

#include "radon_nets/errors.hpp"

#include <cctype>

namespace radon_nets {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        throw ParseError("expected an exact fraction p/q, got '" + std::string(text) + "'");
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && num.front() == '-') {
        negative = true;
        num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("expected an exact fraction p/q, got '" + std::string(text) + "'");
    BigInt p{std::string(num)};
    BigInt q{std::string(den)};
    if (q == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative)
        p = -p;
    return Rational(p, q);
}

std::string format_rational(const Rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

BigInt floor_rational(const Rational& value) {
    const BigInt n = numerator(value);
    const BigInt d = denominator(value);
    BigInt q = n / d;
    if (n % d != 0 && n < 0)
        q -= 1;
    return q;
}

BigInt ceil_rational(const Rational& value) {
    return -floor_rational(-value);
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

} // namespace radon_nets
