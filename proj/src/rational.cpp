#include "hyperell/rational.hpp"

#include <stdexcept>

namespace hyperell {

Rational parse_rational(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("not a rational: '" + std::string(text) + "'");
    };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(BigInt(std::string(text)));
        }
        const BigInt num{std::string(text.substr(0, slash))};
        const BigInt den{std::string(text.substr(slash + 1))};
        if (den == 0) throw bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

bool is_nonpositive_integer(const Rational& q) {
    return denominator(q) == 1 && numerator(q) <= 0;
}

} // namespace hyperell
