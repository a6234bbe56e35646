#include "sgp/rational.hpp"

#include <cctype>

#include "sgp/errors.hpp"

namespace sgp {

namespace {

bool is_integer_literal(std::string_view text) {
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return false;
    }
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view text) {
    if (!is_integer_literal(text)) {
        throw ParseError("not an integer literal: '" + std::string(text) + "'");
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    return Integer(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw ParseError("signed denominator in '" + std::string(text) + "'");
    }
    Integer den = parse_integer(den_text);
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    Rational value(num, den);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) {
    return value.get_str(10);
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw DimensionError("dot product of vectors with different lengths");
    }
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

}  // namespace sgp
