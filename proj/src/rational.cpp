#include "rb3/rational.hpp"

#include <cctype>
#include <functional>

namespace rb3 {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw ParseError("malformed rational: '" + std::string(whole) + "'");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError("malformed rational: '" + std::string(whole) + "'");
        }
    }
    std::string owned(s.front() == '+' ? s.substr(1) : s);
    return mpz_class(owned, 10);
}

}  // namespace

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ZeroDenominator();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_integer(s, text));
    const mpz_class num = parse_integer(trim(s.substr(0, slash)), text);
    const std::string_view den_text = trim(s.substr(slash + 1));
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    return Rat(num, parse_integer(den_text, text));
}

Rat Rat::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rat r;
    r.v_ = 1 / v_;
    return r;
}

Rat Rat::abs() const {
    Rat r;
    r.v_ = ::abs(v_);
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

Rat Rat::operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
}

std::size_t Rat::hash() const {
    return std::hash<std::string>{}(str());
}

}  // namespace rb3
