#include "rb3/ratfun.hpp"

#include <cctype>

namespace rb3 {

RatFun RatFun::normalize(Poly n, Poly d) {
    if (d.is_zero()) throw ZeroDenominator();
    if (n.is_zero()) return RatFun();
    const Poly g = gcd(n, d);
    if (g.degree() > 0) {
        n = divmod(n, g).first;
        d = divmod(d, g).first;
    }
    const Rat lead = d.lead();
    if (!lead.is_one()) {
        const Rat inv = lead.inverse();
        n *= inv;
        d *= inv;
    }
    return RatFun(std::move(n), std::move(d), true);
}

RatFun RatFun::variable() { return RatFun(Poly::variable()); }

std::optional<Rat> RatFun::as_constant() const {
    if (!is_constant()) return std::nullopt;
    return num_.coeff(0);  // den is monic and constant, hence 1
}

Rat RatFun::eval(const Rat& a0) const {
    const Rat d = den_.eval(a0);
    if (d.is_zero()) throw PoleAtPoint(a0.str());
    return num_.eval(a0) / d;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return normalize(den_, num_);
}

RatFun& RatFun::operator+=(const RatFun& o) {
    const bool one = den_.is_constant(), o_one = o.den_.is_constant();
    if (one && o_one) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        *this = normalize(num_ + o.num_, den_);
        return *this;
    }
    if (one || o_one || gcd(den_, o.den_).degree() == 0) {
        // coprime monic denominators: the sum is already in lowest terms
        num_ = num_ * o.den_ + o.num_ * den_;
        if (num_.is_zero()) {
            *this = RatFun();
        } else {
            den_ = den_ * o.den_;
        }
        return *this;
    }
    *this = normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    if (is_zero() || o.is_zero()) {
        *this = RatFun();
        return *this;
    }
    // cross-cancel so that no gcd of the full products is needed
    Poly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
    if (!d2.is_constant()) {
        const Poly g = gcd(n1, d2);
        if (g.degree() > 0) {
            n1 = divmod(n1, g).first;
            d2 = divmod(d2, g).first;
        }
    }
    if (!d1.is_constant()) {
        const Poly g = gcd(n2, d1);
        if (g.degree() > 0) {
            n2 = divmod(n2, g).first;
            d1 = divmod(d1, g).first;
        }
    }
    num_ = n1 * n2;
    den_ = d1 * d2;
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
    if (o.is_zero()) throw DivisionByZero();
    return *this *= o.inverse();
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, true); }

namespace {

std::string render_part(const Poly& p) {
    if (p.is_constant() && p.coeff(0).is_integer()) return p.str();
    return "(" + p.str() + ")";
}

// Recursive-descent evaluator over Q(a):
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('-' | '+') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | 'a' | '(' expr ')'
class ExprParser {
public:
    explicit ExprParser(std::string_view s) : s_(s) {}

    RatFun run() {
        RatFun v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("cannot parse rational function '" + std::string(s_) + "': " + why);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFun expr() {
        RatFun v = term();
        for (;;) {
            if (accept('+')) {
                v += term();
            } else if (accept('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    RatFun term() {
        RatFun v = unary();
        for (;;) {
            if (accept('*')) {
                v *= unary();
            } else if (accept('/')) {
                RatFun d = unary();
                if (d.is_zero()) throw DivisionByZero();
                v /= d;
            } else {
                return v;
            }
        }
    }

    RatFun unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RatFun power() {
        RatFun base = atom();
        if (!accept('^')) return base;
        const mpz_class e = integer();
        if (e < 0 || e > 4096) fail("exponent out of range");
        RatFun out(Rat(1));
        for (long i = 0; i < e.get_si(); ++i) out *= base;
        return out;
    }

    RatFun atom() {
        skip_ws();
        if (accept('(')) {
            RatFun v = expr();
            if (!accept(')')) fail("missing ')'");
            return v;
        }
        if (accept('a')) return RatFun::variable();
        return RatFun(Rat(integer()));
    }

    mpz_class integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number at offset " + std::to_string(start));
        return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFun RatFun::parse(std::string_view text) { return ExprParser(text).run(); }

std::string RatFun::str() const { return render_part(num_) + "/" + render_part(den_); }

}  // namespace rb3
