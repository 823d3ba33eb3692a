#include "rb3/polynomial.hpp"

#include <algorithm>

namespace rb3 {

Poly::Poly(const Rat& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(i)];
}

Rat Poly::eval(const Rat& x) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::monic() const {
    if (is_zero() || lead().is_one()) return *this;
    return *this * lead().inverse();
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[static_cast<std::size_t>(i)];
        if (i == degree()) {
            if (c.sign() < 0) out += '-';
        } else {
            out += c.sign() > 0 ? '+' : '-';
        }
        out += c.abs().str();
        if (i > 0) out += "*a^" + std::to_string(i);
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.degree() < den.degree()) return {Poly(), num};
    std::vector<Rat> q(static_cast<std::size_t>(num.degree() - den.degree() + 1));
    std::vector<Rat> r = num.coeffs();
    const Rat inv_lead = den.lead().inverse();
    const int dd = den.degree();
    for (int shift = num.degree() - dd; shift >= 0; --shift) {
        const Rat t = r[static_cast<std::size_t>(shift + dd)] * inv_lead;
        q[static_cast<std::size_t>(shift)] = t;
        if (t.is_zero()) continue;
        for (int j = 0; j <= dd; ++j) {
            r[static_cast<std::size_t>(shift + j)] -= t * den.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly gcd(Poly x, Poly y) {
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

}  // namespace rb3
