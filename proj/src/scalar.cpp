#include "rb3/scalar.hpp"

namespace rb3 {

Scalar Scalar::parse(std::string_view text) {
    if (text.find('a') != std::string_view::npos) return Scalar(RatFun::parse(text));
    return Scalar(Rat::parse(text));
}

RatFun Scalar::lifted() const {
    if (is_rational()) return RatFun(rat());
    return ratfun();
}

bool Scalar::is_zero() const {
    return std::visit([](const auto& v) { return v.is_zero(); }, v_);
}

bool Scalar::is_one() const {
    if (is_rational()) return rat().is_one();
    const auto c = ratfun().as_constant();
    return c && c->is_one();
}

Rat Scalar::eval(const Rat& a0) const {
    if (is_rational()) return rat();
    return ratfun().eval(a0);
}

Scalar Scalar::inverse() const {
    if (is_rational()) return Scalar(rat().inverse());
    return Scalar(ratfun().inverse());
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (is_rational() && o.is_rational()) {
        std::get<Rat>(v_) += o.rat();
    } else {
        v_ = lifted() + o.lifted();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (is_rational() && o.is_rational()) {
        std::get<Rat>(v_) -= o.rat();
    } else {
        v_ = lifted() - o.lifted();
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_rational() && o.is_rational()) {
        std::get<Rat>(v_) *= o.rat();
    } else {
        v_ = lifted() * o.lifted();
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZero();
    if (is_rational() && o.is_rational()) {
        std::get<Rat>(v_) /= o.rat();
    } else {
        v_ = lifted() / o.lifted();
    }
    return *this;
}

Scalar Scalar::operator-() const {
    return std::visit([](const auto& v) { return Scalar(-v); }, v_);
}

bool operator==(const Scalar& x, const Scalar& y) {
    if (x.is_rational() && y.is_rational()) return x.rat() == y.rat();
    return x.lifted() == y.lifted();
}

std::string Scalar::str() const {
    return std::visit([](const auto& v) { return v.str(); }, v_);
}

Scalar field_arith(const Scalar& x, const Scalar& y, ArithOp op) {
    switch (op) {
        case ArithOp::add: return x + y;
        case ArithOp::sub: return x - y;
        case ArithOp::mul: return x * y;
        case ArithOp::div: return x / y;
    }
    throw std::invalid_argument("unknown arithmetic operation");
}

}  // namespace rb3
