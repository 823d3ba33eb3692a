#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "rb3/rational.hpp"
#include "rb3/ratfun.hpp"

namespace rb3 {

/// An exact field element: a rational number, or a rational function of the
/// single parameter `a`. Binary operations on two rationals stay rational; as
/// soon as one side is a rational function the rational side is lifted to a
/// constant rational function and the result is a rational function.
class Scalar {
public:
    Scalar() = default;
    Scalar(Rat r) : v_(std::move(r)) {}                     // NOLINT(google-explicit-constructor)
    Scalar(RatFun f) : v_(std::move(f)) {}                  // NOLINT(google-explicit-constructor)
    template <std::signed_integral T>
    Scalar(T v) : v_(Rat(v)) {}                             // NOLINT(google-explicit-constructor)

    /// "p/q" (or "p") for rationals; anything mentioning `a` is read as a rational function.
    static Scalar parse(std::string_view text);

    /// The symbolic parameter `a`.
    static Scalar symbol() { return Scalar(RatFun::variable()); }

    bool is_rational() const { return std::holds_alternative<Rat>(v_); }
    bool is_symbolic() const { return std::holds_alternative<RatFun>(v_); }
    const Rat& rat() const { return std::get<Rat>(v_); }
    const RatFun& ratfun() const { return std::get<RatFun>(v_); }
    RatFun lifted() const;

    bool is_zero() const;
    bool is_one() const;

    /// Specialises a at a0; rationals are returned unchanged.
    Rat eval(const Rat& a0) const;

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
    Scalar operator-() const;

    /// Equality in the field: a rational equals the constant rational function with the same value.
    friend bool operator==(const Scalar& x, const Scalar& y);

    std::string str() const;

private:
    std::variant<Rat, RatFun> v_;
};

enum class ArithOp { add, sub, mul, div };

/// Field operation by name; div by zero throws DivisionByZero.
Scalar field_arith(const Scalar& x, const Scalar& y, ArithOp op);

}  // namespace rb3
