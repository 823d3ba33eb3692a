#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rb3/polynomial.hpp"

namespace rb3 {

/// Element of the rational function field Q(a), kept in canonical form:
/// numerator and denominator coprime, denominator monic, zero is 0/1.
class RatFun {
public:
    RatFun() : den_(Rat(1)) {}
    explicit RatFun(const Rat& constant) : num_(constant), den_(Rat(1)) {}
    explicit RatFun(Poly p) : num_(std::move(p)), den_(Rat(1)) {}

    /// Canonical form of n/d; throws ZeroDenominator when d is the zero polynomial.
    static RatFun normalize(Poly n, Poly d);

    /// The transcendental parameter `a`.
    static RatFun variable();

    /// Parses arithmetic over integers and `a` with + - * / ^ and parentheses,
    /// which covers the canonical rendering produced by str().
    static RatFun parse(std::string_view text);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    std::optional<Rat> as_constant() const;

    /// Exact value at a = a0; throws PoleAtPoint when the denominator vanishes there.
    Rat eval(const Rat& a0) const;

    RatFun inverse() const;

    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);

    friend RatFun operator+(RatFun x, const RatFun& y) { return x += y; }
    friend RatFun operator-(RatFun x, const RatFun& y) { return x -= y; }
    friend RatFun operator*(RatFun x, const RatFun& y) { return x *= y; }
    friend RatFun operator/(RatFun x, const RatFun& y) { return x /= y; }
    RatFun operator-() const;

    friend bool operator==(const RatFun&, const RatFun&) = default;

    /// "<num>/<den>"; a part is parenthesised unless it is an integer constant.
    /// 1/a renders as "1/(1*a^1-0)".
    std::string str() const;

private:
    RatFun(Poly n, Poly d, bool /*canonical*/) : num_(std::move(n)), den_(std::move(d)) {}

    Poly num_;
    Poly den_;
};

/// Named entry point for canonicalisation.
inline RatFun ratfun_normalize(Poly n, Poly d) { return RatFun::normalize(std::move(n), std::move(d)); }

/// Named entry point for specialisation at a rational point.
inline Rat ratfun_eval(const RatFun& r, const Rat& a0) { return r.eval(a0); }

}  // namespace rb3
