#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "rb3/errors.hpp"

namespace rb3 {

/// Exact rational number in lowest terms with a positive denominator.
class Rat {
public:
    Rat() = default;

    template <std::signed_integral T>
    Rat(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    explicit Rat(const mpz_class& integer) : v_(integer) {}
    Rat(const mpz_class& num, const mpz_class& den);

    /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rat parse(std::string_view text);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat inverse() const;
    Rat abs() const;

    /// "p/q", or "p" when q = 1.
    std::string str() const { return v_.get_str(); }

    std::size_t hash() const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const;

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

}  // namespace rb3
