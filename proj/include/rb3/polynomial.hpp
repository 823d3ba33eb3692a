#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rb3/rational.hpp"

namespace rb3 {

/// Dense univariate polynomial in the parameter `a` with rational coefficients.
/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial is the empty vector and equality is structural.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& constant);
    explicit Poly(std::vector<Rat> coeffs);

    /// The monomial `a`.
    static Poly variable();

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rat& lead() const { return c_.back(); }
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const;

    /// Divides by the leading coefficient; zero stays zero.
    Poly monic() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Dense rendering, highest degree first: "<c>*a^<k>" terms and a bare
    /// constant, every coefficient written out. Positive coefficients after the
    /// first term take '+', all others '-' (so "a" renders as "1*a^1-0").
    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Quotient and remainder of Euclidean division; throws DivisionByZero for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(Poly x, Poly y);

}  // namespace rb3
