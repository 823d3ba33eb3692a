#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rb3/alie.hpp"

namespace rb3 {

class HomogeneousOperator;

/// f given by a finite table; every stored value is nonzero.
struct FiniteSupport {
    std::map<Index, Scalar> table;

    FiniteSupport() = default;
    /// Drops zero entries.
    explicit FiniteSupport(std::map<Index, Scalar> values);

    Scalar at(Index m) const;
    std::vector<Index> support() const;
};

/// f(0) = 1, f(1) = b, zero elsewhere.
struct FamilyR01 {
    Scalar b;
};

/// f(0) = 1, f(1) = -1, f(2 m0 k) = -f(1 - 2 m0 k) = 1/(k a - (k - 1)), zero elsewhere.
struct FamilyR02 {
    Index m0;
    Scalar a;
};

/// f(2 m0 k + 2 s0) = -f(1 - 2 m0 k - 2 s0) = 1/(k a - (k - 1)), zero elsewhere; 1 <= s0 < m0.
struct FamilyR03 {
    Index m0;
    Index s0;
    Scalar a;
};

/// f(m1) = 1, zero elsewhere; m1 not in {0, 1}.
struct FamilyR04 {
    Index m1;
};

/// f(m1) = 1, f(1 - m1) = b != 0, zero elsewhere; m1 not in {0, 1}.
struct FamilyR05 {
    Index m1;
    Scalar b;
};

/// c * R for an operator whose support is not finite.
struct ScaledOperator {
    Scalar factor;
    std::shared_ptr<const HomogeneousOperator> base;
};

/// Arbitrary diagonal operator given by a callable (tests, general-weight experiments).
struct PointwiseOperator {
    std::string label;
    IndexFn fn;
};

/// Diagonal operator R(L_m) = f(m) L_m.
class HomogeneousOperator {
public:
    using Variant = std::variant<FiniteSupport, FamilyR01, FamilyR02, FamilyR03, FamilyR04, FamilyR05,
                                 ScaledOperator, PointwiseOperator>;

    HomogeneousOperator() : v_(FiniteSupport{}) {}
    HomogeneousOperator(FiniteSupport f) : v_(std::move(f)) {}  // NOLINT(google-explicit-constructor)

    static HomogeneousOperator finite(std::map<Index, Scalar> values);
    static HomogeneousOperator r01(Scalar b);
    static HomogeneousOperator r02(Index m0, Scalar a);
    static HomogeneousOperator r03(Index m0, Index s0, Scalar a);
    static HomogeneousOperator r04(Index m1);
    static HomogeneousOperator r05(Index m1, Scalar b);
    static HomogeneousOperator pointwise(std::string label, IndexFn fn);
    /// c * base without simplification; prefer rb3::scale.
    static HomogeneousOperator scaled(Scalar c, HomogeneousOperator base);

    const Variant& variant() const { return v_; }

    template <class T>
    const T* get_if() const { return std::get_if<T>(&v_); }

    /// f(m); throws DegenerateParameter where a family denominator vanishes.
    Scalar operator()(Index m) const;

    /// Short human-readable description, e.g. "R02(m0=1, a=3)".
    std::string label() const;

    /// True when the support is known to be finite (tables and the R01/R04/R05 families).
    bool has_finite_support() const;

    IndexFn as_fn() const;

private:
    explicit HomogeneousOperator(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

/// k a - (k - 1): the reciprocal of the family value at progression position k.
Scalar family_denominator(const Scalar& a, Index k);

Scalar eval_f(const HomogeneousOperator& R, Index m);

/// Applies R to a finitely supported element.
Element apply(const HomogeneousOperator& R, const Element& x);

/// Two arithmetic progressions symmetric about 1/2:
/// Even: {2 m0 k} u {1 - 2 m0 k};  Shifted: {2 m0 k + 2 s0} u {1 - 2 m0 k - 2 s0}.
struct Supporter {
    Index m0 = 1;
    std::optional<Index> s0;

    static Supporter even(Index m0);
    static Supporter shifted(Index m0, Index s0);

    /// Position k of m on the even branch (m = 2 m0 k [+ 2 s0]), if any.
    std::optional<Index> even_position(Index m) const;
    /// Position k of m on the odd branch (m = 1 - 2 m0 k [- 2 s0]), if any.
    std::optional<Index> odd_position(Index m) const;
};

bool supporter_contains(const Supporter& s, Index m);

/// Supporter of an R02/R03 family, possibly under scaling; nullopt for other operators.
std::optional<Supporter> supporter_of(const HomogeneousOperator& R);

/// f(l)f(m)f(n)D(l,m,n) = (f(l)f(n) + f(m)f(n) + f(l)f(m)) f(l+m+n-1) D(l,m,n) over w^3.
Report check_rb_weight0(const HomogeneousOperator& R, Window w, const CheckOptions& opts = {});

/// Decides the weight-zero identity on all of Z^3 for a finitely supported f.
/// Only triples inside S^3 or of the form (p, q, 1 + s - p - q) with p, q, s in S
/// can be violated, so those are the ones enumerated.
Report check_rb_global_finite(const FiniteSupport& R, const CheckOptions& opts = {});

/// Finite support view of an operator that has one; nullopt otherwise.
std::optional<FiniteSupport> to_finite_support(const HomogeneousOperator& R);

/// c R. Finite-support operators come back as a FiniteSupport table.
HomogeneousOperator scale(const HomogeneousOperator& R, const Scalar& c);

/// 1/f on a window where f has no zeros. Evaluation outside the window is
/// allowed and throws NotInvertibleOnWindow at a zero of f.
class InverseCoefficients {
public:
    InverseCoefficients(HomogeneousOperator R, Window w) : R_(std::move(R)), w_(w) {}

    Scalar operator()(Index m) const;
    Window window() const { return w_; }
    IndexFn as_fn() const;

private:
    HomogeneousOperator R_;
    Window w_;
};

/// Throws NotInvertibleOnWindow listing every index of w where f vanishes.
InverseCoefficients inverse_on_window(const HomogeneousOperator& R, Window w);

/// Identities satisfied by the two infinite-support families (R02, R03), each
/// checked over index parameters drawn from w. See identities.cpp for the list.
SuiteReport identity_suite(const HomogeneousOperator& R, Window w, const CheckOptions& opts = {});

}  // namespace rb3
