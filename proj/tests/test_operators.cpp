#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "rb3/errors.hpp"
#include "rb3/operators.hpp"

using namespace rb3;

namespace {

Scalar q(const char* text) { return Scalar::parse(text); }

bool same_on(const HomogeneousOperator& x, const HomogeneousOperator& y, Window w) {
    for (Index m = w.lo; m <= w.hi; ++m)
        if (!(x(m) == y(m))) return false;
    return true;
}

// Global verdict from brute force over a window wide enough to contain every
// relevant triple of a support inside [-6, 6].
bool brute_force_global(const FiniteSupport& f) {
    const IndexFn fn = [&](Index m) { return f.at(m); };
    for (Index l = -20; l <= 20; ++l)
        for (Index m = -20; m <= 20; ++m)
            for (Index n = -20; n <= 20; ++n) {
                const bool touches = !f.at(l).is_zero() || !f.at(m).is_zero() || !f.at(n).is_zero();
                if (touches && !oracle::rb0_holds(fn, l, m, n)) return false;
            }
    return true;
}

FiniteSupport random_support(oracle::Gen& g, Index lo, Index hi, int max_size) {
    std::map<Index, Scalar> t;
    const int size = static_cast<int>(g.integer(1, max_size));
    for (int i = 0; i < size; ++i) t[g.integer(lo, hi)] = Scalar(g.nonzero_rational(3));
    return FiniteSupport(t);
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("family values") {
    const auto r02 = HomogeneousOperator::r02(1, Scalar(3));
    CHECK(eval_f(r02, 2) == q("1/3"));
    CHECK(eval_f(r02, -2) == q("-1"));
    CHECK(eval_f(r02, 3) == q("1"));
    CHECK(eval_f(r02, 0) == q("1"));
    CHECK(eval_f(r02, 1) == q("-1"));

    const auto r03 = HomogeneousOperator::r03(7, 2, Scalar(2));
    CHECK(eval_f(r03, 4) == q("1"));
    CHECK(eval_f(r03, 18) == q("1/2"));
    CHECK(eval_f(r03, 5) == q("0"));
    CHECK_THROWS_AS(eval_f(r03, -10), DegenerateParameter);
    try {
        eval_f(r03, 11);
        FAIL("expected DegenerateParameter");
    } catch (const DegenerateParameter& e) {
        CHECK(e.k() == -1);
        CHECK(e.index() == 11);
    }

    const auto r03b = HomogeneousOperator::r03(4, 3, q("3/5"));
    CHECK(eval_f(r03b, 14) == q("5/3"));
    for (Index k = -10; k <= 10; ++k) CHECK(eval_f(r03b, 8 * k + 6) == Scalar(5) / Scalar(5 - 2 * k));

    const auto r01 = HomogeneousOperator::r01(Scalar(7));
    CHECK(eval_f(r01, 0) == q("1"));
    CHECK(eval_f(r01, 1) == q("7"));
    CHECK(eval_f(r01, 2).is_zero());

    const auto r05 = HomogeneousOperator::r05(3, Scalar(5));
    CHECK(eval_f(r05, 3) == q("1"));
    CHECK(eval_f(r05, -2) == q("5"));
    CHECK(eval_f(r05, 4).is_zero());
}

TEST_CASE("symbolic family values") {
    const auto R = HomogeneousOperator::r02(1, Scalar::symbol());
    const Scalar f2 = R(2);
    CHECK(f2.is_symbolic());
    CHECK(f2 * Scalar::symbol() == Scalar(1));
    for (Index k = -5; k <= 5; ++k) {
        if (k == 0) continue;
        const Scalar v = R(2 * k);
        // 1 / f(2k) = k a - (k - 1), affine in a
        CHECK(v.inverse().eval(Rat(3)) == Rat(2 * k + 1));
    }
}

TEST_CASE("constructor constraints") {
    CHECK_THROWS_AS(HomogeneousOperator::r02(0, Scalar(3)), std::invalid_argument);
    CHECK_THROWS_AS(HomogeneousOperator::r03(3, 3, Scalar(3)), std::invalid_argument);
    CHECK_THROWS_AS(HomogeneousOperator::r03(3, 0, Scalar(3)), std::invalid_argument);
    CHECK_THROWS_AS(HomogeneousOperator::r04(0), std::invalid_argument);
    CHECK_THROWS_AS(HomogeneousOperator::r04(1), std::invalid_argument);
    CHECK_THROWS_AS(HomogeneousOperator::r05(2, Scalar(0)), std::invalid_argument);
    CHECK_NOTHROW(HomogeneousOperator::r01(Scalar(0)));
    CHECK_NOTHROW(HomogeneousOperator::r01(Scalar(-1)));
    // parameters with lambda_k = 0 somewhere are accepted; the error is raised on use
    CHECK_NOTHROW(HomogeneousOperator::r02(1, q("1/2")));
    CHECK(FiniteSupport({{3, Scalar(0)}, {4, Scalar(2)}}).support() == std::vector<Index>{4});
}

TEST_CASE("supporter membership") {
    const Supporter e = Supporter::even(3);
    CHECK(supporter_contains(e, 6));
    CHECK(supporter_contains(e, -5));
    CHECK_FALSE(supporter_contains(e, 4));
    const Supporter s = Supporter::shifted(7, 2);
    CHECK(supporter_contains(s, 4));
    CHECK(supporter_contains(s, -3));
    CHECK(supporter_contains(Supporter::shifted(4, 3), 6));
    for (Index k = -6; k <= 6; ++k) {
        CHECK(supporter_contains(s, 14 * k + 4));
        CHECK(supporter_contains(s, -14 * k - 3));
        CHECK_FALSE(supporter_contains(s, 14 * k + 5));
    }
}

TEST_CASE("support matches the supporter") {
    struct Case {
        HomogeneousOperator R;
        bool r02;
    };
    const std::vector<Case> cases{
        {HomogeneousOperator::r02(1, Scalar(3)), true},
        {HomogeneousOperator::r02(2, q("5/2")), true},
        {HomogeneousOperator::r02(3, Scalar::symbol()), true},
        {HomogeneousOperator::r03(4, 3, q("3/5")), false},
        {HomogeneousOperator::r03(5, 1, Scalar::symbol()), false},
    };
    for (const auto& c : cases) {
        const auto sup = supporter_of(c.R);
        REQUIRE(sup.has_value());
        for (Index m = -40; m <= 40; ++m) {
            const bool expected = supporter_contains(*sup, m) || (c.r02 && (m == 0 || m == 1));
            CHECK((!c.R(m).is_zero()) == expected);
            CHECK((c.R(m) + c.R(1 - m)).is_zero());
        }
    }
    CHECK_FALSE(supporter_of(HomogeneousOperator::r04(3)).has_value());
}

TEST_CASE("weight-zero check examples") {
    CHECK(check_rb_weight0(HomogeneousOperator::r01(Scalar(7)), Window(-10, 10)).passed);
    CHECK(check_rb_weight0(HomogeneousOperator::r02(1, Scalar::symbol()), Window(-6, 6)).passed);
    const auto bad = HomogeneousOperator::finite({{3, Scalar(1)}, {4, Scalar(1)}});
    const Report r = check_rb_weight0(bad, Window(-6, 8));
    CHECK_FALSE(r.passed);
    const IndexFn f = bad.as_fn();
    for (const auto& ce : r.counterexamples) CHECK_FALSE(oracle::rb0_holds(f, ce.tuple[0], ce.tuple[1], ce.tuple[2]));
    CHECK_THROWS_AS(check_rb_weight0(HomogeneousOperator::r03(7, 2, Scalar(2)), Window(-16, 16)), DegenerateParameter);
}

TEST_CASE("weight-zero check agrees with the direct identity") {
    const auto R = HomogeneousOperator::r02(2, Scalar(3));
    const IndexFn f = R.as_fn();
    const Report r = check_rb_weight0(R, Window(-5, 5));
    CHECK(r.passed);
    CHECK(r.tuples_checked == 11 * 11 * 11);
    for (Index l = -5; l <= 5; ++l)
        for (Index m = -5; m <= 5; ++m)
            for (Index n = -5; n <= 5; ++n) REQUIRE(oracle::rb0_holds(f, l, m, n));
}

TEST_CASE("global finite decision examples") {
    CHECK(check_rb_global_finite(FiniteSupport({{0, Scalar(1)}, {1, Scalar(5)}})).passed);
    oracle::Gen g(9);
    for (int i = 0; i < 10; ++i) {
        CHECK(check_rb_global_finite(FiniteSupport({{3, Scalar(1)}, {-2, Scalar(g.nonzero_rational())}})).passed);
    }
    const FiniteSupport bad({{0, Scalar(1)}, {1, Scalar(-1)}, {4, Scalar(1)}});
    const Report r = check_rb_global_finite(bad);
    CHECK_FALSE(r.passed);
    const IndexFn f = [&](Index m) { return bad.at(m); };
    for (const auto& ce : r.counterexamples) CHECK_FALSE(oracle::rb0_holds(f, ce.tuple[0], ce.tuple[1], ce.tuple[2]));
    CHECK(check_rb_global_finite(FiniteSupport{}).passed);
}

TEST_CASE("global decision agrees with brute force") {
    oracle::Gen g(314);
    int passing = 0;
    for (int i = 0; i < 60; ++i) {
        FiniteSupport f = random_support(g, -6, 6, 3);
        if (i % 4 == 0) f = FiniteSupport({{g.integer(-6, 6), Scalar(1)}});
        if (i % 4 == 1) {
            const Index m = g.integer(-5, 6);
            f = FiniteSupport({{m, Scalar(1)}, {1 - m, Scalar(g.nonzero_rational())}});
        }
        const bool global = check_rb_global_finite(f).passed;
        passing += global;
        CHECK(global == brute_force_global(f));
    }
    CHECK(passing > 0);
}

TEST_CASE("window check agrees with global check on window triples") {
    oracle::Gen g(2718);
    for (int i = 0; i < 40; ++i) {
        const FiniteSupport f = random_support(g, -6, 6, 4);
        const HomogeneousOperator R(f);
        const Window w(-6, 6);
        const bool window = check_rb_weight0(R, w).passed;
        const bool global = check_rb_global_finite(f).passed;
        // a global pass implies a window pass; a window failure is a real failure
        if (global) CHECK(window);
        if (!window) CHECK_FALSE(global);
        // the window verdict is exactly the direct identity on window triples
        bool direct = true;
        const IndexFn fn = [&](Index m) { return f.at(m); };
        for (Index l = w.lo; l <= w.hi && direct; ++l)
            for (Index m = w.lo; m <= w.hi && direct; ++m)
                for (Index n = w.lo; n <= w.hi && direct; ++n) direct = oracle::rb0_holds(fn, l, m, n);
        CHECK(window == direct);
    }
}

TEST_CASE("scaling") {
    const auto s = scale(HomogeneousOperator::r04(3), Scalar(2));
    REQUIRE(s.get_if<FiniteSupport>() != nullptr);
    CHECK(s.get_if<FiniteSupport>()->table == std::map<Index, Scalar>{{3, Scalar(2)}});
    CHECK_THROWS_AS(scale(HomogeneousOperator::r04(3), Scalar(0)), ZeroScalar);

    const std::vector<HomogeneousOperator> ops{
        HomogeneousOperator::r01(Scalar(5)),
        HomogeneousOperator::r02(1, Scalar(3)),
        HomogeneousOperator::r03(4, 3, q("3/5")),
        HomogeneousOperator::r05(2, Scalar(-4)),
    };
    for (const auto& R : ops) {
        CHECK(same_on(scale(R, Scalar(1)), R, Window(-20, 20)));
        for (const Scalar& c : {Scalar(2), q("-1/3")}) {
            const auto S = scale(R, c);
            for (Index m = -20; m <= 20; ++m) CHECK(S(m) == c * R(m));
            CHECK(check_rb_weight0(S, Window(-6, 6)).passed);
            CHECK(same_on(scale(S, c.inverse()), R, Window(-20, 20)));
        }
    }
}

TEST_CASE("inverse on a window") {
    const auto R = HomogeneousOperator::r02(1, Scalar(3));
    const auto g = inverse_on_window(R, Window(-8, 8));
    for (Index k = -4; k <= 4; ++k) {
        CHECK(g(2 * k) == Scalar(2 * k + 1));
        CHECK(g(1 - 2 * k) == Scalar(-(2 * k + 1)));
    }
    CHECK(check_derivation(g.as_fn(), GradedCoeff::structure(), Scalar(0), Window(-8, 8)).passed);

    try {
        inverse_on_window(HomogeneousOperator::r02(3, Scalar::symbol()), Window(-3, 3));
        FAIL("expected NotInvertibleOnWindow");
    } catch (const NotInvertibleOnWindow& e) {
        CHECK(std::find(e.zeros().begin(), e.zeros().end(), Index(2)) != e.zeros().end());
    }
    CHECK_THROWS_AS(inverse_on_window(HomogeneousOperator::r04(3), Window(-1, 1)), NotInvertibleOnWindow);
}

TEST_CASE("identity suite") {
    const auto R = HomogeneousOperator::r02(1, Scalar(3));
    // 1/(2 f(2)) + 1/(2 f(-2)) = 3/2 - 1/2
    CHECK(Scalar(1) / (Scalar(2) * R(2)) + Scalar(1) / (Scalar(2) * R(-2)) == Scalar(1));
    for (Index m = -50; m <= 50; ++m) CHECK((R(1 - m) + R(m)).is_zero());

    const SuiteReport s = identity_suite(R, Window(-6, 6));
    CHECK(s.passed());
    for (const char* part : {"antisymmetry", "reciprocal-pair", "reciprocal-three-term", "nonvanishing"}) {
        REQUIRE(s.find(part) != nullptr);
        CHECK(s.find(part)->tuples_checked > 0);
    }

    const SuiteReport t = identity_suite(HomogeneousOperator::r03(4, 3, q("3/5")), Window(-5, 5));
    CHECK(t.passed());
    REQUIRE(t.find("reciprocal-six-term") != nullptr);
    REQUIRE(t.find("not-one-half") != nullptr);

    // the pole at k = -1 is skipped rather than fatal
    CHECK(identity_suite(HomogeneousOperator::r03(7, 2, Scalar(2)), Window(-4, 4)).passed());
    CHECK(identity_suite(HomogeneousOperator::r02(2, Scalar::symbol()), Window(-3, 3)).passed());
    CHECK_THROWS_AS(identity_suite(HomogeneousOperator::r04(3), Window(-3, 3)), std::invalid_argument);
}

TEST_CASE("non-affine reciprocal fails the weight-zero check") {
    // antisymmetric about 1/2, but 1/f is not affine along the supporter
    const auto fake = HomogeneousOperator::pointwise("fake", [](Index m) {
        auto even = [](Index e) {
            if (e % 2 != 0) return Scalar(0);
            const Index k = e / 2;
            return Scalar(1) / Scalar(k * k + 1);
        };
        return m % 2 == 0 ? even(m) : -even(1 - m);
    });
    CHECK_FALSE(check_rb_weight0(fake, Window(-4, 4)).passed);
}

}  // TEST_SUITE
