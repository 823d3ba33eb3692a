#include <cstdint>
#include <type_traits>
#include <vector>

#include "rb3/operators.hpp"
#include "rb3/parallel.hpp"

namespace rb3 {

namespace {

// f tabulated on [lo, hi]; points where a family denominator vanishes are kept as undefined.
class Values {
public:
    Values(const HomogeneousOperator& R, Index lo, Index hi) : lo_(lo) {
        const auto n = static_cast<std::size_t>(hi - lo + 1);
        values_.resize(n);
        defined_.assign(n, 1);
        for (Index m = lo; m <= hi; ++m) {
            const auto i = static_cast<std::size_t>(m - lo);
            try {
                values_[i] = R(m);
            } catch (const DegenerateParameter&) {
                defined_[i] = 0;
            }
        }
    }

    bool defined(Index m) const { return defined_[slot(m)] != 0; }
    bool nonzero(Index m) const { return defined(m) && !values_[slot(m)].is_zero(); }
    const Scalar& operator()(Index m) const { return values_[slot(m)]; }

    bool all_defined(std::initializer_list<Index> ms) const {
        for (Index m : ms) {
            if (!defined(m)) return false;
        }
        return true;
    }
    bool all_nonzero(std::initializer_list<Index> ms) const {
        for (Index m : ms) {
            if (!nonzero(m)) return false;
        }
        return true;
    }

private:
    std::size_t slot(Index m) const { return static_cast<std::size_t>(m - lo_); }

    Index lo_;
    std::vector<Scalar> values_;
    std::vector<std::uint8_t> defined_;
};

// Unreduced fraction p/q; comparisons cross-multiply so no gcd is ever taken.
template <class T>
struct Frac {
    T p;
    T q;

    friend Frac operator*(const Frac& x, const Frac& y) { return {x.p * y.p, x.q * y.q}; }
    friend Frac operator+(const Frac& x, const Frac& y) {
        if (x.q == y.q) return {x.p + y.p, x.q};
        return {x.p * y.q + y.p * x.q, x.q * y.q};
    }
    friend bool same(const Frac& x, const Frac& y) { return x.p * y.q == y.p * x.q; }
    Frac reciprocal() const { return {q, p}; }
};

Frac<Rat> frac_of(const Scalar& x, const Rat*) { return {x.rat(), Rat(1)}; }
Frac<Poly> frac_of(const Scalar& x, const Poly*) {
    if (x.is_rational()) return {Poly(x.rat()), Poly(Rat(1))};
    return {x.ratfun().num(), x.ratfun().den()};
}

template <class T>
Frac<T> frac(const Scalar& x) {
    return frac_of(x, static_cast<const T*>(nullptr));
}

bool any_symbolic(std::initializer_list<const Scalar*> xs) {
    for (const Scalar* x : xs) {
        if (x->is_symbolic()) return true;
    }
    return false;
}

// sum 1/x_i + cx == sum 1/y_j + cy for nonzero x_i, y_j, compared with denominators cleared.
template <class T>
bool reciprocal_sums_equal_as(const std::vector<Scalar>& xs, const Scalar& cx, const std::vector<Scalar>& ys,
                              const Scalar& cy) {
    Frac<T> lhs = frac<T>(cx), rhs = frac<T>(cy);
    for (const Scalar& x : xs) lhs = lhs + frac<T>(x).reciprocal();
    for (const Scalar& y : ys) rhs = rhs + frac<T>(y).reciprocal();
    return same(lhs, rhs);
}

bool reciprocal_sums_equal(const std::vector<Scalar>& xs, const Scalar& cx, const std::vector<Scalar>& ys,
                           const Scalar& cy) {
    bool symbolic = cx.is_symbolic() || cy.is_symbolic();
    for (const auto* side : {&xs, &ys}) {
        for (const Scalar& x : *side) symbolic = symbolic || x.is_symbolic();
    }
    return symbolic ? reciprocal_sums_equal_as<Poly>(xs, cx, ys, cy) : reciprocal_sums_equal_as<Rat>(xs, cx, ys, cy);
}

// Records a failed assertion that carries no natural lhs/rhs pair.
void fail_flag(Report& r, std::vector<Index> tuple, bool expected) {
    r.fail(std::move(tuple), Scalar(expected ? 1 : 0), Scalar(expected ? 0 : 1));
}

Scalar sigma2(const Scalar& x, const Scalar& y, const Scalar& z) { return x * y + x * z + y * z; }

template <class T>
bool product_holds(const Scalar& x, const Scalar& y, const Scalar& z, const Scalar& out) {
    if constexpr (std::is_same_v<T, Rat>) {
        const Rat &a = x.rat(), &b = y.rat(), &c = z.rat();
        return a * b * c == (a * b + a * c + b * c) * out.rat();
    }
    const Frac<T> fx = frac<T>(x), fy = frac<T>(y), fz = frac<T>(z);
    return same(fx * fy * fz, (fx * fy + fx * fz + fy * fz) * frac<T>(out));
}

template <class T>
bool pair_holds(const Scalar& x, const Scalar& y, const Scalar& out, int s) {
    if constexpr (std::is_same_v<T, Rat>) {
        const Rat &a = x.rat(), &b = y.rat();
        return a * b == (a + b + Rat(s) * a * b) * out.rat();
    }
    const Frac<T> fx = frac<T>(x), fy = frac<T>(y);
    const Frac<T> sign = frac<T>(Scalar(s));
    return same(fx * fy, (fx + fy + sign * fx * fy) * frac<T>(out));
}

// f(x)f(y)f(z) = (f(x)f(y) + f(x)f(z) + f(y)f(z)) f(out), with out given explicitly.
void product_rule(const Values& f, Index x, Index y, Index z, Index out, std::vector<Index> tuple, Report& r) {
    r.count();
    if (!f.all_defined({x, y, z, out})) return;
    const bool ok = any_symbolic({&f(x), &f(y), &f(z), &f(out)}) ? product_holds<Poly>(f(x), f(y), f(z), f(out))
                                                                    : product_holds<Rat>(f(x), f(y), f(z), f(out));
    if (!ok) r.fail(std::move(tuple), f(x) * f(y) * f(z), sigma2(f(x), f(y), f(z)) * f(out));
}

// f(x)f(y) = (f(x) + f(y) + s f(x)f(y)) f(out); the product rules with f(0) = 1, f(1) = -1 substituted.
void pair_rule(const Values& f, Index x, Index y, Index out, int s, std::vector<Index> tuple, Report& r) {
    r.count();
    if (!f.all_defined({x, y, out})) return;
    const bool ok = any_symbolic({&f(x), &f(y), &f(out)}) ? pair_holds<Poly>(f(x), f(y), f(out), s)
                                                            : pair_holds<Rat>(f(x), f(y), f(out), s);
    if (!ok) {
        r.fail(std::move(tuple), f(x) * f(y), (f(x) + f(y) + Scalar(s) * f(x) * f(y)) * f(out));
    }
}

struct Ranges {
    Window k;
    Index m0;
    Index s0;  // 0 for the even supporter
    Index even(Index k) const { return 2 * m0 * k + 2 * s0; }
};

void common_parts(const Values& f, const Ranges& g, const CheckOptions& opts, SuiteReport& out) {
    const Window w = g.k;

    // f(m) + f(1 - m) = 0.
    const Index span = 2 * g.m0 * std::max(-w.lo, w.hi) + 2 * g.s0 + 1;
    out.parts.emplace_back("antisymmetry", run_partitioned(-span, span, opts, [&](Index a, Index b, Report& r) {
        for (Index m = a; m <= b; ++m) {
            r.count();
            if (!f.all_defined({m, 1 - m})) continue;
            r.expect_equal({m}, f(m) + f(1 - m), Scalar());
        }
    }));

    // Odd/odd/even and odd/even/even product rules.
    out.parts.emplace_back("odd-odd-even", run_partitioned(w.lo, w.hi, opts, [&](Index a, Index b, Report& r) {
        for (Index l = a; l <= b; ++l)
            for (Index m = w.lo; m <= w.hi; ++m) {
                if (m == l) continue;
                for (Index n = w.lo; n <= w.hi; ++n)
                    product_rule(f, 2 * l + 1, 2 * m + 1, 2 * n, 2 * l + 2 * m + 2 * n + 1, {l, m, n}, r);
            }
    }));
    out.parts.emplace_back("odd-even-even", run_partitioned(w.lo, w.hi, opts, [&](Index a, Index b, Report& r) {
        for (Index l = a; l <= b; ++l)
            for (Index m = w.lo; m <= w.hi; ++m)
                for (Index n = w.lo; n <= w.hi; ++n) {
                    if (m == n) continue;
                    product_rule(f, 2 * l + 1, 2 * m, 2 * n, 2 * l + 2 * m + 2 * n, {l, m, n}, r);
                }
    }));
}

void even_supporter_parts(const Values& f, const Ranges& g, const CheckOptions& opts, SuiteReport& out) {
    const Window w = g.k;

    // 1/(2f(E k)) + 1/(2f(-E k)) = 1 and 1/(2f(E k)) - 1/(2f(1 + E k)) = 1.
    Report pair = opts.make_report();
    Report shift = opts.make_report();
    Report half = opts.make_report();
    for (Index k = w.lo; k <= w.hi; ++k) {
        const Index e = g.even(k);
        pair.count();
        shift.count();
        if (f.all_nonzero({e, -e})) {
            if (!reciprocal_sums_equal({f(e), f(-e)}, Scalar(), {}, Scalar(2))) {
                pair.fail({k}, f(e).inverse() + f(-e).inverse(), Scalar(2));
            }
        }
        if (f.all_nonzero({e, 1 + e})) {
            if (!reciprocal_sums_equal({f(e), -f(1 + e)}, Scalar(), {}, Scalar(2))) {
                shift.fail({k}, f(e).inverse() - f(1 + e).inverse(), Scalar(2));
            }
        }
    }
    half.count();
    if (f.all_defined({2 * g.m0, -2 * g.m0}) && f(2 * g.m0) == Scalar(Rat::parse("1/2"))) fail_flag(half, {1}, false);
    out.parts.emplace_back("reciprocal-pair", std::move(pair));
    out.parts.emplace_back("reciprocal-shift", std::move(shift));
    out.parts.emplace_back("not-one-half", std::move(half));

    // 1/f(E k2) + 1/f(E k3) = 1/f(E k1) + 1/f(E(-k1 + k2 + k3)), k2 != k3.
    out.parts.emplace_back("reciprocal-three-term", run_partitioned(w.lo, w.hi, opts, [&](Index a, Index b, Report& r) {
        for (Index k1 = a; k1 <= b; ++k1)
            for (Index k2 = w.lo; k2 <= w.hi; ++k2)
                for (Index k3 = w.lo; k3 <= w.hi; ++k3) {
                    if (k2 == k3) continue;
                    r.count();
                    const Index x1 = g.even(k2), x2 = g.even(k3), y1 = g.even(k1), y2 = g.even(-k1 + k2 + k3);
                    if (!f.all_nonzero({x1, x2, y1, y2})) continue;
                    if (!reciprocal_sums_equal({f(x1), f(x2)}, Scalar(), {f(y1), f(y2)}, Scalar())) {
                        r.fail({k1, k2, k3}, f(x1).inverse() + f(x2).inverse(), f(y1).inverse() + f(y2).inverse());
                    }
                }
    }));

    // Pairwise rules obtained by putting f(0) = 1, f(1) = -1 into the product rules.
    Report pr1 = opts.make_report(), pr2 = opts.make_report(), pr3 = opts.make_report(), pr4 = opts.make_report();
    for (Index x = w.lo; x <= w.hi; ++x)
        for (Index y = w.lo; y <= w.hi; ++y) {
            if (x != y) pair_rule(f, 2 * x + 1, 2 * y + 1, 2 * x + 2 * y + 1, 1, {x, y}, pr1);
            if (y != 0) pair_rule(f, 2 * x + 1, 2 * y, 2 * x + 2 * y, 1, {x, y}, pr2);
            if (x != 0) pair_rule(f, 2 * x + 1, 2 * y, 2 * x + 2 * y + 1, -1, {x, y}, pr3);
            if (x != y) pair_rule(f, 2 * x, 2 * y, 2 * x + 2 * y, -1, {x, y}, pr4);
        }
    out.parts.emplace_back("pair-odd-odd", std::move(pr1));
    out.parts.emplace_back("pair-odd-even", std::move(pr2));
    out.parts.emplace_back("pair-odd-even-shifted", std::move(pr3));
    out.parts.emplace_back("pair-even-even", std::move(pr4));

    // Nonvanishing consequences of four nonzero values f(2k), f(2l), f(2m+1), f(2n+1).
    out.parts.emplace_back("nonvanishing", run_partitioned(w.lo, w.hi, opts, [&](Index a, Index b, Report& r) {
        for (Index k = a; k <= b; ++k) {
            if (k == 0 || !f.nonzero(2 * k)) continue;
            for (Index l = w.lo; l <= w.hi; ++l) {
                if (l == 0 || l == k || !f.nonzero(2 * l)) continue;
                for (Index m = w.lo; m <= w.hi; ++m) {
                    if (m == 0 || !f.nonzero(2 * m + 1)) continue;
                    for (Index n = w.lo; n <= w.hi; ++n) {
                        if (n == 0 || n == m || !f.nonzero(2 * n + 1)) continue;
                        r.count();
                        const Index items[11] = {2 * k + 2 * l,         2 * k + 2 * m,         2 * k + 2 * m + 1,
                                                 2 * m + 2 * n + 1,     1 - 2 * k + 2 * m,     4 * k,
                                                 2 * m + 2 * n + 2 * k + 1, 2 * m + 2 * k + 2 * l, 2 * k - 2 * m,
                                                 1 - 2 * k - 2 * m,     1 - 4 * k};
                        for (int i = 0; i < 11; ++i) {
                            if ((i == 4 || i == 8) && k == -m) continue;
                            if (!f.defined(items[i])) continue;
                            if (f(items[i]).is_zero()) fail_flag(r, {i + 1, k, l, m, n}, true);
                        }
                    }
                }
            }
        }
    }));

    // f(2k) != 0 implies f(-2k) != 0 and f(1 + 2k) != 0.
    Report mirror = opts.make_report();
    for (Index k = w.lo; k <= w.hi; ++k) {
        mirror.count();
        if (!f.nonzero(2 * k) || !f.all_defined({-2 * k, 1 + 2 * k})) continue;
        if (f(-2 * k).is_zero() || f(1 + 2 * k).is_zero()) fail_flag(mirror, {k}, true);
    }
    out.parts.emplace_back("nonvanishing-mirror", std::move(mirror));
}

void shifted_supporter_parts(const Values& f, const Ranges& g, const CheckOptions& opts, SuiteReport& out) {
    const Window w = g.k;

    // Six-term reciprocal identity over pairwise distinct positions.
    out.parts.emplace_back("reciprocal-six-term", run_partitioned(w.lo, w.hi, opts, [&](Index a, Index b, Report& r) {
        for (Index k1 = a; k1 <= b; ++k1)
            for (Index k2 = w.lo; k2 <= w.hi; ++k2) {
                if (k2 == k1) continue;
                for (Index k3 = w.lo; k3 <= w.hi; ++k3) {
                    if (k3 == k1 || k3 == k2) continue;
                    r.count();
                    const Index x1 = g.even(k1), x2 = g.even(k2), x3 = g.even(k3);
                    const Index y1 = g.even(k1 + k2 - k3), y2 = g.even(k1 - k2 + k3), y3 = g.even(-k1 + k2 + k3);
                    if (!f.all_nonzero({x1, x2, x3, y1, y2, y3})) continue;
                    if (!reciprocal_sums_equal({f(x1), f(x2), f(x3)}, Scalar(), {f(y1), f(y2), f(y3)}, Scalar())) {
                        r.fail({k1, k2, k3}, f(x1).inverse() + f(x2).inverse() + f(x3).inverse(),
                               f(y1).inverse() + f(y2).inverse() + f(y3).inverse());
                    }
                }
            }
    }));

    // 1/f(E k) + 1/f(E(-k)) = 2, and f(E k) != 1/2 wherever f(E(-k)) is defined.
    Report pair = opts.make_report();
    Report half = opts.make_report();
    for (Index k = w.lo; k <= w.hi; ++k) {
        const Index x = g.even(k), y = g.even(-k);
        pair.count();
        half.count();
        if (f.all_nonzero({x, y}) && !reciprocal_sums_equal({f(x), f(y)}, Scalar(), {}, Scalar(2))) {
            pair.fail({k}, f(x).inverse() + f(y).inverse(), Scalar(2));
        }
        if (f.all_defined({x, y}) && f(x) == Scalar(Rat::parse("1/2"))) fail_flag(half, {k}, false);
    }
    out.parts.emplace_back("reciprocal-pair", std::move(pair));
    out.parts.emplace_back("not-one-half", std::move(half));

    // Vanishing triple products.
    Report vp = opts.make_report();
    auto vanishing = [&](int item, Index x, Index y, Index z, std::vector<Index> tuple) {
        vp.count();
        if (!f.all_defined({x, y, z})) return;
        const Scalar p = f(x) * f(y) * f(z);
        if (!p.is_zero()) {
            tuple.insert(tuple.begin(), item);
            vp.fail(std::move(tuple), p, Scalar());
        }
    };
    for (Index x = w.lo; x <= w.hi; ++x)
        for (Index y = w.lo; y <= w.hi; ++y) {
            if (x != y) vanishing(1, 2 * x + 1, 2 * y + 1, 2 * x + 2 * y + 1, {x, y});
            if (x != 0) vanishing(2, 2 * x + 1, 2 * y, 2 * x + 2 * y + 1, {x, y});
            if (y != 0) vanishing(3, 2 * x + 1, 2 * y, 2 * x + 2 * y, {x, y});
            if (x != y) vanishing(4, 2 * x, 2 * y, 2 * x + 2 * y, {x, y});
        }
    out.parts.emplace_back("vanishing-products", std::move(vp));

    // Consequences of four nonzero values f(2k), f(2l), f(2m+1), f(2n+1) when f(0) = f(1) = 0.
    out.parts.emplace_back("support-closure", run_partitioned(w.lo, w.hi, opts, [&](Index a, Index b, Report& r) {
        for (Index k = a; k <= b; ++k) {
            if (k == 0 || !f.nonzero(2 * k)) continue;
            for (Index l = w.lo; l <= w.hi; ++l) {
                if (l == 0 || l == k || !f.nonzero(2 * l)) continue;
                for (Index m = w.lo; m <= w.hi; ++m) {
                    if (m == 0 || !f.nonzero(2 * m + 1)) continue;
                    for (Index n = w.lo; n <= w.hi; ++n) {
                        if (n == 0 || n == m || !f.nonzero(2 * n + 1)) continue;
                        r.count();
                        const Index zero_items[6][2] = {{1, 2 * k + 2 * l},     {2, 2 * k + 2 * m},
                                                        {3, 2 * k + 2 * m + 1}, {4, 2 * m + 2 * n + 1},
                                                        {7, 2 * k - 2 * m},     {8, 4 * k}};
                        for (const auto& [item, x] : zero_items) {
                            if (item == 7 && k == -m) continue;
                            if (f.defined(x) && !f(x).is_zero()) fail_flag(r, {item, k, l, m, n}, false);
                        }
                        const Index nonzero_items[2][2] = {{5, 2 * m + 2 * n + 2 * k + 1}, {6, 2 * m + 2 * k + 2 * l}};
                        for (const auto& [item, x] : nonzero_items) {
                            if (f.defined(x) && f(x).is_zero()) fail_flag(r, {item, k, l, m, n}, true);
                        }
                    }
                }
            }
        }
    }));
}

}  // namespace

SuiteReport identity_suite(const HomogeneousOperator& R, Window w, const CheckOptions& opts) {
    Ranges g{w, 1, 0};
    bool even = true;
    if (const auto* f = R.get_if<FamilyR02>()) {
        g.m0 = f->m0;
    } else if (const auto* f = R.get_if<FamilyR03>()) {
        g.m0 = f->m0;
        g.s0 = f->s0;
        even = false;
    } else {
        throw std::invalid_argument("identity suite applies to the R02 and R03 families only");
    }

    const Index K = std::max(-w.lo, w.hi);
    const Index bound = 6 * g.m0 * K + 2 * g.s0 + 2;
    const Values f(R, -bound, bound);

    SuiteReport out;
    common_parts(f, g, opts, out);
    if (even) {
        even_supporter_parts(f, g, opts, out);
    } else {
        shifted_supporter_parts(f, g, opts, out);
    }
    return out;
}

}  // namespace rb3
