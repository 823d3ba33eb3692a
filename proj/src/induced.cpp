#include "rb3/induced.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace rb3 {

Scalar induced_coeff_expanded(const HomogeneousOperator& R, const Scalar& lambda, Index l, Index m, Index n) {
    const std::array<Element, 3> x{Element::basis(l), Element::basis(m), Element::basis(n)};
    const std::array<Element, 3> rx{apply(R, x[0]), apply(R, x[1]), apply(R, x[2])};
    const GradedCoeff D = GradedCoeff::structure();

    Element sum;
    for (unsigned mask = 1; mask < 8; ++mask) {
        std::array<const Element*, 3> args{};
        Scalar weight(1);
        int size = 0;
        for (unsigned i = 0; i < 3; ++i) {
            const bool hat = (mask >> i) & 1U;
            args[i] = hat ? &x[i] : &rx[i];
            size += hat ? 1 : 0;
        }
        for (int p = 1; p < size; ++p) weight *= lambda;
        if (weight.is_zero()) continue;
        sum += weight * bracket(*args[0], *args[1], *args[2], D);
    }
    return sum.coeff(output_index(l, m, n));
}

Scalar induced_coeff(const HomogeneousOperator& R, const Scalar& lambda, Index l, Index m, Index n) {
    if (!lambda.is_zero()) return induced_coeff_expanded(R, lambda, l, m, n);
    const Index d = det_D_int(l, m, n);
    if (d == 0) return Scalar();
    const Scalar fl = R(l), fm = R(m), fn = R(n);
    return (fl * fm + fl * fn + fm * fn) * Scalar(d);
}

GradedCoeff induced_structure(const HomogeneousOperator& R, const Scalar& lambda) {
    return {"induced by " + R.label(),
            [R, lambda](Index l, Index m, Index n) { return induced_coeff(R, lambda, l, m, n); }};
}

// ---------------------------------------------------------------------------

InducedAlgebra::InducedAlgebra(HomogeneousOperator R, Scalar lambda)
    : R_(std::move(R)), lambda_(std::move(lambda)), g_(induced_structure(R_, lambda_)) {}

Scalar InducedAlgebra::lookup(Index l, Index m, Index n) const {
    if (!window_ || !window_->contains(l) || !window_->contains(m) || !window_->contains(n)) return g_(l, m, n);
    if (l == m || l == n || m == n) return Scalar();
    std::array<Index, 3> t{l, m, n};
    int sign = 1;
    // Bubble sort, tracking the parity of the permutation.
    for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i < 2 - pass; ++i) {
            if (t[i] > t[i + 1]) {
                std::swap(t[i], t[i + 1]);
                sign = -sign;
            }
        }
    }
    const auto it = table_.find({t[0], t[1], t[2]});
    if (it == table_.end()) return Scalar();
    return sign > 0 ? it->second : -it->second;
}

InducedAlgebra build_table(const HomogeneousOperator& R, const Scalar& lambda, Window w) {
    InducedAlgebra A(R, lambda);
    for (Index l = w.lo; l <= w.hi; ++l)
        for (Index m = l + 1; m <= w.hi; ++m)
            for (Index n = m + 1; n <= w.hi; ++n) {
                Scalar v = A.g_(l, m, n);
                if (!v.is_zero()) A.table_.emplace(std::make_tuple(l, m, n), std::move(v));
            }
    A.window_ = w;
    return A;
}

InducedVerification verify_induced(const HomogeneousOperator& R, const Scalar& lambda, Window w,
                                   const CheckOptions& opts) {
    const GradedCoeff g = induced_structure(R, lambda);
    return {check_fundamental_identity(g, w, opts), check_rota_baxter(R.as_fn(), g, lambda, w, opts)};
}

// ---------------------------------------------------------------------------

namespace {

class Crosscheck {
public:
    Crosscheck(const HomogeneousOperator& R, const CheckOptions& opts) : R_(R), opts_(opts) {}

    // Printed value `expected` at L_{out} for the triple (l, m, n).
    void entry(const std::string& name, Index l, Index m, Index n, const Scalar& expected, Index out) {
        Report& r = part(name);
        r.count();
        const Scalar got = induced_coeff(R_, Scalar(), l, m, n);
        r.expect_equal({l, m, n}, expected, got);
        if (!expected.is_zero() && out != output_index(l, m, n)) {
            r.fail({l, m, n}, Scalar(out), Scalar(output_index(l, m, n)));
        }
    }

    SuiteReport finish() { return std::move(out_); }

private:
    Report& part(const std::string& name) {
        for (auto& [n, r] : out_.parts) {
            if (n == name) return r;
        }
        out_.parts.emplace_back(name, opts_.make_report());
        return out_.parts.back().second;
    }

    const HomogeneousOperator& R_;
    CheckOptions opts_;
    SuiteReport out_;
};

Scalar sgn_pow(Index m) { return Scalar(m % 2 == 0 ? 1 : -1); }

void r01_tables(Crosscheck& c, const FamilyR01& f, Window w) {
    for (Index m = w.lo; m <= w.hi; ++m) {
        if (m == 0 || m == 1) continue;
        c.entry("[0,1,m]", 0, 1, m, f.b * (Scalar(2 * m - 1) + sgn_pow(m)), m);
    }
}

void r02_tables(Crosscheck& c, const FamilyR02& f, Window w) {
    const Index m0 = f.m0;
    const Supporter W = Supporter::even(m0);
    const Scalar& a = f.a;
    auto lam = [&](Index k) { return family_denominator(a, k); };
    auto S = [](Index v) { return Scalar(v); };

    for (Index m = w.lo; m <= w.hi; ++m) {
        const Index ev = 2 * m, od = 2 * m + 1;
        const bool evok = !supporter_contains(W, ev), odok = !supporter_contains(W, od);
        if (evok) c.entry("[0,1,2m]", 0, 1, ev, S(-4 * m), ev);
        if (odok) c.entry("[0,1,2m+1]", 0, 1, od, S(-4 * m), od);
        for (Index k1 = w.lo; k1 <= w.hi; ++k1) {
            if (k1 == 0) continue;
            const Scalar L1 = lam(k1);
            if (L1.is_zero()) continue;
            const Index e1 = 2 * m0 * k1, o1 = 1 - 2 * m0 * k1;
            if (evok) {
                c.entry("[0,1-2m0k1,2m]", 0, o1, ev, S(-4 * m) / L1, 2 * m - 2 * m0 * k1);
                c.entry("[1,2m0k1,2m]", 1, e1, ev, -S(4 * m0 * k1 - 4 * m) / L1, 2 * m + 2 * m0 * k1);
                c.entry("[1,1-2m0k1,2m]", 1, o1, ev, -S(4 * m0 * k1) / L1, 2 * m - 2 * m0 * k1 + 1);
            }
            if (odok) {
                c.entry("[0,2m0k1,2m+1]", 0, e1, od, -S(4 * m0 * k1) / L1, 2 * m + 2 * m0 * k1);
                c.entry("[1,2m0k1,2m+1]", 1, e1, od, S(4 * m) / L1, 2 * m + 2 * m0 * k1 + 1);
                c.entry("[0,1-2m0k1,2m+1]", 0, o1, od, -S(4 * m + 4 * m0 * k1) / L1, 2 * m - 2 * m0 * k1 + 1);
            }
            for (Index k2 = w.lo; k2 <= w.hi; ++k2) {
                if (k2 == 0) continue;
                const Scalar L2 = lam(k2);
                if (L2.is_zero()) continue;
                const Index e2 = 2 * m0 * k2, o2 = 1 - 2 * m0 * k2;
                if (evok) {
                    c.entry("[2m0k1,1-2m0k2,2m]", e1, o2, ev, -S(4 * m - 4 * m0 * k1) / (L1 * L2),
                            2 * m + 2 * m0 * (k1 - k2));
                }
                if (odok) {
                    c.entry("[2m0k1,1-2m0k2,2m+1]", e1, o2, od, -S(4 * m + 4 * m0 * k2) / (L1 * L2),
                            2 * m + 2 * m0 * (k1 - k2) + 1);
                }
                if (k1 == k2) continue;
                if (odok) {
                    c.entry("[2m0k1,2m0k2,2m+1]", e1, e2, od, S(4 * m0 * (k1 - k2)) / (L1 * L2),
                            2 * m + 2 * m0 * (k1 + k2));
                }
                if (evok) {
                    c.entry("[1-2m0k1,1-2m0k2,2m]", o1, o2, ev, S(4 * m0 * (k1 - k2)) / (L1 * L2),
                            2 * m - 2 * m0 * (k1 + k2) + 1);
                }
            }
        }
    }

    for (Index k1 = w.lo; k1 <= w.hi; ++k1) {
        if (k1 == 0 || lam(k1).is_zero()) continue;
        const Scalar L1 = lam(k1);
        const Index e1 = 2 * m0 * k1, o1 = 1 - 2 * m0 * k1;
        for (Index k2 = w.lo; k2 <= w.hi; ++k2) {
            if (k2 == 0 || lam(k2).is_zero()) continue;
            const Scalar L2 = lam(k2);
            const Index e2 = 2 * m0 * k2, o2 = 1 - 2 * m0 * k2;
            if (k1 != k2) {
                c.entry("[0,2m0k1,1-2m0k2]", 0, e1, o2, S(-4 * m0 * k1) * (L2 - L1 - S(1)) / (L1 * L2),
                        2 * m0 * (k1 - k2));
                c.entry("[0,1-2m0k1,1-2m0k2]", 0, o1, o2, S(4 * m0 * (k1 - k2)) * (S(1) - L2 - L1) / (L1 * L2),
                        -2 * m0 * (k1 + k2) + 1);
                c.entry("[1,2m0k1,1-2m0k2]", 1, e1, o2, S(4 * m0 * k2) * (L1 - L2 - S(1)) / (L1 * L2),
                        2 * m0 * (k1 - k2) + 1);
                c.entry("[1,2m0k1,2m0k2]", 1, e1, e2, S(4 * m0 * (k1 - k2)) * (S(1) - L2 - L1) / (L1 * L2),
                        2 * m0 * (k1 + k2));
            }
            for (Index k3 = w.lo; k3 <= w.hi; ++k3) {
                if (k3 == 0 || lam(k3).is_zero()) continue;
                const Scalar L3 = lam(k3);
                const Index o3 = 1 - 2 * m0 * k3;
                if (k1 != k2) {
                    c.entry("[2m0k1,2m0k2,1-2m0k3]", e1, e2, o3, S(4 * m0 * (k1 - k2)) * (L3 - L2 - L1) / (L1 * L2 * L3),
                            2 * m0 * (k1 + k2 - k3));
                }
                if (k2 != k3) {
                    c.entry("[2m0k1,1-2m0k2,1-2m0k3]", e1, o2, o3,
                            S(4 * m0 * (k2 - k3)) * (L1 - L2 - L3) / (L1 * L2 * L3), 2 * m0 * (k1 - k2 - k3) + 1);
                }
            }
        }
    }
}

void r03_tables(Crosscheck& c, const FamilyR03& f, Window w) {
    const Index m0 = f.m0, s0 = f.s0;
    const Supporter W = Supporter::shifted(m0, s0);
    auto lam = [&](Index k) { return family_denominator(f.a, k); };
    auto S = [](Index v) { return Scalar(v); };
    auto E = [&](Index k) { return 2 * m0 * k + 2 * s0; };
    auto O = [&](Index k) { return 1 - 2 * m0 * k - 2 * s0; };

    for (Index k1 = w.lo; k1 <= w.hi; ++k1) {
        const Scalar L1 = lam(k1);
        if (L1.is_zero()) continue;
        for (Index k2 = w.lo; k2 <= w.hi; ++k2) {
            const Scalar L2 = lam(k2);
            if (L2.is_zero()) continue;
            for (Index k3 = w.lo; k3 <= w.hi; ++k3) {
                const Scalar L3 = lam(k3);
                if (L3.is_zero()) continue;
                if (k1 != k2) {
                    c.entry("[E(k1),E(k2),O(k3)]", E(k1), E(k2), O(k3),
                            S(4 * m0 * (k1 - k2)) * (L3 - L2 - L1) / (L1 * L2 * L3), 2 * m0 * (k1 + k2 - k3) + 2 * s0);
                }
                if (k2 != k3) {
                    c.entry("[E(k1),O(k2),O(k3)]", E(k1), O(k2), O(k3),
                            S(4 * m0 * (k2 - k3)) * (L1 - L2 - L3) / (L1 * L2 * L3),
                            2 * m0 * (k1 - k2 - k3) - 2 * s0 + 1);
                }
            }
            for (Index m = w.lo; m <= w.hi; ++m) {
                const Index ev = 2 * m, od = 2 * m + 1;
                const bool evok = !supporter_contains(W, ev), odok = !supporter_contains(W, od);
                if (odok) {
                    c.entry("[E(k1),O(k2),2m+1]", E(k1), O(k2), od, -S(4 * (m + m0 * k2 + s0)) / (L1 * L2),
                            2 * m + 2 * m0 * (k1 - k2) + 1);
                }
                if (evok) {
                    c.entry("[E(k1),O(k2),2m]", E(k1), O(k2), ev, S(4 * (m - m0 * k1 - s0)) / (L1 * L2),
                            2 * m + 2 * m0 * (k1 - k2));
                }
                if (k1 == k2) continue;
                if (odok) {
                    c.entry("[E(k1),E(k2),2m+1]", E(k1), E(k2), od, S(4 * m0 * (k1 - k2)) / (L1 * L2),
                            2 * m + 2 * m0 * (k1 + k2) + 4 * s0);
                }
                if (evok) {
                    c.entry("[O(k1),O(k2),2m]", O(k1), O(k2), ev, S(4 * m0 * (k1 - k2)) / (L1 * L2),
                            2 * m - 2 * m0 * (k1 + k2) - 4 * s0 + 1);
                }
            }
        }
    }
}

void r04_tables(Crosscheck& c, Window w) {
    for (Index l = w.lo; l <= w.hi; ++l)
        for (Index m = l + 1; m <= w.hi; ++m)
            for (Index n = m + 1; n <= w.hi; ++n) c.entry("abelian", l, m, n, Scalar(), output_index(l, m, n));
}

void r05_tables(Crosscheck& c, const FamilyR05& f, Window w) {
    for (Index m = w.lo; m <= w.hi; ++m) {
        if (m == f.m1 || m == 1 - f.m1) continue;
        c.entry("[m1,1-m1,m]", f.m1, 1 - f.m1, m, f.b * det_D(f.m1, 1 - f.m1, m), m);
    }
}

}  // namespace

SuiteReport crosscheck_closed_forms(const HomogeneousOperator& R, Window w, const CheckOptions& opts) {
    Crosscheck c(R, opts);
    if (const auto* f = R.get_if<FamilyR01>()) {
        r01_tables(c, *f, w);
    } else if (const auto* f = R.get_if<FamilyR02>()) {
        r02_tables(c, *f, w);
    } else if (const auto* f = R.get_if<FamilyR03>()) {
        r03_tables(c, *f, w);
    } else if (R.get_if<FamilyR04>()) {
        r04_tables(c, w);
    } else if (const auto* f = R.get_if<FamilyR05>()) {
        r05_tables(c, *f, w);
    } else {
        throw std::invalid_argument("closed forms exist only for the R01..R05 families");
    }
    return c.finish();
}

}  // namespace rb3
