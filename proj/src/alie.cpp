#include "rb3/alie.hpp"

#include <charconv>

#include "rb3/parallel.hpp"

namespace rb3 {

Window::Window(Index lo_, Index hi_) : lo(lo_), hi(hi_) {
    if (lo > hi) {
        throw std::invalid_argument("empty window " + std::to_string(lo) + ".." + std::to_string(hi));
    }
}

Window Window::parse(std::string_view text) {
    const auto sep = text.find("..");
    if (sep == std::string_view::npos) throw ParseError("window must look like LO..HI: '" + std::string(text) + "'");
    auto read = [&](std::string_view part) {
        Index v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
            throw ParseError("bad window bound '" + std::string(part) + "'");
        }
        return v;
    };
    const Index lo = read(text.substr(0, sep));
    const Index hi = read(text.substr(sep + 2));
    if (lo > hi) throw ParseError("window bounds reversed: '" + std::string(text) + "'");
    return Window(lo, hi);
}

std::string Window::str() const { return std::to_string(lo) + ".." + std::to_string(hi); }

// ---------------------------------------------------------------------------

Element Element::basis(Index m, Scalar c) {
    Element e;
    e.add_term(m, c);
    return e;
}

Scalar Element::coeff(Index m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void Element::add_term(Index m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Element operator*(const Scalar& c, const Element& x) {
    Element out;
    if (c.is_zero()) return out;
    for (const auto& [m, v] : x.terms_) out.terms_.emplace(m, c * v);
    return out;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*L_" + std::to_string(m);
    }
    return s;
}

// ---------------------------------------------------------------------------

namespace {
inline Index parity_sign(Index m) { return (m % 2 == 0) ? 1 : -1; }
}  // namespace

Index det_D_int(Index l, Index m, Index n) {
    // Cofactor expansion along the parity row.
    return parity_sign(l) * (n - m) - parity_sign(m) * (n - l) + parity_sign(n) * (m - l);
}

Scalar det_D(Index l, Index m, Index n) { return Scalar(det_D_int(l, m, n)); }

bool d_zero_predicate(Index l, Index m, Index n) {
    if (l == m || l == n || m == n) return true;
    const bool lo = (l % 2 != 0), mo = (m % 2 != 0), no = (n % 2 != 0);
    return (lo && mo && no) || (!lo && !mo && !no);
}

GradedCoeff GradedCoeff::structure() {
    return {"D", [](Index l, Index m, Index n) { return det_D(l, m, n); }};
}

GradedCoeff GradedCoeff::zero() {
    return {"zero", [](Index, Index, Index) { return Scalar(); }};
}

Element bracket(const Element& x, const Element& y, const Element& z, const GradedCoeff& g) {
    Element out;
    for (const auto& [l, cl] : x.terms()) {
        for (const auto& [m, cm] : y.terms()) {
            const Scalar clm = cl * cm;
            for (const auto& [n, cn] : z.terms()) {
                const Scalar gv = g(l, m, n);
                if (gv.is_zero()) continue;
                out.add_term(output_index(l, m, n), clm * cn * gv);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// g(a, y2, y3) * g(a + y2 + y3 - 1, b, c), skipping the outer bracket when the inner one vanishes.
Scalar nested(const GradedCoeff& g, Index a, Index y2, Index y3, Index b, Index c) {
    const Scalar inner = g(a, y2, y3);
    if (inner.is_zero()) return inner;
    return inner * g(output_index(a, y2, y3), b, c);
}

void fundamental_tuple(const GradedCoeff& g, Index x1, Index x2, Index x3, Index y2, Index y3, Report& r) {
    r.count();
    const Scalar lhs = nested(g, x1, x2, x3, y2, y3);
    const Scalar rhs = nested(g, x1, y2, y3, x2, x3) + nested(g, x2, y2, y3, x3, x1) + nested(g, x3, y2, y3, x1, x2);
    r.expect_equal({x1, x2, x3, y2, y3}, lhs, rhs);
}

}  // namespace

Report check_fundamental_identity(const GradedCoeff& g, Window w, const CheckOptions& opts) {
    return run_partitioned(w.lo, w.hi, opts, [&](Index from, Index to, Report& r) {
        for (Index x1 = from; x1 <= to; ++x1) {
            if (opts.strict) {
                for (Index x2 = w.lo; x2 <= w.hi; ++x2)
                    for (Index x3 = w.lo; x3 <= w.hi; ++x3)
                        for (Index y2 = w.lo; y2 <= w.hi; ++y2)
                            for (Index y3 = w.lo; y3 <= w.hi; ++y3) fundamental_tuple(g, x1, x2, x3, y2, y3, r);
            } else {
                for (Index x2 = x1 + 1; x2 <= w.hi; ++x2)
                    for (Index x3 = x2 + 1; x3 <= w.hi; ++x3)
                        for (Index y2 = w.lo; y2 <= w.hi; ++y2)
                            for (Index y3 = y2 + 1; y3 <= w.hi; ++y3) fundamental_tuple(g, x1, x2, x3, y2, y3, r);
            }
        }
    });
}

Report check_derivation(const IndexFn& d, const GradedCoeff& g, const Scalar& lambda, Window w,
                        const CheckOptions& opts) {
    const bool weighted = !lambda.is_zero();
    const Scalar lambda2 = lambda * lambda;
    return run_partitioned(w.lo, w.hi, opts, [&](Index from, Index to, Report& r) {
        for (Index l = from; l <= to; ++l)
            for (Index m = w.lo; m <= w.hi; ++m)
                for (Index n = w.lo; n <= w.hi; ++n) {
                    r.count();
                    if (l == m || l == n || m == n) continue;
                    const Scalar gv = g(l, m, n);
                    if (gv.is_zero()) continue;
                    const Scalar dl = d(l), dm = d(m), dn = d(n);
                    Scalar factor = dl + dm + dn;
                    if (weighted) {
                        factor += lambda * (dl * dm + dl * dn + dm * dn) + lambda2 * (dl * dm * dn);
                    }
                    r.expect_equal({l, m, n}, d(output_index(l, m, n)) * gv, factor * gv);
                }
    });
}

Report check_rota_baxter(const IndexFn& f, const GradedCoeff& g, const Scalar& lambda, Window w,
                         const CheckOptions& opts) {
    const Scalar lambda2 = lambda * lambda;
    return run_partitioned(w.lo, w.hi, opts, [&](Index from, Index to, Report& r) {
        for (Index l = from; l <= to; ++l)
            for (Index m = w.lo; m <= w.hi; ++m)
                for (Index n = w.lo; n <= w.hi; ++n) {
                    r.count();
                    if (l == m || l == n || m == n) continue;
                    const Scalar gv = g(l, m, n);
                    if (gv.is_zero()) continue;
                    const Scalar fl = f(l), fm = f(m), fn = f(n);
                    const Scalar lhs = fl * fm * fn * gv;
                    const Scalar factor = (fl * fm + fl * fn + fm * fn) + lambda * (fl + fm + fn) + lambda2;
                    const Scalar rhs = factor.is_zero() ? Scalar() : factor * f(output_index(l, m, n)) * gv;
                    r.expect_equal({l, m, n}, lhs, rhs);
                }
    });
}

}  // namespace rb3
