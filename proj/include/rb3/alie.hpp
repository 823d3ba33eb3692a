#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rb3/report.hpp"
#include "rb3/scalar.hpp"

namespace rb3 {

/// Inclusive index range used to truncate the basis for exhaustive checks.
struct Window {
    Index lo = 0;
    Index hi = 0;

    Window() = default;
    Window(Index lo_, Index hi_);

    /// "LO..HI", e.g. "-6..6".
    static Window parse(std::string_view text);

    Index size() const { return hi - lo + 1; }
    bool contains(Index m) const { return lo <= m && m <= hi; }
    std::string str() const;

    friend bool operator==(const Window&, const Window&) = default;
};

/// Scalar-valued function on basis indices (diagonal operator coefficients).
using IndexFn = std::function<Scalar(Index)>;

/// Finitely supported vector sum c_m L_m. Zero coefficients are never stored.
class Element {
public:
    Element() = default;

    static Element basis(Index m, Scalar c = Scalar(1));

    Scalar coeff(Index m) const;
    void add_term(Index m, const Scalar& c);
    const std::map<Index, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element x, const Element& y) { return x += y; }
    friend Element operator-(Element x, const Element& y) { return x -= y; }
    friend Element operator*(const Scalar& c, const Element& x);

    friend bool operator==(const Element&, const Element&) = default;

    std::string str() const;

private:
    std::map<Index, Scalar> terms_;
};

/// Homogeneous trilinear bracket [L_l, L_m, L_n] = g(l, m, n) L_{l+m+n-1}.
struct GradedCoeff {
    std::string label;
    std::function<Scalar(Index, Index, Index)> fn;

    Scalar operator()(Index l, Index m, Index n) const { return fn(l, m, n); }

    /// Structure constants of A_omega: the determinant D(l, m, n).
    static GradedCoeff structure();
    /// The abelian bracket.
    static GradedCoeff zero();
};

inline Index output_index(Index l, Index m, Index n) { return l + m + n - 1; }

/// Determinant of the rows ((-1)^l, (-1)^m, (-1)^n), (1, 1, 1), (l, m, n).
Scalar det_D(Index l, Index m, Index n);
Index det_D_int(Index l, Index m, Index n);

/// True exactly when det_D vanishes: repeated index, or all three indices of one parity.
bool d_zero_predicate(Index l, Index m, Index n);

Element bracket(const Element& x, const Element& y, const Element& z, const GradedCoeff& g);

/// [[x1,x2,x3],y2,y3] = [[x1,y2,y3],x2,x3] + [[x2,y2,y3],x3,x1] + [[x3,y2,y3],x1,x2]
/// over basis 5-tuples in `w`. The default enumeration uses x1<x2<x3 and y2<y3,
/// which assumes g is alternating; opts.strict enumerates all of w^5.
Report check_fundamental_identity(const GradedCoeff& g, Window w, const CheckOptions& opts = {});

/// Weight-lambda derivation identity for the diagonal map L_m -> d(m) L_m, over w^3.
Report check_derivation(const IndexFn& d, const GradedCoeff& g, const Scalar& lambda, Window w,
                        const CheckOptions& opts = {});

/// Weight-lambda Rota-Baxter identity for the diagonal map L_m -> f(m) L_m, over w^3.
Report check_rota_baxter(const IndexFn& f, const GradedCoeff& g, const Scalar& lambda, Window w,
                         const CheckOptions& opts = {});

}  // namespace rb3
