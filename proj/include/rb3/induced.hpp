#pragma once

#include <map>
#include <optional>
#include <tuple>

#include "rb3/operators.hpp"

namespace rb3 {

/// Coefficient of L_{l+m+n-1} in the bracket induced by R at weight lambda.
/// At lambda = 0 this is (f(l)f(m) + f(l)f(n) + f(m)f(n)) D(l,m,n); otherwise the
/// subset sum is expanded literally (see induced_coeff_expanded).
Scalar induced_coeff(const HomogeneousOperator& R, const Scalar& lambda, Index l, Index m, Index n);

/// sum over nonempty I in {1,2,3} of lambda^{|I|-1} [R^_I(x1), R^_I(x2), R^_I(x3)],
/// with R^_I(x_i) = x_i for i in I and R(x_i) otherwise, evaluated on basis
/// vectors with the bracket of A_omega.
Scalar induced_coeff_expanded(const HomogeneousOperator& R, const Scalar& lambda, Index l, Index m, Index n);

/// The induced bracket as a graded coefficient function.
GradedCoeff induced_structure(const HomogeneousOperator& R, const Scalar& lambda);

/// Induced bracket with an optional table on ordered triples l < m < n.
class InducedAlgebra {
public:
    InducedAlgebra(HomogeneousOperator R, Scalar lambda);

    const HomogeneousOperator& source() const { return R_; }
    const Scalar& weight() const { return lambda_; }
    const GradedCoeff& coeff() const { return g_; }

    /// Nonzero entries on ordered triples; empty until build_table.
    const std::map<std::tuple<Index, Index, Index>, Scalar>& table() const { return table_; }
    std::optional<Window> table_window() const { return window_; }

    /// Coefficient for any ordering, read from the table (with the permutation
    /// sign) when the triple lies in the tabulated window.
    Scalar lookup(Index l, Index m, Index n) const;

    friend InducedAlgebra build_table(const HomogeneousOperator& R, const Scalar& lambda, Window w);

private:
    HomogeneousOperator R_;
    Scalar lambda_;
    GradedCoeff g_;
    std::map<std::tuple<Index, Index, Index>, Scalar> table_;
    std::optional<Window> window_;
};

/// Materializes the induced bracket on ordered triples of w, omitting zeros.
InducedAlgebra build_table(const HomogeneousOperator& R, const Scalar& lambda, Window w);

struct InducedVerification {
    Report fundamental;
    Report rota_baxter;
    bool passed() const { return fundamental.passed && rota_baxter.passed; }
};

/// Fundamental identity of the induced bracket and the Rota-Baxter identity of
/// R against it, both over w.
InducedVerification verify_induced(const HomogeneousOperator& R, const Scalar& lambda, Window w,
                                   const CheckOptions& opts = {});

/// Compares the printed closed-form structure constants of the induced
/// algebras with induced_coeff on every applicable triple built from
/// parameters in w. Each check records tuple (l, m, n); a wrong output index is
/// reported with lhs = printed index and rhs = l + m + n - 1.
SuiteReport crosscheck_closed_forms(const HomogeneousOperator& R, Window w, const CheckOptions& opts = {});

}  // namespace rb3
