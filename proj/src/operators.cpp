#include "rb3/operators.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

#include "rb3/parallel.hpp"

namespace rb3 {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Exact quotient when d divides n.
std::optional<Index> exact_div(Index n, Index d) {
    if (n % d != 0) return std::nullopt;
    return n / d;
}

Scalar progression_value(const Scalar& a, Index k, Index m) {
    const Scalar lambda = family_denominator(a, k);
    if (lambda.is_zero()) throw DegenerateParameter(k, m);
    return lambda.inverse();
}

Scalar supporter_value(const Supporter& s, const Scalar& a, Index m) {
    if (const auto k = s.even_position(m)) return progression_value(a, *k, m);
    if (const auto k = s.odd_position(m)) return -progression_value(a, *k, m);
    return Scalar();
}

std::string table_str(const std::map<Index, Scalar>& t) {
    std::string s = "{";
    for (const auto& [m, v] : t) {
        if (s.size() > 1) s += ", ";
        s += std::to_string(m) + ":" + v.str();
    }
    return s + "}";
}

}  // namespace

FiniteSupport::FiniteSupport(std::map<Index, Scalar> values) {
    for (auto& [m, v] : values) {
        if (!v.is_zero()) table.emplace(m, std::move(v));
    }
}

Scalar FiniteSupport::at(Index m) const {
    const auto it = table.find(m);
    return it == table.end() ? Scalar() : it->second;
}

std::vector<Index> FiniteSupport::support() const {
    std::vector<Index> s;
    s.reserve(table.size());
    for (const auto& [m, v] : table) s.push_back(m);
    return s;
}

// ---------------------------------------------------------------------------

HomogeneousOperator HomogeneousOperator::finite(std::map<Index, Scalar> values) {
    return HomogeneousOperator(FiniteSupport(std::move(values)));
}

HomogeneousOperator HomogeneousOperator::r01(Scalar b) { return HomogeneousOperator(Variant(FamilyR01{std::move(b)})); }

HomogeneousOperator HomogeneousOperator::r02(Index m0, Scalar a) {
    if (m0 < 1) throw std::invalid_argument("R02 needs m0 >= 1");
    return HomogeneousOperator(Variant(FamilyR02{m0, std::move(a)}));
}

HomogeneousOperator HomogeneousOperator::r03(Index m0, Index s0, Scalar a) {
    if (m0 < 1) throw std::invalid_argument("R03 needs m0 >= 1");
    if (s0 < 1 || s0 >= m0) throw std::invalid_argument("R03 needs 1 <= s0 < m0");
    return HomogeneousOperator(Variant(FamilyR03{m0, s0, std::move(a)}));
}

HomogeneousOperator HomogeneousOperator::r04(Index m1) {
    if (m1 == 0 || m1 == 1) throw std::invalid_argument("R04 needs m1 not in {0, 1}");
    return HomogeneousOperator(Variant(FamilyR04{m1}));
}

HomogeneousOperator HomogeneousOperator::r05(Index m1, Scalar b) {
    if (m1 == 0 || m1 == 1) throw std::invalid_argument("R05 needs m1 not in {0, 1}");
    if (b.is_zero()) throw std::invalid_argument("R05 needs b != 0");
    return HomogeneousOperator(Variant(FamilyR05{m1, std::move(b)}));
}

HomogeneousOperator HomogeneousOperator::scaled(Scalar c, HomogeneousOperator base) {
    return HomogeneousOperator(Variant(ScaledOperator{std::move(c), std::make_shared<const HomogeneousOperator>(std::move(base))}));
}

HomogeneousOperator HomogeneousOperator::pointwise(std::string label, IndexFn fn) {
    return HomogeneousOperator(Variant(PointwiseOperator{std::move(label), std::move(fn)}));
}

Scalar HomogeneousOperator::operator()(Index m) const {
    return std::visit(
        overloaded{
            [&](const FiniteSupport& f) { return f.at(m); },
            [&](const FamilyR01& f) {
                if (m == 0) return Scalar(1);
                if (m == 1) return f.b;
                return Scalar();
            },
            [&](const FamilyR02& f) { return supporter_value(Supporter::even(f.m0), f.a, m); },
            [&](const FamilyR03& f) { return supporter_value(Supporter::shifted(f.m0, f.s0), f.a, m); },
            [&](const FamilyR04& f) { return m == f.m1 ? Scalar(1) : Scalar(); },
            [&](const FamilyR05& f) {
                if (m == f.m1) return Scalar(1);
                if (m == 1 - f.m1) return f.b;
                return Scalar();
            },
            [&](const ScaledOperator& f) { return f.factor * (*f.base)(m); },
            [&](const PointwiseOperator& f) { return f.fn(m); },
        },
        v_);
}

namespace {

std::string param_str(const Scalar& a) { return a == Scalar::symbol() ? std::string("sym") : a.str(); }

}  // namespace

std::string HomogeneousOperator::label() const {
    return std::visit(
        overloaded{
            [](const FiniteSupport& f) { return "finite" + table_str(f.table); },
            [](const FamilyR01& f) { return "R01(b=" + f.b.str() + ")"; },
            [](const FamilyR02& f) { return "R02(m0=" + std::to_string(f.m0) + ", a=" + param_str(f.a) + ")"; },
            [](const FamilyR03& f) {
                return "R03(m0=" + std::to_string(f.m0) + ", s0=" + std::to_string(f.s0) + ", a=" + param_str(f.a) + ")";
            },
            [](const FamilyR04& f) { return "R04(m1=" + std::to_string(f.m1) + ")"; },
            [](const FamilyR05& f) { return "R05(m1=" + std::to_string(f.m1) + ", b=" + f.b.str() + ")"; },
            [](const ScaledOperator& f) { return "(" + f.factor.str() + ")*" + f.base->label(); },
            [](const PointwiseOperator& f) { return f.label; },
        },
        v_);
}

bool HomogeneousOperator::has_finite_support() const {
    return std::visit(overloaded{
                          [](const FiniteSupport&) { return true; },
                          [](const FamilyR01&) { return true; },
                          [](const FamilyR04&) { return true; },
                          [](const FamilyR05&) { return true; },
                          [](const ScaledOperator& f) { return f.base->has_finite_support(); },
                          [](const auto&) { return false; },
                      },
                      v_);
}

IndexFn HomogeneousOperator::as_fn() const {
    return [self = *this](Index m) { return self(m); };
}

Scalar family_denominator(const Scalar& a, Index k) { return Scalar(k) * a - Scalar(k - 1); }

Scalar eval_f(const HomogeneousOperator& R, Index m) { return R(m); }

Element apply(const HomogeneousOperator& R, const Element& x) {
    Element out;
    for (const auto& [m, c] : x.terms()) out.add_term(m, R(m) * c);
    return out;
}

// ---------------------------------------------------------------------------

Supporter Supporter::even(Index m0) {
    if (m0 < 1) throw std::invalid_argument("supporter needs m0 >= 1");
    return {m0, std::nullopt};
}

Supporter Supporter::shifted(Index m0, Index s0) {
    if (m0 < 1 || s0 < 1 || s0 >= m0) throw std::invalid_argument("supporter needs 1 <= s0 < m0");
    return {m0, s0};
}

std::optional<Index> Supporter::even_position(Index m) const {
    return exact_div(m - 2 * s0.value_or(0), 2 * m0);
}

std::optional<Index> Supporter::odd_position(Index m) const {
    return exact_div(1 - m - 2 * s0.value_or(0), 2 * m0);
}

bool supporter_contains(const Supporter& s, Index m) {
    return s.even_position(m).has_value() || s.odd_position(m).has_value();
}

std::optional<Supporter> supporter_of(const HomogeneousOperator& R) {
    if (const auto* f = R.get_if<FamilyR02>()) return Supporter::even(f->m0);
    if (const auto* f = R.get_if<FamilyR03>()) return Supporter::shifted(f->m0, f->s0);
    if (const auto* f = R.get_if<ScaledOperator>()) return supporter_of(*f->base);
    return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

Scalar sigma2(const Scalar& x, const Scalar& y, const Scalar& z) { return x * y + x * z + y * z; }

// Checks one triple of the weight-zero identity with coefficients supplied by `f`.
template <class F>
void weight0_tuple(const F& f, Index l, Index m, Index n, Report& r) {
    const Index d = det_D_int(l, m, n);
    if (d == 0) return;
    const Scalar fl = f(l), fm = f(m), fn = f(n);
    const Scalar lhs = fl * fm * fn * Scalar(d);
    const Scalar s = sigma2(fl, fm, fn);
    const Scalar rhs = s.is_zero() ? Scalar() : s * f(output_index(l, m, n)) * Scalar(d);
    r.expect_equal({l, m, n}, lhs, rhs);
}

}  // namespace

Report check_rb_weight0(const HomogeneousOperator& R, Window w, const CheckOptions& opts) {
    std::vector<Scalar> inside;
    inside.reserve(static_cast<std::size_t>(w.size()));
    for (Index m = w.lo; m <= w.hi; ++m) inside.push_back(R(m));

    return run_partitioned(w.lo, w.hi, opts, [&](Index from, Index to, Report& r) {
        std::map<Index, Scalar> outside;
        auto f = [&](Index m) -> Scalar {
            if (w.contains(m)) return inside[static_cast<std::size_t>(m - w.lo)];
            auto it = outside.find(m);
            if (it == outside.end()) it = outside.emplace(m, R(m)).first;
            return it->second;
        };
        for (Index l = from; l <= to; ++l)
            for (Index m = w.lo; m <= w.hi; ++m)
                for (Index n = w.lo; n <= w.hi; ++n) {
                    r.count();
                    weight0_tuple(f, l, m, n, r);
                }
    });
}

Report check_rb_global_finite(const FiniteSupport& R, const CheckOptions& opts) {
    const std::vector<Index> S = R.support();
    std::set<std::tuple<Index, Index, Index>> triples;
    auto add = [&](Index l, Index m, Index n) {
        std::array<Index, 3> t{l, m, n};
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2]) return;
        triples.emplace(t[0], t[1], t[2]);
    };
    for (Index l : S)
        for (Index m : S)
            for (Index n : S) add(l, m, n);
    for (Index p : S)
        for (Index q : S) {
            if (p == q) continue;
            for (Index s : S) add(p, q, 1 + s - p - q);
        }

    Report r = opts.make_report();
    auto f = [&](Index m) { return R.at(m); };
    for (const auto& [l, m, n] : triples) {
        r.count();
        weight0_tuple(f, l, m, n, r);
    }
    return r;
}

// ---------------------------------------------------------------------------

std::optional<FiniteSupport> to_finite_support(const HomogeneousOperator& R) {
    return std::visit(
        overloaded{
            [](const FiniteSupport& f) -> std::optional<FiniteSupport> { return f; },
            [](const FamilyR01& f) -> std::optional<FiniteSupport> {
                return FiniteSupport({{0, Scalar(1)}, {1, f.b}});
            },
            [](const FamilyR04& f) -> std::optional<FiniteSupport> { return FiniteSupport({{f.m1, Scalar(1)}}); },
            [](const FamilyR05& f) -> std::optional<FiniteSupport> {
                return FiniteSupport({{f.m1, Scalar(1)}, {1 - f.m1, f.b}});
            },
            [](const ScaledOperator& f) -> std::optional<FiniteSupport> {
                auto base = to_finite_support(*f.base);
                if (!base) return std::nullopt;
                std::map<Index, Scalar> t;
                for (const auto& [m, v] : base->table) t.emplace(m, f.factor * v);
                return FiniteSupport(std::move(t));
            },
            [](const auto&) -> std::optional<FiniteSupport> { return std::nullopt; },
        },
        R.variant());
}

HomogeneousOperator scale(const HomogeneousOperator& R, const Scalar& c) {
    if (c.is_zero()) throw ZeroScalar();
    if (auto fin = to_finite_support(R)) {
        std::map<Index, Scalar> t;
        for (const auto& [m, v] : fin->table) t.emplace(m, c * v);
        return HomogeneousOperator::finite(std::move(t));
    }
    if (const auto* p = R.get_if<PointwiseOperator>()) {
        return HomogeneousOperator::pointwise("(" + c.str() + ")*" + p->label,
                                              [c, fn = p->fn](Index m) { return c * fn(m); });
    }
    if (const auto* s = R.get_if<ScaledOperator>()) return HomogeneousOperator::scaled(c * s->factor, *s->base);
    return HomogeneousOperator::scaled(c, R);
}

// ---------------------------------------------------------------------------

Scalar InverseCoefficients::operator()(Index m) const {
    const Scalar v = R_(m);
    if (v.is_zero()) throw NotInvertibleOnWindow({m});
    return v.inverse();
}

IndexFn InverseCoefficients::as_fn() const {
    return [self = *this](Index m) { return self(m); };
}

InverseCoefficients inverse_on_window(const HomogeneousOperator& R, Window w) {
    std::vector<Index> zeros;
    for (Index m = w.lo; m <= w.hi; ++m) {
        if (R(m).is_zero()) zeros.push_back(m);
    }
    if (!zeros.empty()) throw NotInvertibleOnWindow(std::move(zeros));
    return InverseCoefficients(R, w);
}

}  // namespace rb3
