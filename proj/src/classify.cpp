#include "rb3/classify.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace rb3 {

namespace {

Index floor_div(Index a, Index b) {
    Index q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Index ceil_div(Index a, Index b) { return -floor_div(-a, b); }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return (b > std::numeric_limits<std::uint64_t>::max() - a) ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::vector<Index> free_indices(const SearchSpec& spec) {
    std::vector<Index> out;
    for (Index m = spec.index_range.lo; m <= spec.index_range.hi; ++m) {
        if (!spec.pinned.contains(m)) out.push_back(m);
    }
    return out;
}

}  // namespace

std::uint64_t candidate_count(const SearchSpec& spec) {
    const auto n = static_cast<std::uint64_t>(free_indices(spec).size());
    const auto v = static_cast<std::uint64_t>(spec.value_set.size());
    std::uint64_t total = 0;
    std::uint64_t choose = 1;  // C(n, s)
    std::uint64_t power = 1;   // v^s
    for (std::uint64_t s = 0; s <= spec.max_support_size && s <= n; ++s) {
        if (s > 0) {
            // C(n, s) = C(n, s-1) * (n - s + 1) / s, exact at every step.
            const std::uint64_t num = sat_mul(choose, n - s + 1);
            choose = (num == std::numeric_limits<std::uint64_t>::max()) ? num : num / s;
            power = sat_mul(power, v);
        }
        total = sat_add(total, sat_mul(choose, power));
    }
    return total;
}

// ---------------------------------------------------------------------------

std::optional<Scalar> PartialAssignment::get(Index m) const {
    if (const auto it = values.find(m); it != values.end()) return it->second;
    if (unassigned.contains(m) || !rest_zero) return std::nullopt;
    return Scalar();
}

namespace {

class Pruner {
public:
    Pruner(const PartialAssignment& f, Window w, const PruneOptions& opts) : f_(f), w_(w), opts_(opts) {}

    PruneReport run() {
        product_rule();
        const auto f0 = f_.get(0);
        const auto f1 = f_.get(1);
        if (f0 && f1) {
            if (!f0->is_zero() && *f1 == -*f0) {
                antisymmetry();
                reciprocal_pair(*f0);
                nonvanishing();
            } else if (!(*f0 + *f1).is_zero()) {
                two_point_support(*f0, *f1);
            } else if (f0->is_zero() && f1->is_zero()) {
                support_closure();
                if (opts_.assume_infinite_support) mirror_support();
            }
        }
        return std::move(report_);
    }

private:
    bool done() const { return opts_.first_only && report_.violated(); }

    void add(std::string rule, std::vector<Index> idx, std::string detail) {
        if (done()) return;
        report_.violations.push_back({std::move(rule), std::move(idx), std::move(detail)});
    }

    // Weight-zero identity on l < m < n in w with all four values known.
    void product_rule() {
        for (Index l = w_.lo; l <= w_.hi && !done(); ++l) {
            const auto fl = f_.get(l);
            if (!fl) continue;
            for (Index m = l + 1; m <= w_.hi && !done(); ++m) {
                const auto fm = f_.get(m);
                if (!fm) continue;
                for (Index n = m + 1; n <= w_.hi && !done(); ++n) {
                    const Index d = det_D_int(l, m, n);
                    if (d == 0) continue;
                    const auto fn = f_.get(n);
                    if (!fn) continue;
                    const Scalar lhs = *fl * *fm * *fn;
                    const Scalar s = *fl * *fm + *fl * *fn + *fm * *fn;
                    if (lhs.is_zero() && s.is_zero()) continue;
                    const auto fo = f_.get(output_index(l, m, n));
                    if (!fo) continue;
                    const Scalar rhs = s * *fo;
                    if (!(lhs == rhs)) add("product-rule", {l, m, n}, lhs.str() + " != " + rhs.str());
                }
            }
        }
    }

    void antisymmetry() {
        for (Index m = w_.lo; m <= w_.hi && !done(); ++m) {
            if (m > 1 - m) continue;
            const auto a = f_.get(m), b = f_.get(1 - m);
            if (a && b && !(*a + *b).is_zero()) {
                add("antisymmetry", {m, 1 - m}, "f(m) + f(1-m) = " + (*a + *b).str());
            }
        }
    }

    // 2 f(e) f(-e) = c (f(e) + f(-e)) for even e != 0, where c = f(0).
    void reciprocal_pair(const Scalar& c) {
        for (Index e = 2 * ceil_div(w_.lo, 2); e <= w_.hi && !done(); e += 2) {
            if (e <= 0) continue;
            const auto a = f_.get(e), b = f_.get(-e);
            if (!a || !b) continue;
            const Scalar lhs = Scalar(2) * *a * *b;
            const Scalar rhs = c * (*a + *b);
            if (!(lhs == rhs)) add("reciprocal-pair", {e, -e}, lhs.str() + " != " + rhs.str());
        }
    }

    bool known_nonzero(Index m) const {
        const auto v = f_.get(m);
        return v && !v->is_zero();
    }
    bool known_zero(Index m) const {
        const auto v = f_.get(m);
        return v && v->is_zero();
    }

    // Parameters x with 2x + r inside the window.
    std::pair<Index, Index> half_range(Index r) const { return {ceil_div(w_.lo - r, 2), floor_div(w_.hi - r, 2)}; }

    template <class Body>
    void four_nonzero(Body body) {
        const auto [elo, ehi] = half_range(0);
        const auto [olo, ohi] = half_range(1);
        for (Index k = elo; k <= ehi && !done(); ++k) {
            if (k == 0 || !known_nonzero(2 * k)) continue;
            for (Index l = elo; l <= ehi && !done(); ++l) {
                if (l == 0 || l == k || !known_nonzero(2 * l)) continue;
                for (Index m = olo; m <= ohi && !done(); ++m) {
                    if (m == 0 || !known_nonzero(2 * m + 1)) continue;
                    for (Index n = olo; n <= ohi && !done(); ++n) {
                        if (n == 0 || n == m || !known_nonzero(2 * n + 1)) continue;
                        body(k, l, m, n);
                    }
                }
            }
        }
    }

    void nonvanishing() {
        four_nonzero([&](Index k, Index l, Index m, Index n) {
            const Index items[11] = {2 * k + 2 * l,     2 * k + 2 * m,         2 * k + 2 * m + 1,     2 * m + 2 * n + 1,
                                     1 - 2 * k + 2 * m, 4 * k,                 2 * m + 2 * n + 2 * k + 1,
                                     2 * m + 2 * k + 2 * l, 2 * k - 2 * m,     1 - 2 * k - 2 * m, 1 - 4 * k};
            for (int i = 0; i < 11; ++i) {
                if ((i == 4 || i == 8) && k == -m) continue;
                if (known_zero(items[i])) {
                    add("nonvanishing", {items[i], k, l, m, n}, "item " + std::to_string(i + 1) + " vanishes");
                }
            }
        });
    }

    // f(0) f(1) f(m) = (f(0) f(1) + f(0) f(m) + f(1) f(m)) f(m), so f(m)^2 (f(0) + f(1)) = 0.
    void two_point_support(const Scalar& f0, const Scalar& f1) {
        for (Index m = w_.lo; m <= w_.hi && !done(); ++m) {
            if (m == 0 || m == 1) continue;
            const auto fm = f_.get(m);
            if (!fm) continue;
            const Scalar lhs = f0 * f1 * *fm;
            const Scalar rhs = (f0 * f1 + f0 * *fm + f1 * *fm) * *fm;
            if (!(lhs == rhs)) add("two-point-support", {m}, "f(" + std::to_string(m) + ") = " + fm->str());
        }
    }

    void support_closure() {
        four_nonzero([&](Index k, Index l, Index m, Index n) {
            const Index zero_items[6][2] = {{1, 2 * k + 2 * l},     {2, 2 * k + 2 * m}, {3, 2 * k + 2 * m + 1},
                                            {4, 2 * m + 2 * n + 1}, {7, 2 * k - 2 * m}, {8, 4 * k}};
            for (const auto& [item, x] : zero_items) {
                if (item == 7 && k == -m) continue;
                if (known_nonzero(x)) add("support-closure", {x, k, l, m, n}, "item " + std::to_string(item) + " nonzero");
            }
            const Index nonzero_items[2][2] = {{5, 2 * m + 2 * n + 2 * k + 1}, {6, 2 * m + 2 * k + 2 * l}};
            for (const auto& [item, x] : nonzero_items) {
                if (known_zero(x)) add("support-closure", {x, k, l, m, n}, "item " + std::to_string(item) + " vanishes");
            }
        });
    }

    void mirror_support() {
        for (Index m = w_.lo; m <= w_.hi && !done(); ++m) {
            if (m > 1 - m) continue;
            const auto a = f_.get(m), b = f_.get(1 - m);
            if (a && b && !(*a + *b).is_zero()) {
                add("mirror-support", {m, 1 - m}, "f(m) + f(1-m) = " + (*a + *b).str());
            }
        }
    }

    const PartialAssignment& f_;
    Window w_;
    PruneOptions opts_;
    PruneReport report_;
};

}  // namespace

PruneReport prune_necessary(const PartialAssignment& f, Window w, const PruneOptions& opts) {
    return Pruner(f, w, opts).run();
}

// ---------------------------------------------------------------------------

namespace {

class Search {
public:
    explicit Search(const SearchSpec& spec) : spec_(spec), free_(free_indices(spec)) {
        for (const auto& [m, v] : spec.pinned) state_.values.emplace(m, Scalar(v));
        state_.unassigned.insert(free_.begin(), free_.end());
    }

    std::vector<FiniteSupport> run() {
        visit(0, 0);
        return std::move(found_);
    }

private:
    void visit(std::size_t pos, std::size_t used) {
        if (spec_.use_pruning &&
            prune_necessary(state_, spec_.index_range, {.assume_infinite_support = false, .first_only = true})
                .violated()) {
            return;
        }
        if (pos == free_.size() || used == spec_.max_support_size) {
            finish();
            return;
        }
        const Index m = free_[pos];
        state_.unassigned.erase(m);
        visit(pos + 1, used);
        for (const Rat& v : spec_.value_set) {
            state_.values[m] = Scalar(v);
            visit(pos + 1, used + 1);
            state_.values.erase(m);
        }
        state_.unassigned.insert(m);
    }

    void finish() {
        std::map<Index, Scalar> table;
        for (const auto& [m, v] : state_.values) {
            if (!v.is_zero()) table.emplace(m, v);
        }
        if (table.empty()) return;
        FiniteSupport candidate(std::move(table));
        if (check_rb_global_finite(candidate, {.max_counterexamples = 1}).passed) found_.push_back(std::move(candidate));
    }

    const SearchSpec& spec_;
    std::vector<Index> free_;
    PartialAssignment state_;
    std::vector<FiniteSupport> found_;
};

}  // namespace

std::vector<FiniteSupport> enumerate_rb_finite(const SearchSpec& spec) {
    for (const Rat& v : spec.value_set) {
        if (v.is_zero()) throw std::invalid_argument("value set must not contain 0");
    }
    const std::uint64_t n = candidate_count(spec);
    if (n > spec.budget) throw SearchSpaceTooLarge(n, spec.budget);
    auto found = Search(spec).run();
    std::ranges::sort(found, [](const FiniteSupport& x, const FiniteSupport& y) {
        if (x.table.size() != y.table.size()) return x.table.size() < y.table.size();
        for (auto i = x.table.begin(), j = y.table.begin(); i != x.table.end(); ++i, ++j) {
            if (i->first != j->first) return i->first < j->first;
        }
        for (auto i = x.table.begin(), j = y.table.begin(); i != x.table.end(); ++i, ++j) {
            if (i->second == j->second) continue;
            if (i->second.is_rational() && j->second.is_rational()) return i->second.rat() < j->second.rat();
            return i->second.str() < j->second.str();
        }
        return false;
    });
    return found;
}

// ---------------------------------------------------------------------------

namespace {

struct Sample {
    std::map<Index, Scalar> nonzero;
    std::set<Index> undefined;
};

Sample sample(const HomogeneousOperator& R, Window w) {
    Sample s;
    for (Index m = w.lo; m <= w.hi; ++m) {
        try {
            Scalar v = R(m);
            if (!v.is_zero()) s.nonzero.emplace(m, std::move(v));
        } catch (const DegenerateParameter&) {
            s.undefined.insert(m);
        }
    }
    return s;
}

// True when scaling * R agrees with `canon` on w, undefined points included.
bool agrees(const HomogeneousOperator& R, const Scalar& scaling, const HomogeneousOperator& canon, Window w) {
    for (Index m = w.lo; m <= w.hi; ++m) {
        std::optional<Scalar> a, b;
        try {
            a = scaling * R(m);
        } catch (const DegenerateParameter&) {
        }
        try {
            b = canon(m);
        } catch (const DegenerateParameter&) {
        }
        if (a.has_value() != b.has_value()) return false;
        if (a && !(*a == *b)) return false;
    }
    return true;
}

FamilyMatch finish_match(FamilyMatch match, const HomogeneousOperator& R, Window w) {
    const auto canon = reconstruct(match);
    if (!canon || !agrees(R, match.scaling, *canon, w)) {
        FamilyMatch none;
        none.note = "candidate " + match.label + " does not reproduce the evidence";
        return none;
    }
    return match;
}

// Fits 1/(scaled f) = k a - (k - 1) along the progression 2 m0 k + 2 s0 / 1 - 2 m0 k - 2 s0.
std::optional<FamilyMatch> fit_progression(const Sample& s, Index m0, Index s0, const std::string& label) {
    const Supporter sup{m0, s0 == 0 ? std::nullopt : std::optional<Index>(s0)};
    std::vector<std::pair<Index, Scalar>> points;  // (k, 1/f) with the branch sign folded in
    for (const auto& [m, v] : s.nonzero) {
        if (const auto k = sup.even_position(m)) {
            points.emplace_back(*k, v.inverse());
        } else if (const auto k = sup.odd_position(m)) {
            points.emplace_back(*k, -v.inverse());
        } else {
            return std::nullopt;
        }
    }
    std::optional<std::pair<Index, Scalar>> first, second;
    for (const auto& p : points) {
        if (!first) {
            first = p;
        } else if (p.first != first->first) {
            second = p;
            break;
        }
    }
    if (!second) return std::nullopt;
    const Scalar slope = (second->second - first->second) / Scalar(second->first - first->first);
    const Scalar intercept = first->second - slope * Scalar(first->first);
    if (intercept.is_zero()) return std::nullopt;

    FamilyMatch match;
    match.label = label;
    match.scaling = intercept;
    match.params["m0"] = Scalar(m0);
    if (s0 != 0) match.params["s0"] = Scalar(s0);
    match.params["a"] = Scalar(1) + slope / intercept;
    return match;
}

Index gcd_of_offsets(const std::vector<Index>& xs) {
    Index g = 0;
    for (Index x : xs) g = std::gcd(g, x - xs.front());
    return g;
}

}  // namespace

FamilyMatch recognize(const HomogeneousOperator& R, Window evidence) {
    const Sample s = sample(R, evidence);
    FamilyMatch none;
    if (s.nonzero.empty() && s.undefined.empty()) {
        none.note = "zero operator";
        return none;
    }

    const auto value = [&](Index m) {
        const auto it = s.nonzero.find(m);
        return it == s.nonzero.end() ? Scalar() : it->second;
    };
    const Scalar f0 = value(0), f1 = value(1);
    std::vector<Index> outer;  // support outside {0, 1}
    for (const auto& [m, v] : s.nonzero) {
        if (m != 0 && m != 1) outer.push_back(m);
    }

    // Support inside {0, 1}.
    if (outer.empty() && s.undefined.empty()) {
        FamilyMatch match;
        if (!f0.is_zero()) {
            match.label = "R01";
            match.scaling = f0.inverse();
            match.params["b"] = f1 / f0;
        } else {
            match.label = "support-in-{0,1}";
            match.scaling = f1.inverse();
            match.note = "only f(1) is nonzero; satisfies the f(0) + f(1) != 0 criterion but is not among R01..R05";
            return match;
        }
        return finish_match(std::move(match), R, evidence);
    }

    if (!f0.is_zero()) {
        if (!(f1 == -f0)) {
            none.note = "f(0) != 0 and f(0) + f(1) != 0 with support outside {0, 1}";
            return none;
        }
        // Even supporter: every support point maps to an even number 2 m0 k.
        std::vector<Index> evens{0};
        for (Index m : outer) evens.push_back(m % 2 == 0 ? m : 1 - m);
        for (Index m : s.undefined) evens.push_back(m % 2 == 0 ? m : 1 - m);
        const Index g = gcd_of_offsets(evens);
        if (g == 0) {
            none.note = "support is {0, 1} plus points that do not fix m0";
            return none;
        }
        auto match = fit_progression(s, g / 2, 0, "R02");
        if (!match) {
            none.note = "not enough evidence to fit the R02 parameter";
            return none;
        }
        return finish_match(std::move(*match), R, evidence);
    }

    if (!f1.is_zero()) {
        none.note = "f(0) = 0 but f(1) != 0 with support outside {0, 1}";
        return none;
    }

    // f(0) = f(1) = 0.
    if (outer.size() == 1 && s.undefined.empty()) {
        FamilyMatch match;
        match.label = "R04";
        match.params["m1"] = Scalar(outer[0]);
        match.scaling = value(outer[0]).inverse();
        return finish_match(std::move(match), R, evidence);
    }
    if (outer.size() == 2 && s.undefined.empty() && outer[0] + outer[1] == 1) {
        const Index m1 = std::max(outer[0], outer[1]);
        FamilyMatch match;
        match.label = "R05";
        match.params["m1"] = Scalar(m1);
        match.params["b"] = value(1 - m1) / value(m1);
        match.scaling = value(m1).inverse();
        return finish_match(std::move(match), R, evidence);
    }

    std::vector<Index> evens;
    for (Index m : outer) evens.push_back(m % 2 == 0 ? m : 1 - m);
    for (Index m : s.undefined) evens.push_back(m % 2 == 0 ? m : 1 - m);
    const Index g = gcd_of_offsets(evens);
    if (g == 0 || g % 2 != 0) {
        none.note = "support is not a shifted supporter";
        return none;
    }
    const Index m0 = g / 2;
    const Index r = ((evens.front() % g) + g) % g;
    const Index s0 = r / 2;
    if (s0 == 0) {
        none.note = "support contains 0 residue but f(0) = 0";
        return none;
    }
    auto match = fit_progression(s, m0, s0, "R03");
    if (!match) {
        none.note = "not enough evidence to fit the R03 parameter";
        return none;
    }
    return finish_match(std::move(*match), R, evidence);
}

std::optional<HomogeneousOperator> reconstruct(const FamilyMatch& match) {
    const auto param = [&](const std::string& k) { return match.params.at(k); };
    const auto index = [&](const std::string& k) -> Index {
        const Scalar& v = match.params.at(k);
        if (!v.is_rational() || !v.rat().is_integer()) throw std::invalid_argument(k + " must be an integer");
        return v.rat().num().get_si();
    };
    if (match.label == "R01") return HomogeneousOperator::r01(param("b"));
    if (match.label == "R02") return HomogeneousOperator::r02(index("m0"), param("a"));
    if (match.label == "R03") return HomogeneousOperator::r03(index("m0"), index("s0"), param("a"));
    if (match.label == "R04") return HomogeneousOperator::r04(index("m1"));
    if (match.label == "R05") return HomogeneousOperator::r05(index("m1"), param("b"));
    if (match.label == "support-in-{0,1}") return HomogeneousOperator::finite({{1, Scalar(1)}});
    return std::nullopt;
}

}  // namespace rb3
