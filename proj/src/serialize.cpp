#include "rb3/serialize.hpp"

#include <charconv>

namespace rb3 {

Json report_to_json(const Report& r) {
    Json ces = Json::array();
    for (const auto& c : r.counterexamples) {
        ces.push_back({{"tuple", c.tuple}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}});
    }
    return {{"passed", r.passed},
            {"tuples_checked", r.tuples_checked},
            {"violations", r.violations},
            {"counterexamples", std::move(ces)}};
}

Json suite_to_json(const SuiteReport& s) {
    Json parts = Json::object();
    for (const auto& [name, r] : s.parts) parts[name] = report_to_json(r);
    return {{"passed", s.passed()}, {"tuples_checked", s.tuples_checked()}, {"parts", std::move(parts)}};
}

namespace {

Scalar scalar_field(const Json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("operator spec is missing \"") + key + "\"");
    const Json& v = j.at(key);
    if (v.is_number_integer()) return Scalar(v.get<std::int64_t>());
    if (v.is_string()) {
        const auto text = v.get<std::string>();
        if (text == "sym") return Scalar::symbol();
        return Scalar(Rat::parse(text));
    }
    throw ParseError(std::string("\"") + key + "\" must be an integer or a \"p/q\" string");
}

Index parse_index(std::string_view text) {
    Index v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("bad integer '" + std::string(text) + "'");
    }
    return v;
}

Index index_field(const Json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("operator spec is missing \"") + key + "\"");
    const Json& v = j.at(key);
    if (v.is_number_integer()) return v.get<Index>();
    if (v.is_string()) return parse_index(v.get<std::string>());
    throw ParseError(std::string("\"") + key + "\" must be an integer");
}

}  // namespace

HomogeneousOperator operator_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("operator spec must be a JSON object");
    if (j.contains("support")) {
        const Json& s = j.at("support");
        if (!s.is_object()) throw ParseError("\"support\" must map indices to values");
        std::map<Index, Scalar> table;
        for (const auto& [k, v] : s.items()) {
            Json wrap = {{"v", v}};
            const Scalar value = scalar_field(wrap, "v");
            if (value.is_symbolic()) throw ParseError("support values must be rational");
            table[parse_index(k)] = value;
        }
        return HomogeneousOperator::finite(std::move(table));
    }
    if (!j.contains("family") || !j.at("family").is_string()) throw ParseError("operator spec needs \"family\" or \"support\"");
    const auto family = j.at("family").get<std::string>();
    try {
        auto rational = [&](const char* key) {
            Scalar v = scalar_field(j, key);
            if (v.is_symbolic()) throw ParseError(std::string("\"") + key + "\" cannot be symbolic for " + family);
            return v;
        };
        if (family == "r01") return HomogeneousOperator::r01(rational("b"));
        if (family == "r02") return HomogeneousOperator::r02(index_field(j, "m0"), scalar_field(j, "a"));
        if (family == "r03") {
            return HomogeneousOperator::r03(index_field(j, "m0"), index_field(j, "s0"), scalar_field(j, "a"));
        }
        if (family == "r04") return HomogeneousOperator::r04(index_field(j, "m1"));
        if (family == "r05") return HomogeneousOperator::r05(index_field(j, "m1"), rational("b"));
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown family '" + family + "'");
}

Json support_to_json(const FiniteSupport& f) {
    Json out = Json::object();
    for (const auto& [m, v] : f.table) out[std::to_string(m)] = v.str();
    return out;
}

Json operator_to_json(const HomogeneousOperator& R) {
    if (const auto* f = R.get_if<FiniteSupport>()) return {{"support", support_to_json(*f)}};
    auto sym = [](const Scalar& a) { return (a == Scalar::symbol()) ? std::string("sym") : a.str(); };
    if (const auto* f = R.get_if<FamilyR01>()) return {{"family", "r01"}, {"b", f->b.str()}};
    if (const auto* f = R.get_if<FamilyR02>()) return {{"family", "r02"}, {"m0", f->m0}, {"a", sym(f->a)}};
    if (const auto* f = R.get_if<FamilyR03>()) {
        return {{"family", "r03"}, {"m0", f->m0}, {"s0", f->s0}, {"a", sym(f->a)}};
    }
    if (const auto* f = R.get_if<FamilyR04>()) return {{"family", "r04"}, {"m1", f->m1}};
    if (const auto* f = R.get_if<FamilyR05>()) return {{"family", "r05"}, {"m1", f->m1}, {"b", f->b.str()}};
    return {{"label", R.label()}};
}

Json match_to_json(const FamilyMatch& m) {
    Json params = Json::object();
    for (const auto& [k, v] : m.params) params[k] = v.str();
    Json out = {{"label", m.label}, {"params", std::move(params)}, {"scaling", m.scaling.str()}};
    if (!m.note.empty()) out["note"] = m.note;
    return out;
}

Json prune_to_json(const PruneReport& p) {
    Json vs = Json::array();
    for (const auto& v : p.violations) vs.push_back({{"rule", v.rule}, {"indices", v.indices}, {"detail", v.detail}});
    return {{"violated", p.violated()}, {"violations", std::move(vs)}};
}

}  // namespace rb3
