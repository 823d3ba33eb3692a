#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rb3/classify.hpp"
#include "rb3/induced.hpp"
#include "rb3/operators.hpp"
#include "rb3/serialize.hpp"

namespace rb3::cli {

namespace {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GlobalFlags {
    std::string format = "json";
    std::size_t max_counterexamples = kDefaultCounterexampleCap;
    unsigned workers = 1;
    std::string output;
};

struct OperatorFlags {
    std::string family, b, a, support, json;
    std::optional<Index> m0, s0, m1;

    bool given() const { return !family.empty() || !support.empty() || !json.empty(); }
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) {
        cur.erase(0, cur.find_first_not_of(" \t"));
        cur.erase(cur.find_last_not_of(" \t") + 1);
        if (!cur.empty()) parts.push_back(cur);
    }
    return parts;
}

// "3=1,4=-1/2" -> {3: 1, 4: -1/2}
std::map<Index, Rat> parse_assignments(const std::string& text) {
    std::map<Index, Rat> out;
    for (const auto& item : split(text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("expected INDEX=VALUE, got '" + item + "'");
        Index m = 0;
        const std::string key = item.substr(0, eq);
        const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), m);
        if (key.empty() || ec != std::errc() || ptr != key.data() + key.size()) {
            throw ParseError("bad index '" + key + "'");
        }
        out[m] = Rat::parse(item.substr(eq + 1));
    }
    return out;
}

HomogeneousOperator build_operator(const OperatorFlags& f) {
    const int sources = int(!f.family.empty()) + int(!f.support.empty()) + int(!f.json.empty());
    if (sources == 0) throw ConfigError("an operator is required: --family, --support or --operator");
    if (sources > 1) throw ConfigError("give exactly one of --family, --support, --operator");

    Json spec;
    if (!f.json.empty()) {
        try {
            spec = Json::parse(f.json);
        } catch (const Json::parse_error& e) {
            throw ConfigError(std::string("--operator is not valid JSON: ") + e.what());
        }
    } else if (!f.support.empty()) {
        Json table = Json::object();
        for (const auto& [m, v] : parse_assignments(f.support)) table[std::to_string(m)] = v.str();
        spec = {{"support", table}};
    } else {
        std::string family = f.family;
        std::transform(family.begin(), family.end(), family.begin(), [](unsigned char c) { return std::tolower(c); });
        spec = {{"family", family}};
        if (!f.a.empty()) {
            if (family != "r02" && family != "r03") throw ConfigError("--a applies only to r02 and r03");
            spec["a"] = f.a;
        }
        if (!f.b.empty()) spec["b"] = f.b;
        if (f.m0) spec["m0"] = *f.m0;
        if (f.s0) spec["s0"] = *f.s0;
        if (f.m1) spec["m1"] = *f.m1;
    }
    return operator_from_json(spec);
}

void add_operator_flags(CLI::App* cmd, OperatorFlags& f) {
    cmd->add_option("--family", f.family, "r01 | r02 | r03 | r04 | r05");
    cmd->add_option("--b", f.b, "family parameter b (p/q)");
    cmd->add_option("--a", f.a, "family parameter a (p/q, or sym)");
    cmd->add_option("--m0", f.m0, "supporter period");
    cmd->add_option("--s0", f.s0, "supporter shift");
    cmd->add_option("--m1", f.m1, "support point");
    cmd->add_option("--support", f.support, "finite table, e.g. \"3=1,-2=1/2\"");
    cmd->add_option("--operator", f.json, "operator spec as JSON");
}

// ---------------------------------------------------------------------------
// Text rendering

void render_report(std::ostream& os, const std::string& name, const Json& r, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    os << pad << name << ": " << (r.at("passed").get<bool>() ? "PASS" : "FAIL") << " ("
       << r.at("tuples_checked").get<std::uint64_t>() << " tuples";
    if (r.contains("violations")) os << ", " << r.at("violations").get<std::uint64_t>() << " violations";
    os << ")\n";
    if (r.contains("parts")) {
        for (const auto& [k, v] : r.at("parts").items()) render_report(os, k, v, indent + 2);
    }
    if (r.contains("counterexamples")) {
        for (const auto& c : r.at("counterexamples")) {
            os << pad << "  at " << c.at("tuple").dump() << ": " << c.at("lhs").get<std::string>()
               << " != " << c.at("rhs").get<std::string>() << "\n";
        }
    }
}

void render_match(std::ostream& os, const Json& m) {
    os << m.at("label").get<std::string>();
    for (const auto& [k, v] : m.at("params").items()) os << " " << k << "=" << v.get<std::string>();
    os << " (scaling " << m.at("scaling").get<std::string>() << ")";
    if (m.contains("note")) os << " [" << m.at("note").get<std::string>() << "]";
}

void render_text(std::ostream& os, const Json& doc) {
    if (doc.is_array()) {
        os << doc.size() << " solution(s)\n";
        for (const auto& s : doc) {
            os << "  " << s.at("support").dump() << " -> ";
            render_match(os, s.at("match"));
            os << "\n";
        }
        return;
    }
    if (doc.contains("triples")) {
        os << doc.at("triples").size() << " nonzero triple(s)\n";
        for (const auto& t : doc.at("triples")) {
            os << "  [L_" << t.at("l") << ", L_" << t.at("m") << ", L_" << t.at("n") << "] = "
               << t.at("coeff").get<std::string>() << " L_" << t.at("out_index") << "\n";
        }
        os << "fundamental identity: " << (doc.at("verified").at("fundamental").get<bool>() ? "PASS" : "FAIL") << "\n";
        os << "rota-baxter: " << (doc.at("verified").at("rota_baxter").get<bool>() ? "PASS" : "FAIL") << "\n";
        if (doc.contains("crosscheck")) render_report(os, "closed forms", doc.at("crosscheck"), 0);
        return;
    }
    if (doc.contains("checks")) {
        if (doc.contains("operator")) os << "operator: " << doc.at("operator").dump() << "\n";
        if (doc.contains("window")) os << "window: " << doc.at("window").get<std::string>() << "\n";
        for (const auto& [k, v] : doc.at("checks").items()) render_report(os, k, v, 0);
        if (doc.contains("error")) os << "error: " << doc.at("error").get<std::string>() << "\n";
        os << (doc.at("passed").get<bool>() ? "PASS" : "FAIL") << "\n";
        return;
    }
    if (doc.contains("label")) {
        render_match(os, doc);
        os << "\n";
        return;
    }
    if (doc.contains("passed")) {
        render_report(os, "report", doc, 0);
        return;
    }
    os << doc.dump(2) << "\n";
}

// ---------------------------------------------------------------------------

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(const std::vector<std::string>& args);

private:
    CheckOptions check_options() const {
        CheckOptions o;
        o.max_counterexamples = g_.max_counterexamples == 0 ? std::nullopt
                                                            : std::optional<std::size_t>(g_.max_counterexamples);
        o.workers = std::max(1U, g_.workers);
        return o;
    }

    void emit(const Json& doc) {
        std::ostringstream buf;
        if (g_.format == "text") {
            render_text(buf, doc);
        } else {
            buf << doc.dump(2) << "\n";
        }
        if (g_.output.empty()) {
            out_ << buf.str();
        } else {
            std::ofstream file(g_.output);
            if (!file) throw ConfigError("cannot write " + g_.output);
            file << buf.str();
        }
    }

    int cmd_verify();
    int cmd_classify_finite();
    int cmd_classify_recognize();
    int cmd_induce();
    int cmd_report();

    std::ostream& out_;
    std::ostream& err_;
    GlobalFlags g_;

    OperatorFlags op_;
    std::string window_ = "-6..6";
    std::string checks_ = "rb";
    std::string lambda_ = "0";
    bool global_ = false;
    bool strict_ = false;

    std::string range_;
    std::size_t max_size_ = 1;
    std::string values_;
    std::string pins_;
    std::uint64_t budget_ = kDefaultSearchBudget;
    bool no_prune_ = false;

    bool crosscheck_ = false;
    std::string input_;
};

int Runner::cmd_verify() {
    std::vector<std::string> checks = split(checks_, ',');
    if (global_) std::replace(checks.begin(), checks.end(), std::string("rb"), std::string("rb-global"));
    if (checks.empty()) throw ConfigError("no checks requested");

    const Window w = Window::parse(window_);
    const Scalar lambda = Scalar::parse(lambda_);
    const CheckOptions opts = [&] {
        CheckOptions o = check_options();
        o.strict = strict_;
        return o;
    }();

    const bool needs_operator =
        std::any_of(checks.begin(), checks.end(), [](const std::string& c) { return c != "fundamental"; });
    std::optional<HomogeneousOperator> R;
    if (needs_operator || op_.given()) R = build_operator(op_);

    Json doc;
    if (R) doc["operator"] = operator_to_json(*R);
    doc["window"] = w.str();
    Json results = Json::object();
    bool passed = true;
    auto record = [&](const std::string& name, Json j) {
        passed = passed && j.at("passed").get<bool>();
        results[name] = std::move(j);
    };

    for (const auto& c : checks) {
        if (c == "rb") {
            record(c, report_to_json(check_rb_weight0(*R, w, opts)));
        } else if (c == "rb-global") {
            const auto fin = to_finite_support(*R);
            if (!fin) throw ConfigError("rb-global needs a finitely supported operator");
            record(c, report_to_json(check_rb_global_finite(*fin, opts)));
        } else if (c == "rota-baxter") {
            record(c, report_to_json(check_rota_baxter(R->as_fn(), GradedCoeff::structure(), lambda, w, opts)));
        } else if (c == "derivation-of-inverse") {
            try {
                const InverseCoefficients inv = inverse_on_window(*R, w);
                record(c, report_to_json(check_derivation(inv.as_fn(), GradedCoeff::structure(), lambda, w, opts)));
            } catch (const NotInvertibleOnWindow& e) {
                Json j = report_to_json(Report());
                j["passed"] = false;
                j["not_invertible_at"] = e.zeros();
                record(c, std::move(j));
            }
        } else if (c == "fundamental") {
            record(c, report_to_json(check_fundamental_identity(GradedCoeff::structure(), w, opts)));
        } else if (c == "identities") {
            if (!R->get_if<FamilyR02>() && !R->get_if<FamilyR03>()) {
                throw ConfigError("identities apply to r02 and r03 only");
            }
            record(c, suite_to_json(identity_suite(*R, w, opts)));
        } else {
            throw ConfigError("unknown check '" + c + "'");
        }
    }
    doc["checks"] = std::move(results);
    doc["passed"] = passed;
    emit(doc);
    return passed ? kPass : kCheckFailed;
}

int Runner::cmd_classify_finite() {
    SearchSpec spec;
    spec.index_range = Window::parse(range_);
    spec.max_support_size = max_size_;
    for (const auto& v : split(values_, ',')) spec.value_set.push_back(Rat::parse(v));
    if (spec.max_support_size > 0 && spec.value_set.empty()) throw ConfigError("--values is required when --max-size > 0");
    spec.pinned = parse_assignments(pins_);
    spec.budget = budget_;
    spec.use_pruning = !no_prune_;

    Json doc = Json::array();
    for (const auto& s : enumerate_rb_finite(spec)) {
        Index lo = 0, hi = 1;
        for (const auto& [m, v] : s.table) {
            lo = std::min({lo, m, 1 - m});
            hi = std::max({hi, m, 1 - m});
        }
        const FamilyMatch match = recognize(HomogeneousOperator(s), Window(lo - 1, hi + 1));
        doc.push_back({{"support", support_to_json(s)}, {"match", match_to_json(match)}});
    }
    emit(doc);
    return kPass;
}

int Runner::cmd_classify_recognize() {
    const HomogeneousOperator R = build_operator(op_);
    emit(match_to_json(recognize(R, Window::parse(window_))));
    return kPass;
}

int Runner::cmd_induce() {
    const HomogeneousOperator R = build_operator(op_);
    const Window w = Window::parse(window_);
    const Scalar lambda = Scalar::parse(lambda_);
    const CheckOptions opts = check_options();

    const InducedAlgebra A = build_table(R, lambda, w);
    Json triples = Json::array();
    for (const auto& [t, v] : A.table()) {
        const auto [l, m, n] = t;
        triples.push_back({{"l", l}, {"m", m}, {"n", n}, {"coeff", v.str()}, {"out_index", output_index(l, m, n)}});
    }
    const InducedVerification ver = verify_induced(R, lambda, w, opts);
    Json doc = {{"operator", operator_to_json(R)},
                {"window", w.str()},
                {"lambda", lambda.str()},
                {"triples", std::move(triples)},
                {"verified", {{"fundamental", ver.fundamental.passed}, {"rota_baxter", ver.rota_baxter.passed}}}};
    bool passed = ver.passed();
    if (crosscheck_) {
        const SuiteReport cc = crosscheck_closed_forms(R, w, opts);
        doc["crosscheck"] = suite_to_json(cc);
        passed = passed && cc.passed();
    }
    emit(doc);
    return passed ? kPass : kCheckFailed;
}

int Runner::cmd_report() {
    Json doc;
    try {
        if (input_.empty() || input_ == "-") {
            throw ConfigError("report needs --input FILE");
        }
        std::ifstream in(input_);
        if (!in) throw ConfigError("cannot read " + input_);
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ConfigError(std::string("input is not valid JSON: ") + e.what());
    }
    emit(doc);
    if (doc.is_object() && doc.contains("passed")) return doc.at("passed").get<bool>() ? kPass : kCheckFailed;
    return kPass;
}

int Runner::run(const std::vector<std::string>& args) {
    CLI::App app{"Exact verification of homogeneous Rota-Baxter operators on the 3-Lie algebra A_omega", "rb3"};
    app.require_subcommand(1);
    app.add_option("--format", g_.format, "json | text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-counterexamples", g_.max_counterexamples, "counterexamples kept per report (0: all)");
    app.add_option("--workers", g_.workers, "worker threads for the checkers");
    app.add_option("--output", g_.output, "write the result to this file");
    app.fallthrough();

    auto* verify = app.add_subcommand("verify", "run identity checks on an operator");
    add_operator_flags(verify, op_);
    verify->add_option("--window", window_, "index window LO..HI");
    verify->add_option("--checks", checks_, "rb,rb-global,rota-baxter,derivation-of-inverse,fundamental,identities");
    verify->add_option("--lambda", lambda_, "weight for rota-baxter and derivation-of-inverse");
    verify->add_flag("--global", global_, "decide the weight-zero identity on all of Z (finite support)");
    verify->add_flag("--strict", strict_, "fundamental identity over every 5-tuple");

    auto* classify = app.add_subcommand("classify", "search and recognition");
    classify->require_subcommand(1);
    auto* finite = classify->add_subcommand("finite", "enumerate finitely supported operators");
    finite->add_option("--range", range_, "index range LO..HI")->required();
    finite->add_option("--max-size", max_size_, "nonzero values beyond the pinned ones");
    finite->add_option("--values", values_, "candidate values, e.g. \"1,-1,1/2\"");
    finite->add_option("--pin", pins_, "fixed values, e.g. \"0=1,1=-1\"");
    finite->add_option("--budget", budget_, "maximum number of candidates");
    finite->add_flag("--no-prune", no_prune_, "disable necessary-condition pruning");
    auto* recog = classify->add_subcommand("recognize", "identify the family of an operator");
    add_operator_flags(recog, op_);
    recog->add_option("--window", window_, "evidence window LO..HI");

    auto* induce = app.add_subcommand("induce", "induced bracket of an operator");
    add_operator_flags(induce, op_);
    induce->add_option("--window", window_, "index window LO..HI");
    induce->add_option("--lambda", lambda_, "weight");
    induce->add_flag("--crosscheck", crosscheck_, "compare with the closed-form structure constants");

    auto* report = app.add_subcommand("report", "render a saved JSON result");
    report->add_option("--input", input_, "JSON file written by another subcommand")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out_ << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out_ << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err_ << "error: " << e.what() << "\n";
        return kConfigError;
    }

    try {
        if (verify->parsed()) return cmd_verify();
        if (finite->parsed()) return cmd_classify_finite();
        if (recog->parsed()) return cmd_classify_recognize();
        if (induce->parsed()) return cmd_induce();
        if (report->parsed()) return cmd_report();
    } catch (const DegenerateParameter& e) {
        err_ << "error: " << e.what() << "\n";
        return kDegenerate;
    } catch (const SearchSpaceTooLarge& e) {
        err_ << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const ConfigError& e) {
        err_ << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        err_ << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::domain_error& e) {
        err_ << "error: " << e.what() << "\n";
        return kConfigError;
    }
    err_ << "error: no subcommand\n";
    return kConfigError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return Runner(out, err).run(args);
}

}  // namespace rb3::cli
