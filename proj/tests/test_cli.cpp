#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = rb3::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify exit codes") {
    const Result ok = run({"verify", "--family", "r02", "--m0", "1", "--a", "3", "--window", "-10..10", "--checks",
                           "rb,derivation-of-inverse"});
    CHECK(ok.code == rb3::cli::kPass);
    const auto doc = ok.json();
    CHECK(doc.at("passed") == true);
    CHECK(doc.at("checks").at("rb").at("passed") == true);
    CHECK(doc.at("checks").at("derivation-of-inverse").at("passed") == true);

    const Result bad = run({"verify", "--support", "3=1,4=1", "--global"});
    CHECK(bad.code == rb3::cli::kCheckFailed);
    const auto bad_doc = bad.json();
    const auto& rep = bad_doc.at("checks").at("rb-global");
    CHECK(rep.at("passed") == false);
    REQUIRE_FALSE(rep.at("counterexamples").empty());
    CHECK(rep.at("counterexamples")[0].at("tuple").size() == 3);
    CHECK(rep.at("counterexamples")[0].contains("lhs"));
    CHECK(rep.at("counterexamples")[0].contains("rhs"));

    CHECK(run({"verify", "--family", "r03", "--m0", "4", "--s0", "3", "--a", "3/5", "--window", "-8..8"}).code ==
          rb3::cli::kPass);
    CHECK(run({"verify", "--family", "r03", "--m0", "7", "--s0", "2", "--a", "2", "--window", "-16..16"}).code ==
          rb3::cli::kDegenerate);
}

TEST_CASE("configuration errors") {
    CHECK(run({"verify", "--family", "r09"}).code == rb3::cli::kConfigError);
    CHECK(run({"verify", "--family", "r02", "--m0", "1", "--a", "0.5"}).code == rb3::cli::kConfigError);
    CHECK(run({"verify", "--family", "r04", "--m1", "3", "--a", "sym"}).code == rb3::cli::kConfigError);
    CHECK(run({"verify", "--family", "r02", "--m0", "1", "--a", "3", "--window", "3..1"}).code == rb3::cli::kConfigError);
    CHECK(run({"verify", "--family", "r02", "--m0", "1", "--a", "3", "--checks", "bogus"}).code ==
          rb3::cli::kConfigError);
    CHECK(run({"verify", "--family", "r02", "--m0", "1", "--a", "3", "--global"}).code == rb3::cli::kConfigError);
    CHECK(run({"classify", "finite"}).code == rb3::cli::kConfigError);
    CHECK(run({"classify", "finite", "--range", "-3..4", "--max-size", "2", "--values", "1,0"}).code ==
          rb3::cli::kConfigError);
    CHECK(run({}).code == rb3::cli::kConfigError);
    CHECK(run({"nonsense"}).code == rb3::cli::kConfigError);
}

TEST_CASE("operator as JSON") {
    const Result r = run({"verify", "--operator", R"({"family":"r03","m0":7,"s0":2,"a":"2"})", "--window", "-5..5"});
    CHECK(r.code == rb3::cli::kPass);
    CHECK(run({"verify", "--operator", R"({"support":{"3":"1","-2":"1/2"}})", "--global"}).code == rb3::cli::kPass);
    CHECK(run({"verify", "--operator", R"({"family":"r02","m0":1,"a":1.5})"}).code == rb3::cli::kConfigError);
}

TEST_CASE("classify finite") {
    const Result pairs =
        run({"classify", "finite", "--range", "-3..4", "--max-size", "2", "--pin", "0=0,1=0", "--values", "1,-1"});
    CHECK(pairs.code == rb3::cli::kPass);
    int two = 0;
    for (const auto& sol : pairs.json()) {
        const auto& sup = sol.at("support");
        if (sup.size() != 2) continue;
        ++two;
        long sum = 0;
        for (const auto& [k, v] : sup.items()) sum += std::stol(k);
        CHECK(sum == 1);
        CHECK(sol.at("match").at("label") == "R05");
    }
    CHECK(two == 12);

    const Result anti = run({"classify", "finite", "--range", "-2..3", "--max-size", "1", "--pin", "0=1,1=-1", "--values", "1"});
    CHECK(anti.code == rb3::cli::kPass);
    REQUIRE(anti.json().size() == 1);
    CHECK(anti.json()[0].at("support").size() == 2);

    const Result pinned = run({"classify", "finite", "--range", "-1..2", "--max-size", "0", "--pin", "0=1,1=7"});
    REQUIRE(pinned.json().size() == 1);
    CHECK(pinned.json()[0].at("match").at("label") == "R01");
    CHECK(pinned.json()[0].at("match").at("params").at("b") == "7");

    CHECK(run({"classify", "finite", "--range", "-30..30", "--max-size", "4", "--values", "1,2,3", "--budget", "1000"})
              .code == rb3::cli::kConfigError);
}

TEST_CASE("classify recognize") {
    const Result r = run({"classify", "recognize", "--family", "r03", "--m0", "7", "--s0", "2", "--a", "2", "--window", "-40..40"});
    CHECK(r.code == rb3::cli::kPass);
    const auto doc = r.json();
    CHECK(doc.at("label") == "R03");
    CHECK(doc.at("params").at("m0") == "7");
    CHECK(doc.at("params").at("s0") == "2");
    CHECK(doc.at("params").at("a") == "2");
}

TEST_CASE("induce") {
    const Result abelian = run({"induce", "--family", "r04", "--m1", "3", "--window", "-5..5"});
    CHECK(abelian.code == rb3::cli::kPass);
    CHECK(abelian.json().at("triples").empty());
    CHECK(abelian.json().at("verified").at("fundamental") == true);
    CHECK(abelian.json().at("verified").at("rota_baxter") == true);

    const Result r5 = run({"induce", "--family", "r05", "--m1", "2", "--b", "1", "--window", "-5..5", "--crosscheck"});
    CHECK(r5.code == rb3::cli::kPass);
    for (const auto& t : r5.json().at("triples")) {
        CHECK(t.at("out_index") == t.at("l").get<long>() + t.at("m").get<long>() + t.at("n").get<long>() - 1);
    }
    CHECK(r5.json().at("crosscheck").at("passed") == true);

    const Result sym = run({"induce", "--family", "r02", "--m0", "1", "--a", "sym", "--window", "-4..4"});
    const Result rat = run({"induce", "--family", "r02", "--m0", "1", "--a", "3", "--window", "-4..4"});
    CHECK(sym.code == rb3::cli::kPass);
    const auto st = sym.json().at("triples");
    const auto rt = rat.json().at("triples");
    CHECK(st.size() == rt.size());
    bool any_symbolic = false;
    for (const auto& t : st) any_symbolic |= t.at("coeff").get<std::string>().find('a') != std::string::npos;
    CHECK(any_symbolic);
}

TEST_CASE("identical configurations give identical bytes") {
    const std::vector<std::string> args{"induce", "--family", "r02", "--m0", "2", "--a", "3", "--window", "-6..6"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> c{"classify", "finite", "--range", "-3..4", "--max-size", "2", "--pin", "0=0,1=0",
                                     "--values", "1,-1,1/2"};
    CHECK(run(c).out == run(c).out);
    std::vector<std::string> w = {"--workers", "3"};
    w.insert(w.end(), c.begin(), c.end());
    CHECK(run(w).out == run(c).out);
}

TEST_CASE("text format and report round trip") {
    const Result t = run({"--format", "text", "verify", "--family", "r01", "--b", "7", "--window", "-4..4"});
    CHECK(t.code == rb3::cli::kPass);
    CHECK(t.out.find("rb") != std::string::npos);

    const auto path = std::filesystem::temp_directory_path() / "rb3_cli_report.json";
    const Result w = run({"--output", path.string(), "verify", "--support", "3=1,4=1", "--global"});
    CHECK(w.code == rb3::cli::kCheckFailed);
    REQUIRE(std::filesystem::exists(path));
    const Result back = run({"report", "--input", path.string()});
    CHECK(back.code == rb3::cli::kCheckFailed);
    CHECK(back.json().at("passed") == false);
    std::filesystem::remove(path);
    CHECK(run({"report", "--input", "/nonexistent/file.json"}).code == rb3::cli::kConfigError);
}

TEST_CASE("counterexample cap flag") {
    const Result r = run({"--max-counterexamples", "1", "verify", "--support", "3=1,4=1", "--window", "-6..8"});
    CHECK(r.code == rb3::cli::kCheckFailed);
    CHECK(r.json().at("checks").at("rb").at("counterexamples").size() == 1);
}

}  // TEST_SUITE
