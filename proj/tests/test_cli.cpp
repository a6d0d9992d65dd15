#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qrefl/cli.hpp"
#include "qrefl/characters.hpp"

using namespace qrefl;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qrefl");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(QREFL_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::vector<std::string> kFixtures{"grassmann_n2.json", "grassmann_n4.json", "identity_n2.json", "identity_n3.json",
                                         "perturbed_n2.json"};

}  // namespace

TEST_CASE("verify-re exit codes") {
    Result ok = run_cli({"verify-re", fixture("grassmann_n4.json")});
    CHECK(ok.code == cli::kPass);
    auto report = nlohmann::json::parse(ok.out);
    CHECK(report["command"] == "verify-re");
    CHECK(report["passed"] == true);

    Result bad = run_cli({"verify-re", fixture("perturbed_n2.json")});
    CHECK(bad.code == cli::kCheckFailed);
    auto failed = nlohmann::json::parse(bad.out);
    auto witness = failed["checks"][0]["witness"];
    CHECK(witness["row"].size() == 2);
    CHECK(witness["residual"] != "0");

    CHECK(run_cli({"verify-re", fixture("malformed.json")}).code == cli::kUsage);
    CHECK(run_cli({"verify-re", fixture("does_not_exist.json")}).code == cli::kUsage);
    CHECK(run_cli({"verify-re", fixture("identity_n3.json")}).code == cli::kPass);
    CHECK(run_cli({"verify-re", fixture("grassmann_n2.json"), "--variant", "rbar21"}).code == cli::kCheckFailed);
}

TEST_CASE("outputs are byte-deterministic") {
    const std::vector<std::vector<std::string>> commands{
        {"verify-re", fixture("perturbed_n2.json")},
        {"qdet", fixture("grassmann_n2.json"), "--oracle"},
        {"central", fixture("grassmann_n2.json")},
        {"grassmann", "--m", "2"},
        {"qybe", "--n", "2"},
    };
    for (const auto& c : commands) {
        Result a = run_cli(c), b = run_cli(c);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}

TEST_CASE("fixture round-trip") {
    for (const auto& name : kFixtures) {
        CAPTURE(name);
        const std::string text = slurp(fixture(name));
        cli::MatrixDocument doc = cli::load_document(text);
        // every entry prints back to the text it was read from
        auto raw = nlohmann::json::parse(text);
        for (int i = 0; i < doc.matrix.n(); ++i)
            for (int j = 0; j < doc.matrix.n(); ++j)
                CHECK(print_scalar(doc.matrix(i, j)) == raw["entries"][i][j].get<std::string>());
        std::string emitted = cli::emit_document(doc);
        cli::MatrixDocument again = cli::load_document(emitted);
        CHECK(again.matrix.entries == doc.matrix.entries);
        CHECK(again.root_order == doc.root_order);
        CHECK(cli::emit_document(again) == emitted);
    }
    // files written by the tool are already canonical
    for (const auto& name : {"grassmann_n2.json", "grassmann_n4.json"}) {
        const std::string text = slurp(fixture(name));
        CHECK(cli::emit_document(cli::load_document(text)) == text);
    }
}

TEST_CASE("document validation") {
    CHECK_THROWS_AS(cli::load_document("{\"n\": 2, \"entries\": [[\"1\"]]}"), cli::UsageError);
    CHECK_THROWS_AS(cli::load_document("{\"n\": 1, \"entries\": [[\"q +\"]]}"), cli::UsageError);
    CHECK_THROWS_AS(cli::load_document("{\"n\": 1, \"entries\": [[1]]}"), cli::UsageError);
    CHECK_THROWS_AS(cli::load_document("{\"n\": 1, \"variant\": \"x\", \"entries\": [[\"1\"]]}"), cli::UsageError);
    cli::MatrixDocument d = cli::load_document("{\"n\": 1, \"entries\": [[\"q\"]]}");
    CHECK(d.root_order == 1);
    CHECK(d.matrix.variant == Variant::r);
}

TEST_CASE("grassmann subcommand") {
    Result m1 = run_cli({"grassmann", "--m", "1"});
    CHECK(m1.code == cli::kPass);
    CHECK(m1.out == slurp(fixture("grassmann_n2.json")));
    CHECK(nlohmann::json::parse(m1.err)["passed"] == true);

    Result zero = run_cli({"grassmann", "--m", "2", "--s", "0"});
    CHECK(zero.code == cli::kPass);
    cli::MatrixDocument doc = cli::load_document(zero.out);
    CHECK(doc.matrix.entries == grassmann_matrix(4, Scalar(0)).entries);

    auto path = std::filesystem::temp_directory_path() / "qrefl_test_emit.json";
    Result emitted = run_cli({"grassmann", "--m", "2", "--emit", path.string()});
    CHECK(emitted.code == cli::kPass);
    CHECK(slurp(path.string()) == slurp(fixture("grassmann_n4.json")));
    CHECK(nlohmann::json::parse(emitted.out)["values"]["det"] == "q^2");
    std::filesystem::remove(path);

    CHECK(run_cli({"grassmann", "--m", "0"}).code == cli::kUsage);
}

TEST_CASE("qybe, qdet, central and braidb") {
    CHECK(run_cli({"qybe", "--n", "3"}).code == cli::kPass);
    CHECK(run_cli({"qybe", "--n", "7"}).code == cli::kUsage);

    Result qd = run_cli({"qdet", fixture("grassmann_n2.json"), "--oracle"});
    CHECK(qd.code == cli::kPass);
    auto v = nlohmann::json::parse(qd.out)["values"];
    CHECK(v["qdet"] == "-q^-1");
    CHECK(v["det"] == "-q");
    CHECK(v["qdet_oracle"] == "-q^-1");

    Result c = run_cli({"central", fixture("grassmann_n2.json")});
    CHECK(c.code == cli::kPass);
    auto checks = nlohmann::json::parse(c.out)["checks"];
    std::vector<std::string> names;
    for (const auto& x : checks) names.push_back(x["relation"]);
    CHECK(names == std::vector<std::string>{"operator_reflection", "centrality_bf", "centrality_bs"});
    CHECK(run_cli({"central", fixture("grassmann_n2.json"), "--variant", "rbar21"}).code == cli::kUsage);

    Result b = run_cli({"braidb", fixture("grassmann_n2.json"), "--strands", "3"});
    CHECK(b.code == cli::kPass);
    CHECK(nlohmann::json::parse(b.out)["values"]["scale"] == "q^(3/2)");
    CHECK(run_cli({"braidb", fixture("grassmann_n2.json"), "--strands", "1"}).code == cli::kUsage);
    CHECK(run_cli({"braidb", fixture("grassmann_n4.json"), "--strands", "5"}).code == cli::kUsage);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == cli::kUsage);
    CHECK(run_cli({"frobnicate"}).code == cli::kUsage);
    CHECK(run_cli({"verify-re"}).code == cli::kUsage);
    CHECK(run_cli({"verify-re", fixture("grassmann_n2.json"), "--bogus"}).code == cli::kUsage);
    CHECK(run_cli({"--help"}).code == cli::kPass);
}
