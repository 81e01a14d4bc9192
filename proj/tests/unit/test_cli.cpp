#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "schubvan/cli.hpp"

using namespace schubvan;
using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "schubvan");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = std::string(P_tmpdir) + "/schubvan_test_" + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("single query, text and json") {
    auto r = run({"--type", "A", "--rank", "4", "--words", "3,2,1,4;1,4,2,3;1,2,4,3", "--epsilon", "0.333",
                  "--seed", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("decision: zero") != std::string::npos);

    r = run({"--type", "A", "--rank", "4", "--words", "3,2,1,4;1,3,4,2;1,2,4,3", "--seed", "7", "--output", "json"});
    CHECK(r.code == 0);
    const json rec = json::parse(r.out);
    CHECK(rec["schema"] == kDecisionSchema);
    CHECK(rec["decision"] == "positive");
    CHECK(rec["certain"] == true);
    CHECK(rec["seed"] == 7);
    CHECK(!rec["witness"].is_null());

    const auto path = temp_file("witness.json", r.out);
    auto replay = run({"--replay-witness", path, "--output", "json"});
    CHECK(replay.code == 0);
    const json rr = json::parse(replay.out);
    CHECK(rr["matches"] == true);
    CHECK(rr["det"] == rec["witness"]["det"]);
}

TEST_CASE("tampered witness is rejected") {
    auto r = run({"--type", "A", "--rank", "4", "--words", "3,2,1,4;1,3,4,2;1,2,4,3", "--seed", "7", "--output", "json"});
    json rec = json::parse(r.out);
    rec["witness"]["det"] = "12345";
    const auto path = temp_file("bad_witness.json", rec.dump());
    CHECK(run({"--replay-witness", path}).code == 1);
    rec["witness"] = nullptr;
    CHECK(run({"--replay-witness", temp_file("no_witness.json", rec.dump())}).code == 2);
}

TEST_CASE("determinism") {
    const std::vector<std::string> args = {"--type", "B", "--rank", "3", "--words", "-2,1,3;-2,-1,3;3,2,-1",
                                           "--seed", "99", "--output", "json"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("against flag applies the long-word twist") {
    const auto twisted = run({"--type", "A", "--rank", "4", "--words", "3,2,1,4;1,3,4,2", "--against", "4,3,1,2",
                              "--seed", "5", "--output", "json"});
    const json rec = json::parse(twisted.out);
    CHECK(rec["words"].size() == 3);
    CHECK(rec["words"][2] == "1,2,4,3");
    CHECK(rec["decision"] == "positive");
}

TEST_CASE("LR mode") {
    auto r = run({"--lr", "--type", "C", "--lambda", "2", "--mu", "2,1", "--nu", "3,2", "--seed", "3", "--output", "json"});
    CHECK(r.code == 0);
    const json rec = json::parse(r.out);
    CHECK(rec["decision"] == "positive");
    CHECK(rec["mode"] == "lr");
    r = run({"--lr", "--type", "A", "--lambda", "2", "--mu", "2", "--nu", "3", "--output", "json"});
    CHECK(json::parse(r.out)["decision"] == "zero");
    CHECK(run({"--lr", "--type", "B", "--lambda", "2,2", "--mu", "1", "--nu", "3,2"}).code == 2);
}

TEST_CASE("oracle check") {
    auto r = run({"--oracle-check", "--type", "A", "--rank", "4", "--words", "3,2,1,4;1,4,2,3;1,2,4,3", "--seed", "1",
                  "--output", "json"});
    CHECK(r.code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["oracle"] == "schubert");
    CHECK(rec["agree"] == true);
    r = run({"--oracle-check", "--lr", "--type", "C", "--lambda", "2", "--mu", "2,1", "--nu", "3,2", "--output", "json"});
    rec = json::parse(r.out);
    CHECK(rec["oracle"] == "qschur");
    CHECK(rec["agree"] == true);
}

TEST_CASE("batch") {
    const auto path = temp_file("batch.txt",
                                "A 4; 3,2,1,4; 1,4,2,3; 1,2,4,3\n"
                                "\n"
                                "# comment\n"
                                "A 4; 3,2,1,4; 1,3,4,2; 1,2,4,3\n"
                                "A 4; 3,2,1; 1,2,3,4\n"
                                "B 3; -2,1,3; -2,-1,3; 3,2,-1\n");
    auto r = run({"--batch", path, "--seed", "4", "--output", "json"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::vector<json> recs;
    for (std::string line; std::getline(lines, line);) recs.push_back(json::parse(line));
    REQUIRE(recs.size() == 4);
    CHECK(recs[0]["line"] == 1);
    CHECK(recs[0]["decision"] == "zero");
    CHECK(recs[1]["decision"] == "positive");
    CHECK(recs[2].contains("error"));
    CHECK(recs[3]["decision"] == "positive");
    for (const auto& rec : recs) CHECK(rec["schema"] == kDecisionSchema);

    auto parallel = run({"--batch", path, "--seed", "4", "--output", "json", "--jobs", "3"});
    CHECK(parallel.out == r.out);

    const auto empty = temp_file("empty.txt", "");
    r = run({"--batch", empty});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(run({"--batch", "/nonexistent/batch.txt"}).code == 2);
}

TEST_CASE("input errors exit with 2") {
    CHECK(run({"--type", "D", "--rank", "3", "--words", "-2,1,3"}).code == 2);
    CHECK(run({"--type", "Q", "--rank", "3", "--words", "1,2,3"}).code == 2);
    CHECK(run({"--type", "A", "--rank", "3", "--words", "1,2,3", "--epsilon", "2"}).code == 2);
    CHECK(run({"--type", "A", "--rank", "3", "--words", "1,2,3", "--arithmetic", "fast"}).code == 2);
    CHECK(run({"--bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("seed from the environment") {
    setenv(kSeedEnv, "42", 1);
    const auto a = run({"--type", "A", "--rank", "4", "--words", "3,2,1,4;1,3,4,2;1,2,4,3", "--output", "json"});
    CHECK(json::parse(a.out)["seed"] == 42);
    setenv(kSeedEnv, "nope", 1);
    CHECK(run({"--type", "A", "--rank", "4", "--words", "3,2,1,4;1,3,4,2;1,2,4,3"}).code == 2);
    unsetenv(kSeedEnv);
}
