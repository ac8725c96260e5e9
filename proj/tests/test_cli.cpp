#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "csfcat/cli.hpp"

using namespace csfcat;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    // Keep stray verification runs from writing a cache into the build tree.
    if (std::find(args.begin(), args.end(), "--cache-dir") == args.end()) {
        args.insert(args.begin(), {"--cache-dir",
                                   (std::filesystem::temp_directory_path() /
                                    "csfcat-test-scratch-cache")
                                       .string()});
    }
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("polynomial commands print canonical serializations", "[cli]") {
    CHECK(cli({"poly", "csf", "--tree", "2;0-1"}).out == "1*[1,1] + -1*[2]\n");
    CHECK(cli({"poly", "upoly", "--tree", "3;0-1,1-2"}).out ==
          "1*[1,1,1] + 2*[2,1] + 1*[3]\n");
    CHECK(cli({"poly", "lpoly", "--comp", "2 2 1 2"}).out ==
          "1*[2,2,2,1] + 1*[4,2,1] + 2*[3,2,2] + 2*[5,2] + 1*[4,3] + 1*[7]\n");
    CHECK(cli({"poly", "upoly", "--tree", "2;0-1", "--restrict", "1"}).out ==
          "1*[2]\n");
}

TEST_CASE("composition commands", "[cli]") {
    CHECK(cli({"comp", "compose", "--a", "2 1", "--b", "2 3"}).out == "2 5 3 2 3\n");
    CHECK(cli({"comp", "factor", "--comp", "4 10 4 10"}).out == "1 1 o 2 5 o 2\n");
    CHECK(cli({"comp", "eqclass", "--comp", "4 10 4 10"}).out ==
          "4 10 4 10\n10 4 10 4\n");
    CHECK(cli({"comp", "reverse", "--comp", "2 5"}).out == "5 2\n");
}

TEST_CASE("tree commands", "[cli]") {
    auto enumerated = cli({"trees", "enumerate", "--order", "4"});
    CHECK(enumerated.code == kExitOk);
    CHECK(std::count(enumerated.out.begin(), enumerated.out.end(), '\n') == 2);
    CHECK(cli({"trees", "enumerate", "--order", "1"}).out == "1;\n");

    auto inv = cli({"trees", "invariants", "--tree", "3;0-1,1-2"});
    CHECK(inv.code == kExitOk);
    CHECK(inv.out == "order: 3\n"
                     "degree_sequence: 2 1 1\n"
                     "diameter: 2\n"
                     "trunk_order: none (path)\n"
                     "twigs: none\n");

    auto star = cli({"trees", "invariants", "--tree", "4;0-1,0-2,0-3"});
    CHECK(star.out == "order: 4\n"
                      "degree_sequence: 3 1 1 1\n"
                      "diameter: 2\n"
                      "trunk_order: 1\n"
                      "twigs: 1:3\n");
}

TEST_CASE("exit codes distinguish usage errors from failures", "[cli]") {
    CHECK(cli({"comp", "factor", "--comp", "1"}).code == kExitUsage);
    CHECK(cli({"poly", "csf", "--tree", "not-a-tree"}).code == kExitUsage);
    CHECK(cli({"poly", "csf"}).code == kExitUsage);           // missing flag
    CHECK(cli({"trees", "enumerate", "--order", "99"}).code == kExitUsage);
    CHECK(cli({"poly", "csf", "--tree", "2;0-1", "--max-order", "1"}).code ==
          kExitUsage); // bound below the order
    CHECK(cli({"verify", "eq3", "--max-order", "6"}).code == kExitOk);
    CHECK(cli({}).code == kExitOk); // bare invocation prints help
    CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("JSON mode emits the documented shapes", "[cli]") {
    auto r = cli({"--json", "poly", "csf", "--tree", "2;0-1"});
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["partition"] == nlohmann::json::array({1, 1}));
    CHECK(j["terms"][0]["coeff"] == 1);
    CHECK(j["terms"][1]["partition"] == nlohmann::json::array({2}));
    CHECK(j["terms"][1]["coeff"] == -1);

    auto cls = nlohmann::json::parse(
        cli({"--json", "comp", "eqclass", "--comp", "4 10 4 10"}).out);
    CHECK(cls["class"].size() == 2);

    auto verify = nlohmann::json::parse(
        cli({"--json", "verify", "prop1", "--q", "2", "--max-order", "7"}).out);
    CHECK(verify["pass"] == true);
}

TEST_CASE("verification commands report and exit zero on pass", "[cli]") {
    auto r = cli({"verify", "theorem1", "--q", "2", "--max-order", "12"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("theorem1 q=2 max_order=12 PASS") != std::string::npos);

    auto l3 = cli({"verify", "lemma3", "--q", "2", "--max-order", "10"});
    CHECK(l3.code == kExitOk);
    CHECK(l3.out.find("PASS") != std::string::npos);
}

TEST_CASE("manifest round trip", "[cli]") {
    RunManifest m;
    m.command = "verify theorem1";
    m.params = {{"q", "2"}, {"max_order", "21"}, {"json", "false"}};
    m.exit_code = 0;
    m.summary = "PASS";
    CHECK(RunManifest::from_json(m.to_json()) == m);
    CHECK(manifest_hash(m).size() == 16);
    RunManifest other = m;
    other.params["q"] = "3";
    CHECK(manifest_hash(other) != manifest_hash(m));
}

TEST_CASE("cache replays byte-identical reports", "[cli]") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "csfcat-cache-test";
    fs::remove_all(dir);

    // Every verification run stores manifest.json and report.txt.
    auto plain = cli({"--cache-dir", dir.string(), "verify", "eq3",
                      "--max-order", "7"});
    CHECK(plain.code == kExitOk);
    bool found_manifest = false;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (entry.path().filename() == "manifest.json") found_manifest = true;
    }
    CHECK(found_manifest);
    fs::remove_all(dir);

    std::vector<std::string> args{"--cache",      "--cache-dir", dir.string(),
                                  "verify",       "eq3",         "--max-order",
                                  "7"};
    auto first = cli(args);
    CHECK(first.code == kExitOk);
    REQUIRE_FALSE(fs::is_empty(dir));

    auto second = cli(args);
    CHECK(second.code == first.code);
    CHECK(second.out == first.out);

    // A different parameterization misses the cache.
    auto third = cli({"--cache", "--cache-dir", dir.string(), "verify", "eq3",
                      "--max-order", "6"});
    CHECK(third.out != first.out);

    // Identical invocations produce identical bytes even without the cache.
    auto again = cli({"--cache-dir", dir.string(), "verify", "theorem1", "--q",
                      "2", "--max-order", "12"});
    auto again2 = cli({"--cache-dir", dir.string(), "verify", "theorem1", "--q",
                       "2", "--max-order", "12"});
    CHECK(again.out == again2.out);
    fs::remove_all(dir);
}
