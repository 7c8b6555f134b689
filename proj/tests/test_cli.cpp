#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "freeact/cli.hpp"

using freeact::run_cli;

namespace {

struct CliResult {
    int status = 0;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    CliResult result;
    result.status = run_cli(std::move(args), out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

// runs of spaces squashed, so table checks don't depend on column widths
std::string squash(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == ' ' && !out.empty() && out.back() == ' ') continue;
        out.push_back(c);
    }
    return out;
}

}  // namespace

TEST_CASE("classify command") {
    auto res = cli({"classify", "quaternion", "--n", "2"});
    REQUIRE(res.status == 0);
    CHECK(res.err.empty());
    CHECK(res.out.find("genus: 9") != std::string::npos);
    const std::string flat = squash(res.out);
    CHECK(flat.find("orientation_preserving 1 1") != std::string::npos);
    CHECK(flat.find("orientation_reversing 3 1") != std::string::npos);
    CHECK(flat.find("nonorientable 0 0") != std::string::npos);

    SUBCASE("--genus matches --n byte for byte") {
        auto by_genus = cli({"classify", "quaternion", "--genus", "9"});
        REQUIRE(by_genus.status == 0);
        CHECK(by_genus.out == res.out);
    }
}

TEST_CASE("classify via genus on dihedral:3") {
    auto res = cli({"classify", "dihedral:3", "--genus", "7"});
    REQUIRE(res.status == 0);
    CHECK(res.out.find("n: 2") != std::string::npos);
    const std::string flat = squash(res.out);
    CHECK(flat.find("orientation_preserving 1 1") != std::string::npos);
    CHECK(flat.find("orientation_reversing 1 1") != std::string::npos);
    CHECK(flat.find("nonorientable 1 1") != std::string::npos);
}

TEST_CASE("error paths exit nonzero and keep stdout clean") {
    SUBCASE("genus not of the form 1+|G|(n-1)") {
        auto res = cli({"classify", "cyclic:4", "--genus", "6"});
        CHECK(res.status == 2);
        CHECK(res.out.empty());
        CHECK(res.err.substr(0, 6) == "error:");
        CHECK(res.err.find('\n') == res.err.size() - 1);
    }
    SUBCASE("bad descriptor") {
        auto res = cli({"classify", "frobnicate:9", "--n", "2"});
        CHECK(res.status == 2);
        CHECK(res.out.empty());
    }
    SUBCASE("missing n and genus") {
        auto res = cli({"classify", "cyclic:4"});
        CHECK(res.status == 2);
    }
    SUBCASE("state cap exceeded") {
        auto res = cli({"classify", "quaternion", "--n", "2", "--state-cap", "16"});
        CHECK(res.status == 3);
        CHECK(res.out.empty());
        CHECK(res.err.find("error: cap:") == 0);
    }
    SUBCASE("order cap exceeded") {
        auto res = cli({"classify", "cyclic:80", "--n", "1"});
        CHECK(res.status == 3);
    }
    SUBCASE("formula on a nonabelian group") {
        auto res = cli({"formula", "dihedral:3", "--n", "2"});
        CHECK(res.status == 2);
        CHECK(res.out.empty());
    }
    SUBCASE("unknown command") {
        auto res = cli({"explode", "cyclic:2"});
        CHECK(res.status == 2);
    }
}

TEST_CASE("machine output round-trips byte for byte") {
    for (auto args : {std::vector<std::string>{"classify", "dihedral:4", "--n", "2",
                                               "--format", "machine"},
                      std::vector<std::string>{"spectrum", "quaternion", "--format", "machine"},
                      std::vector<std::string>{"nielsen", "dihedral:5", "--n", "2",
                                               "--format", "machine"},
                      std::vector<std::string>{"orbits", "cyclic:2", "--n", "2",
                                               "--format", "machine"},
                      std::vector<std::string>{"oracle-check", "dihedral:3", "--n", "2",
                                               "--format", "machine"},
                      std::vector<std::string>{"formula", "cyclic:6", "--n", "1",
                                               "--format", "machine"},
                      std::vector<std::string>{"formula", "abelian:2,2", "--n", "2",
                                               "--enumerate", "--format", "machine"}}) {
        auto res = cli(args);
        REQUIRE(res.status == 0);
        auto parsed = nlohmann::ordered_json::parse(res.out);
        CHECK(parsed.dump(2) + "\n" == res.out);
    }
}

TEST_CASE("machine classify carries the stable fields") {
    auto res = cli({"classify", "quaternion", "--n", "2", "--format", "machine"});
    REQUIRE(res.status == 0);
    auto j = nlohmann::ordered_json::parse(res.out);
    CHECK(j["group"] == "quaternion");
    CHECK(j["n"] == 2);
    CHECK(j["genus"] == 9);
    CHECK(j["mu"] == 2);
    CHECK(j["h1_rank"] == 2);
    CHECK(j["op"] == 1);
    CHECK(j["or"] == 3);
    CHECK(j["nonor"] == 0);
    CHECK(j["op_weak"] == 1);
    CHECK(j["or_weak"] == 1);
    CHECK(j["nonor_weak"] == 0);
    CHECK(j["representatives"]["equivalence"].size() == 4);
    CHECK(j["representatives"]["weak"].size() == 2);
}

TEST_CASE("spectrum command") {
    auto res = cli({"spectrum", "dihedral:3", "--bound", "20"});
    REQUIRE(res.status == 0);
    CHECK(squash(res.out).find("nonorientable 7,13,19") != std::string::npos);
}

TEST_CASE("nielsen command") {
    auto res = cli({"nielsen", "dihedral:5", "--n", "2"});
    REQUIRE(res.status == 0);
    CHECK(res.out.find("classes: 2") != std::string::npos);
}

TEST_CASE("orbits command") {
    SUBCASE("full partition") {
        auto res = cli({"orbits", "dihedral:3", "--n", "2"});
        REQUIRE(res.status == 0);
        CHECK(res.out.find("orbits: 3") != std::string::npos);
    }
    SUBCASE("weak partition") {
        auto res = cli({"orbits", "quaternion", "--n", "2", "--weak"});
        REQUIRE(res.status == 0);
        CHECK(res.out.find("orbits: 2") != std::string::npos);
    }
    SUBCASE("single vector with graph export") {
        const std::string path = "cli_export_test.edges";
        auto res = cli({"orbits", "quaternion", "--vector", "g=(i,j);v=(+,+)",
                        "--export-graph", path});
        REQUIRE(res.status == 0);
        CHECK(res.out.find("orbit_size: 24") != std::string::npos);
        std::ifstream file(path);
        REQUIRE(file.good());
        int lines = 0;
        std::string line;
        while (std::getline(file, line)) lines++;
        CHECK(lines == 16);
        file.close();
        std::remove(path.c_str());
    }
    SUBCASE("export without a vector is a usage error") {
        auto res = cli({"orbits", "quaternion", "--n", "2", "--export-graph", "x.edges"});
        CHECK(res.status == 2);
    }
    SUBCASE("bad vector text") {
        auto res = cli({"orbits", "quaternion", "--vector", "g=(i,zz);v=(+,+)"});
        CHECK(res.status == 2);
    }
}

TEST_CASE("oracle-check command") {
    auto res = cli({"oracle-check", "dihedral:3", "--n", "2"});
    REQUIRE(res.status == 0);
    CHECK(res.out.find("mismatch: 0") != std::string::npos);
}

TEST_CASE("formula command") {
    auto res = cli({"formula", "abelian:4,2", "--n", "2"});
    REQUIRE(res.status == 0);
    CHECK(squash(res.out).find("orientation_reversing 3 2") != std::string::npos);

    SUBCASE("with enumeration diff") {
        auto both = cli({"formula", "abelian:4,2", "--n", "2", "--enumerate"});
        REQUIRE(both.status == 0);
        CHECK(both.out.find("match: yes") != std::string::npos);
    }
    SUBCASE("machine diff") {
        auto both = cli({"formula", "cyclic:6", "--n", "1", "--enumerate",
                         "--format", "machine"});
        REQUIRE(both.status == 0);
        auto j = nlohmann::ordered_json::parse(both.out);
        CHECK(j["match"] == true);
        CHECK(j["formula"]["op"] == j["enumeration"]["op"]);
    }
}
