#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using partalg::cli::run;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PARTALG_DATA_DIR) + "/filters/" + name; }

std::string temp_filter(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / ("partalg_test_" + name);
    std::ofstream(path) << body;
    return path.string();
}

} // namespace

TEST(Cli, Dims) {
    const auto r = call({"dims", "--lambda", "2,1", "--k", "2", "--l", "0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "f=2 schur=2 w=4\n");
    const auto j = call({"dims", "--lambda", "7^3,2^4", "--k", "2", "--l", "1", "--format", "json"});
    EXPECT_EQ(j.code, 0);
    const auto parsed = nlohmann::json::parse(j.out);
    EXPECT_EQ(parsed["schur"], 0);
    EXPECT_EQ(parsed["lambda"], (std::vector<int>{7, 7, 7, 2, 2, 2, 2}));
}

TEST(Cli, Lr) {
    EXPECT_EQ(call({"lr", "--mu", "1", "--lam", "1"}).out, "(2)=1 (1,1)=1\n");
    EXPECT_EQ(call({"lr", "--mu", "2,1", "--lam", "2,1", "--nu", "3,2,1"}).out, "2\n");
    const auto j = nlohmann::json::parse(call({"lr", "--mu", "2,1", "--lam", "1", "--format", "json"}).out);
    EXPECT_EQ(j["terms"].size(), 3u);
    EXPECT_EQ(j["terms"][0]["nu"], (std::vector<int>{3, 1}));
}

TEST(Cli, Growth) {
    const auto r = call({"growth", "--file", data("sym.json"), "--n-max", "30"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["alpha"], 1);
    EXPECT_EQ(j["verdict"], "PASS");
}

TEST(Cli, Series) {
    const auto r = call({"series", "--file", data("wedge.json"), "--n-max", "4", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n,d_n\n0,1\n1,2\n2,1\n3,0\n4,0\n");
    const auto a = call({"series", "--file", data("free11.json"), "--n-max", "12", "--format", "json"});
    const auto b = call({"series", "--file", data("free11.json"), "--n-max", "12", "--format", "json", "--jobs", "3"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(nlohmann::json::parse(a.out)["values"][12], 4096);
}

TEST(Cli, Filter) {
    const auto f = temp_filter("f1.json", R"({"k":2, "l":0, "generators":[[2,1],[3]]})");
    EXPECT_EQ(call({"filter", "minimize", "--file", f}).out, "(3) (2,1) (1,1,1)\n");
    EXPECT_EQ(call({"filter", "member", "--file", f, "--lambda", "3,1"}).code, 0);
    EXPECT_EQ(call({"filter", "member", "--file", f, "--lambda", "2"}).code, 1);
    EXPECT_EQ(call({"filter", "complement", "--file", data("hook21.json"), "--n", "4"}).out, "(4) (1,1,1,1)\n");
    EXPECT_EQ(call({"filter", "hr", "--file", data("strip3.json")}).out, "hr=3 exp=2\n");
    EXPECT_EQ(call({"filter", "pi", "--file", data("square2.json")}).out, "c=2 commutators=3\n");
    const auto absent = call({"filter", "pi", "--file", data("strip3.json")});
    EXPECT_EQ(absent.code, 1);
    EXPECT_EQ(absent.out, "absent\n");
    EXPECT_EQ(call({"filter", "pi", "--file", data("sym.json"), "--super"}).out, "b=2 factors=4\n");
    EXPECT_EQ(call({"filter", "member", "--file", f}).code, 2);
    EXPECT_EQ(call({"filter", "explode", "--file", f}).code, 2);
}

TEST(Cli, Oracle) {
    auto r = call({"oracle", "decompose", "--k", "2", "--l", "1", "--n", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, 5), "PASS ");
    r = call({"oracle", "check-ideal", "--file", data("sym.json"), "--n-max", "3"});
    EXPECT_EQ(r.code, 0);
    r = call({"oracle", "check-ideal", "--set", "1,1", "--k", "2", "--l", "0", "--n-max", "3"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out.substr(0, 5), "FAIL ");
    r = call({"oracle", "identity", "--file", data("square2.json"), "--poly", "commutators:3", "--n", "6"});
    EXPECT_EQ(r.code, 0);
    r = call({"oracle", "identity", "--file", data("square2.json"), "--poly", "commutators:1", "--n", "2"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(nlohmann::json::parse(r.out.substr(r.out.find('\n') + 1)).contains("witness"));
    EXPECT_EQ(call({"oracle", "ee", "--poly", "popov5"}).code, 0);
    EXPECT_EQ(call({"oracle", "ee", "--poly", "br-cube"}).code, 0);
    EXPECT_EQ(call({"oracle", "ee", "--poly", "s4"}).code, 1);
    EXPECT_EQ(call({"oracle", "ee-kernel", "--d", "4"}).out, "0\n");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"bogus"}).code, 2);
    EXPECT_EQ(call({"dims", "--lambda", "1,2", "--k", "1", "--l", "0"}).code, 2);
    EXPECT_EQ(call({"dims", "--lambda", "2"}).code, 2);
    EXPECT_EQ(call({"growth", "--file", "/nonexistent.json", "--n-max", "3"}).code, 2);
    EXPECT_EQ(call({"oracle", "ee-kernel", "--d", "9"}).code, 3);
    EXPECT_EQ(call({"oracle", "decompose", "--k", "4", "--l", "4", "--n", "5"}).code, 3);
    EXPECT_EQ(call({"oracle", "ee", "--poly", "unknown"}).code, 2);
    EXPECT_EQ(call({"--help"}).code, 0);
}
