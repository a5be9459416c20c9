#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = ggg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

size_t count(const std::string& text, const std::string& needle)
{
    size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
        ++n;
    return n;
}

std::filesystem::path scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "ggg_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(Cli, BuildDot)
{
    auto r = invoke({"build", "--family", "G", "--m", "7", "--format", "dot"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count(r.out, " -- "), 35u);
    EXPECT_EQ(r.out.rfind("graph G {\n", 0), 0u);
}

TEST(Cli, BuildJsonToFileThenExport)
{
    auto json_path = scratch("h6.json");
    EXPECT_EQ(invoke({"build", "--family", "H", "--m", "6", "--out", json_path.string()}).code, 0);
    auto r = invoke({"export", "--in", json_path.string(), "--format", "dot"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count(r.out, " -- "), 30u);
    auto again = invoke({"export", "--in", json_path.string(), "--format", "json"});
    std::ifstream file(json_path);
    std::stringstream original;
    original << file.rdbuf();
    EXPECT_EQ(again.out, original.str());
}

TEST(Cli, BuildOtherFamilies)
{
    EXPECT_EQ(count(invoke({"build", "--family", "C", "--m", "5", "--format", "dot"}).out, " -- "), 5u);
    EXPECT_EQ(count(invoke({"build", "--family", "M", "--m", "5", "--format", "dot"}).out, " -- "), 20u);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(invoke({"build", "--family", "G", "--m", "6"}).code, 2);
    EXPECT_EQ(invoke({"build", "--family", "H", "--m", "4"}).code, 2);
    EXPECT_EQ(invoke({"build", "--family", "X", "--m", "5"}).code, 2);
    EXPECT_EQ(invoke({"build", "--family", "G"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--family", "C", "--m", "5"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--family", "G", "--m", "5", "--checks", "bogus"}).code, 2);
    EXPECT_EQ(invoke({"export", "--in", scratch("missing.json").string()}).code, 2);
    auto r = invoke({"survey", "--m-min", "9", "--m-max", "7"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("error"), std::string::npos);
    EXPECT_EQ(invoke({"survey", "--m-min", "5", "--m-max", "16"}).code, 2);
}

TEST(Cli, MalformedImportIsUsageError)
{
    auto path = scratch("broken.json");
    std::ofstream(path) << "{\"family\": \"G\"}";
    auto r = invoke({"export", "--in", path.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("BadFormat"), std::string::npos) << r.err;
}

TEST(Cli, VerifyExitCodes)
{
    auto g5 = invoke({"verify", "--family", "G", "--m", "5"});
    EXPECT_EQ(g5.code, 0);
    auto doc = nlohmann::json::parse(g5.out);
    EXPECT_EQ(doc["chromatic_number"], 4);
    EXPECT_TRUE(doc["discrepancies"].empty());

    EXPECT_EQ(invoke({"verify", "--family", "H", "--m", "6"}).code, 0);
    EXPECT_EQ(invoke({"verify", "--family", "H", "--m", "8", "--checks", "remark1"}).code, 1);
    EXPECT_EQ(invoke({"verify", "--family", "G", "--m", "9", "--checks", "color", "--budget", "2"}).code, 3);
}

TEST(Cli, SurveyCsv)
{
    auto r = invoke({"survey", "--m-min", "5", "--m-max", "6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count(r.out, "\n"), 3u);
    EXPECT_EQ(r.out.rfind("m,family,n,edges,girth,chromatic", 0), 0u);
    EXPECT_NE(r.out.find("\n5,G,11,20,4,4,"), std::string::npos);
    EXPECT_NE(r.out.find("\n6,H,13,30,4,3,"), std::string::npos);
}

TEST(Cli, HelpExitsCleanly)
{
    auto r = invoke({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}
