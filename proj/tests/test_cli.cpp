#include <gtest/gtest.h>

#include <sstream>

#include "trilie/cli/commands.hpp"

using namespace trilie;
using namespace trilie::cli;

namespace {

std::string sample(const std::string& name) { return std::string(TRILIE_DATA_DIR) + "/" + name; }

struct Outcome {
    int code;
    json report;
    std::string err;
};

Outcome run(const std::string& command, const std::optional<std::string>& input, Options opt = {}) {
    opt.structured = true;
    std::ostringstream out, err;
    int code = dispatch(command, input, opt, out, err);
    json j = out.str().empty() ? json() : json::parse(out.str());
    return {code, j, err.str()};
}

} // namespace

TEST(Cli, CheckExitCodes) {
    EXPECT_EQ(run("check", sample("A3.json")).code, kOk);
    EXPECT_EQ(run("check", sample("four_dim_simple.json")).code, kOk);
    EXPECT_EQ(run("check", sample("duplicate_triple.json")).code, kParse);
    Outcome bad = run("check", sample("identity_violation.json"));
    EXPECT_EQ(bad.code, kInvalidAlgebra);
    EXPECT_FALSE(bad.report["result"]["violations"].empty());
    EXPECT_EQ(run("check", sample("missing.json")).code, kParse);
    EXPECT_EQ(run("check", std::string("catalog:nope")).code, kParse);
    EXPECT_EQ(run("check", std::nullopt).code, kParse);
    EXPECT_EQ(run("frobnicate", std::string("catalog:A3")).code, kParse);
}

TEST(Cli, InvalidAlgebraOutsideCheck) {
    EXPECT_EQ(run("spaces", sample("identity_violation.json")).code, kInvalidAlgebra);
}

TEST(Cli, SpacesShowA3Derivations) {
    Options opt;
    opt.which = {"der"};
    Outcome r = run("spaces", std::string("catalog:A3"), opt);
    ASSERT_EQ(r.code, kOk);
    const json& der = r.report["result"]["spaces"]["der"];
    EXPECT_EQ(der["dim"], 6);
    EXPECT_FALSE(r.report["result"]["spaces"].contains("qder"));
    for (const auto& m : der["basis"]) {
        Scalar a22 = parse_rational(m[1][1].get<std::string>());
        Scalar a33 = parse_rational(m[2][2].get<std::string>());
        EXPECT_EQ(a33, -a22);
    }
    opt.which = {"bogus"};
    EXPECT_EQ(run("spaces", std::string("catalog:A3"), opt).code, kParse);
}

TEST(Cli, VerifyA3) {
    Options opt;
    opt.torus = R"([["0","1","0"],["0","0","1"]])";
    Outcome r = run("verify", std::string("catalog:A3"), opt);
    EXPECT_EQ(r.code, kOk) << r.err;
    EXPECT_TRUE(r.report["passed"].get<bool>());
    EXPECT_EQ(r.report["result"]["dims"]["der"], 6);
    EXPECT_EQ(r.report["result"]["dims"]["qder"], 9);
}

TEST(Cli, WeightsInvalidTorus) {
    Options opt;
    opt.torus = R"([["0","1","0","0"],["0","0","1","0"]])";
    Outcome r = run("weights", std::string("catalog:B4"), opt);
    EXPECT_EQ(r.code, kInvalidTorus);
    EXPECT_EQ(r.report["result"]["torus_error"], "ZeroWeightSpaceExceedsTorus");
    EXPECT_EQ(run("weights", std::string("catalog:B4")).code, kInvalidTorus);
    opt.torus = "[[1,2";
    EXPECT_EQ(run("weights", std::string("catalog:A3"), opt).code, kParse);
}

TEST(Cli, KernelWithMap) {
    Options opt;
    opt.map = R"([["0","0","0","1"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]])";
    Outcome r = run("kernel", std::string("catalog:B4"), opt);
    EXPECT_EQ(r.code, kOk) << r.err;
    EXPECT_FALSE(r.report["result"]["map"]["in_qder"].get<bool>());
    EXPECT_FALSE(r.report["result"]["map"]["kernel_criterion"].get<bool>());
}

TEST(Cli, ExtendAndCatalog) {
    Outcome e = run("extend", std::string("catalog:A3"));
    EXPECT_EQ(e.code, kOk) << e.err;
    Outcome c = run("catalog", std::nullopt);
    EXPECT_EQ(c.code, kOk);
    EXPECT_FALSE(c.report["result"]["algebras"].empty());
    Outcome one = run("catalog", std::string("B4"));
    EXPECT_EQ(one.report["result"]["document"]["dim"], 4);
}

TEST(Cli, DeterministicReports) {
    Options opt;
    opt.seed = 3;
    opt.torus = R"([["0","1","0"],["0","0","1"]])";
    Report first = cmd_verify("catalog:A3", opt);
    Report second = cmd_verify("catalog:A3", opt);
    EXPECT_EQ(report_json(first, false).dump(), report_json(second, false).dump());
    Report other = cmd_verify(sample("A3.json"), opt);
    EXPECT_EQ(report_json(other, false)["result"].dump(), report_json(first, false)["result"].dump());
}

TEST(Cli, TextRendering) {
    Options opt;
    std::ostringstream out, err;
    EXPECT_EQ(dispatch("check", std::string("catalog:A3"), opt, out, err), kOk);
    EXPECT_NE(out.str().find("all checks passed"), std::string::npos);
}
