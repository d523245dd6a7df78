#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "horiesz/report.hpp"
#include "horiesz/verify.hpp"

using namespace horiesz;

TEST(Report, PassRule) {
    EXPECT_TRUE(make_report("a", "", 1.0, 1, 1e-13, 1e-12).pass);
    EXPECT_TRUE(make_report("a", "", 1.0, 1, 1e-12, 1e-12).pass);
    EXPECT_FALSE(make_report("a", "", 1.0, 1, 2e-12, 1e-12).pass);
    EXPECT_FALSE(make_report("a", "", 1.0, 1, std::numeric_limits<double>::quiet_NaN(), 1.0).pass);
}

TEST(Report, JsonSchemaAndOrder) {
    const Report r = make_report("plancherel", "anchor", 0.5, 20, 1e-15, 1e-9);
    const auto j = to_json(r);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"name", "paper_anchor", "k", "window", "value", "tolerance", "pass"}));
    EXPECT_EQ(j["pass"], true);
    EXPECT_EQ(to_json(make_report("x", "", 0, 0, std::numeric_limits<double>::infinity(), 1))["value"], "inf");
}

TEST(Report, EstimateJson) {
    EstimateReport e{"hormander_sup_truncated_sum", 1.0, 64, 1.5, {{8, 1.0}, {16, 1.5}}, false, false};
    const auto j = to_json(e);
    EXPECT_EQ(j["name"], "hormander_sup_truncated_sum");
    EXPECT_EQ(j["paper_anchor"], "Hormander integral condition");
    EXPECT_EQ(j["trend"][1][0], 16);
    EXPECT_DOUBLE_EQ(j["trend"][1][1].get<double>(), 1.5);
    EXPECT_EQ(trend_csv({e}), "name,k,window,value\r\nhormander_sup_truncated_sum,1,8,1\r\nhormander_sup_truncated_sum,1,16,1.5\r\n");
}

TEST(Csv, Rfc4180Quoting) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
    EXPECT_EQ(csv_row({"x", "y,z"}), "x,\"y,z\"\r\n");
}

TEST(Csv, ComplexFormat) {
    EXPECT_EQ(format_complex({1.5, 0.0}), "1.5+0i");
    EXPECT_EQ(format_complex({-0.25, -2.0}), "-0.25-2i");
    const double x = 0.1;
    EXPECT_EQ(std::stod(format_double(x)), x);
}

TEST(Csv, KernelLayout) {
    KernelMatrix km(1, 0.0, "riesz", "recurrence");
    km.at(0, 1) = cplx(0.5, -1.0);
    const std::string s = kernel_csv(km);
    EXPECT_EQ(s.rfind("kind,riesz,k,0,t,,method,recurrence,radius,1\r\nn\\m,-1,0,1\r\n", 0), 0u);
    EXPECT_NE(s.find("0,0+0i,0+0i,0.5-1i\r\n"), std::string::npos);
}

TEST(Verify, SuitesPassAndAreDeterministic) {
    for (double k : {0.0, 0.5, 1.0}) {
        VerifyConfig c;
        c.k = k;
        c.nmax = 8;
        c.window = 24;
        const auto a = run_verify(c);
        for (const auto& r : a) EXPECT_TRUE(r.pass) << r.name << " k=" << k << " value=" << r.value;
        const auto b = run_verify(c);
        EXPECT_EQ(to_json_array(a).dump(), to_json_array(b).dump());
    }
}

TEST(Verify, SingularWeightMode) {
    VerifyConfig c;
    c.k = 0.25;
    c.nmax = 10;
    const auto reports = run_verify(c);
    bool found = false;
    for (const auto& r : reports) {
        EXPECT_TRUE(r.pass) << r.name << " value=" << r.value;
        if (r.name == "kernel_identity") {
            found = true;
            EXPECT_DOUBLE_EQ(r.tolerance, 1e-6);
        }
    }
    EXPECT_TRUE(found);
}

TEST(Verify, FailureIsReported) {
    // A residual measured against an impossible tolerance must not pass.
    const auto r = make_report("orthonormality", "", 1.0, 20, verify_polys(1.0, 4).front().value, -1.0);
    EXPECT_FALSE(r.pass);
}
