#include <quadbir/report.hpp>

#include <gtest/gtest.h>

#include <fstream>

using namespace quadbir;

namespace {

ReportDocument sample_document(int dim) {
    return build_classification_document(classify(dim),
                                         "classify --dim " + std::to_string(dim));
}

}  // namespace

TEST(ReportDocument, JsonRoundTrip) {
    for (const int dim : {3, 4}) {
        const ReportDocument doc = sample_document(dim);
        const Json parsed = Json::parse(doc.dump());
        EXPECT_EQ(parsed, doc.to_json());
        const ReportDocument rebuilt = ReportDocument::from_json(parsed);
        EXPECT_EQ(rebuilt.dump(), doc.dump());
    }
}

TEST(ReportDocument, FrozenTopLevelLayout) {
    const Json doc = sample_document(4).to_json();
    std::vector<std::string> keys;
    for (const auto& [key, value] : doc.items()) keys.push_back(key);
    EXPECT_EQ(keys, (std::vector<std::string>{"version", "command", "result", "trace"}));
    EXPECT_TRUE(doc["result"].is_object());
    EXPECT_TRUE(doc["trace"].is_array());
    for (const auto& entry : doc["trace"]) {
        EXPECT_TRUE(entry.contains("claim"));
        EXPECT_TRUE(entry.contains("anchor"));
        EXPECT_TRUE(entry.contains("value"));
    }
}

TEST(ReportDocument, PayloadShape) {
    const Json q4 = sample_document(4).to_json()["result"];
    EXPECT_EQ(q4["type"], "Z_E_II");
    EXPECT_EQ(q4["profile"], Json::array({3, 3, 2, 2}));
    EXPECT_EQ(q4["baseLocus"]["degree"], 10);
    EXPECT_EQ(q4["baseLocus"]["bidegree"], Json::array({5, 5}));
    EXPECT_EQ(q4["h0"], 6);
    EXPECT_EQ(q4["elimination"].size(), 17u);
    EXPECT_EQ(q4["contraction"]["excDivisor"], "8H - 3E");
    EXPECT_EQ(q4["lattice"]["discriminantGroup"], "Z/12");

    const Json q3 = sample_document(3).to_json()["result"];
    EXPECT_EQ(q3["baseLocus"]["degree"], 4);
    EXPECT_EQ(q3["baseLocus"]["genus"], 0);
    EXPECT_EQ(q3["profile"], Json::array({2, 2, 1, 1}));
}

TEST(ReportDocument, NoTimestamps) {
    const std::string dumped = sample_document(4).dump();
    EXPECT_EQ(dumped.find("time"), std::string::npos);
    EXPECT_EQ(dumped.find("date"), std::string::npos);
}

TEST(ReportDocument, SchemaFileMatchesLayout) {
    std::ifstream file(std::string(QUADBIR_SOURCE_DIR) + "/schemas/report.schema.json");
    ASSERT_TRUE(file.is_open());
    const Json schema = Json::parse(file);
    const Json required = schema.at("required");
    EXPECT_EQ(required, Json::array({"version", "command", "result", "trace"}));
    for (const auto& key : required)
        EXPECT_TRUE(schema.at("properties").contains(key.get<std::string>()));
}

TEST(Markdown, RendersEliminationTable) {
    const ClassificationReport r = classify(4);
    const ReportDocument doc = build_classification_document(r, "classify --dim 4");
    const std::string md = to_markdown(doc, r);
    EXPECT_NE(md.find("| d | verdict | witness |"), std::string::npos);
    EXPECT_NE(md.find("| 10 | Survives | (5,5) |"), std::string::npos);
    EXPECT_NE(md.find("| 14 | GenusBoundExceeded | pi = 19, pi1 = 18 |"), std::string::npos);
    EXPECT_NE(md.find("Z_E_II"), std::string::npos);
}

TEST(Markdown, DimensionThreeSummary) {
    const ClassificationReport r = classify(3);
    const std::string md = to_markdown(build_classification_document(r, "classify --dim 3"), r);
    EXPECT_NE(md.find("degree 4, genus 0"), std::string::npos);
}
