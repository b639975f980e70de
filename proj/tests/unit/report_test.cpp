#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "snsgraph/community.hpp"
#include "snsgraph/error.hpp"
#include "snsgraph/report.hpp"

namespace snsgraph {
namespace {

RedactionPolicy allow(std::initializer_list<const char*> handles) {
    RedactionPolicy p;
    for (const char* h : handles) p.allowlist.insert(Handle(h));
    return p;
}

AnalysisReport table(std::vector<AccountRow> accounts, std::vector<TermRow> terms = {}) {
    AnalysisReport r;
    r.top_accounts = std::move(accounts);
    r.top_terms = std::move(terms);
    return r;
}

/// Runs the library steps a report is assembled from on a small corpus.
struct Toy {
    std::vector<InteractionRecord> records = testing::synthetic_corpus({.records = 600, .users = 120, .communities = 4, .seed = 5});
    BuiltGraph built = build_graph(records);
    Partition partition = louvain(built.graph, {.seed = 1});
    CentralityResult centrality = eigenvector_centrality(built.graph, {});
    std::vector<TermStats> terms = term_stats(records);

    ReportInputs inputs() const {
        ReportInputs in;
        in.records_read = records.size() + 2;
        in.parse_diagnostics = 2;
        in.records = &records;
        in.built = &built;
        in.partition = &partition;
        in.centrality = &centrality;
        in.terms = &terms;
        in.sentiment = SentimentSummary{3, 1, 0.5, false};
        in.metadata = {"1.0.0", 42, 7, 9, R"({"b": 1, "a": [1, 2]})"};
        return in;
    }
};

TEST(RedactionPolicy, LoadsHandlesAndComments) {
    std::istringstream in("# public accounts\n@JeremyCorbyn\ntheresa_may  # PM\n\n");
    const auto p = load_redaction_policy(in);
    EXPECT_EQ(p.allowlist.size(), 2u);
    EXPECT_TRUE(p.allows(Handle("jeremycorbyn")));
    EXPECT_TRUE(p.allows(Handle("theresa_may")));
    std::istringstream bad("two words\n");
    EXPECT_THROW(load_redaction_policy(bad), DataError);
    EXPECT_THROW(load_redaction_policy_file("/nonexistent/allow.txt"), IoError);
}

TEST(Redact, PublicAccountsStay) {
    const auto out = redact(table({{"@jeremycorbyn", 0.2, false}, {"@privateuser", 0.1, false}}), allow({"jeremycorbyn"}));
    ASSERT_EQ(out.top_accounts.size(), 2u);
    EXPECT_EQ(out.top_accounts[0].handle, "@jeremycorbyn");
    EXPECT_FALSE(out.top_accounts[0].redacted);
    EXPECT_EQ(out.top_accounts[1].handle, "retracted");
    EXPECT_TRUE(out.top_accounts[1].redacted);
    EXPECT_EQ(out.top_accounts[1].eigenvector, 0.1);
}

TEST(Redact, EmptyAllowlistReplacesEveryHandle) {
    const auto out = redact(table({{"@a", 0.5, false}, {"@b", 0.5, false}},
                                  {{"a", 10, 0.1, true, false}, {"vote", 9, 0.2, false, false}}),
                            RedactionPolicy{});
    for (const auto& row : out.top_accounts) EXPECT_EQ(row.handle, "retracted");
    EXPECT_EQ(out.top_terms[0].term, "retracted");
    EXPECT_EQ(out.top_terms[1].term, "vote");
}

TEST(Redact, CustomPlaceholder) {
    RedactionPolicy p;
    p.placeholder = "[private]";
    EXPECT_EQ(redact(table({{"@x", 1.0, false}}), p).top_accounts[0].handle, "[private]");
}

TEST(Redact, IdempotentAndNumericPreserving) {
    const Toy toy;
    const auto report = assemble_report(toy.inputs());
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        RedactionPolicy policy;
        for (const auto& node : toy.built.graph.nodes())
            if (rng() % 3 == 0) policy.allowlist.insert(node);
        const auto once = redact(report, policy);
        EXPECT_EQ(redact(once, policy), once);
        ASSERT_EQ(once.top_accounts.size(), report.top_accounts.size());
        ASSERT_EQ(once.top_terms.size(), report.top_terms.size());
        for (std::size_t i = 0; i < once.top_accounts.size(); ++i)
            EXPECT_EQ(once.top_accounts[i].eigenvector, report.top_accounts[i].eigenvector);
        for (std::size_t i = 0; i < once.top_terms.size(); ++i) {
            EXPECT_EQ(once.top_terms[i].mention_count, report.top_terms[i].mention_count);
            EXPECT_EQ(once.top_terms[i].salience, report.top_terms[i].salience);
        }
        EXPECT_EQ(once.modularity_q, report.modularity_q);
        EXPECT_EQ(once.corpus, report.corpus);
        EXPECT_EQ(once.alerts, report.alerts);
    }
}

TEST(AssembleReport, ToyPipeline) {
    const Toy toy;
    const auto report = assemble_report(toy.inputs());
    EXPECT_EQ(report.top_accounts.size(), 13u);
    EXPECT_EQ(report.top_terms.size(), 10u);
    EXPECT_EQ(report.modularity_q, toy.partition.modularity_q);
    EXPECT_EQ(report.corpus.records_read, 602u);
    EXPECT_EQ(report.corpus.node_count, toy.built.graph.node_count());
    EXPECT_EQ(report.metadata.config_json, R"({"a":[1,2],"b":1})");

    const auto text = render_report(report, ReportFormat::Text);
    EXPECT_NE(text.find("modularity Q"), std::string::npos);
    EXPECT_NE(text.find("Top accounts by eigenvector"), std::string::npos);
    EXPECT_NE(text.find("Top words by count and salience"), std::string::npos);
    EXPECT_NE(text.find(report.top_accounts[0].handle), std::string::npos);
}

TEST(AssembleReport, MarksTermsThatNameAccounts) {
    Toy toy;
    toy.terms = {{"user00001", 50, 0, 0.4}, {"vote", 40, 0, 0.6}};
    const auto report = assemble_report(toy.inputs());
    ASSERT_EQ(report.top_terms.size(), 2u);
    EXPECT_EQ(report.top_terms[0].is_handle, toy.built.graph.contains(Handle("user00001")));
    EXPECT_FALSE(report.top_terms[1].is_handle);
}

TEST(AssembleReport, AlertsInTimeOrder) {
    const Toy toy;
    auto in = toy.inputs();
    const auto t0 = parse_rfc3339("2017-06-08T22:00:00Z");
    in.alerts = {{DeviationMetric::Volume, t0 + std::chrono::minutes{5}, 50, 10, 2, 20},
                 {DeviationMetric::Volume, t0, 40, 10, 2, 15},
                 {DeviationMetric::Volume, t0 + std::chrono::minutes{2}, 0, 10, 2, -5}};
    const auto report = assemble_report(in);
    ASSERT_EQ(report.alerts.size(), 3u);
    EXPECT_EQ(report.alerts[0].bucket, t0);
    EXPECT_EQ(report.alerts[2].bucket, t0 + std::chrono::minutes{5});
    const auto json = render_report(report, ReportFormat::Json);
    EXPECT_LT(json.find("22:00:00Z"), json.find("22:02:00Z"));
    EXPECT_LT(json.find("22:02:00Z"), json.find("22:05:00Z"));
}

TEST(AssembleReport, MissingInputs) {
    const Toy toy;
    auto in = toy.inputs();
    in.partition = nullptr;
    EXPECT_THROW(assemble_report(in), ConfigError);
    in = toy.inputs();
    in.metadata.config_json = "{broken";
    EXPECT_THROW(assemble_report(in), ConfigError);
}

TEST(RenderReport, JsonRoundTripAndStableBytes) {
    const Toy toy;
    auto in = toy.inputs();
    in.alerts = {{DeviationMetric::MeanSentiment, parse_rfc3339("2017-06-08T22:00:00Z"), -0.5, 0.2, 0.1, -7}};
    const auto report = redact(assemble_report(in), allow({"user00003"}));
    const auto json = render_report(report, ReportFormat::Json);
    EXPECT_EQ(report_from_json(json), report);
    EXPECT_EQ(render_report(report_from_json(json), ReportFormat::Json), json);
    EXPECT_EQ(render_report(assemble_report(in), ReportFormat::Json), render_report(assemble_report(in), ReportFormat::Json));

    auto no_sentiment = report;
    no_sentiment.sentiment.reset();
    EXPECT_EQ(report_from_json(render_report(no_sentiment, ReportFormat::Json)), no_sentiment);
    EXPECT_THROW(report_from_json("{}"), ParseError);
    EXPECT_EQ(parse_report_format("text"), ReportFormat::Text);
    EXPECT_THROW(parse_report_format("pdf"), ConfigError);
}

} // namespace
} // namespace snsgraph
