#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "snsgraph/error.hpp"
#include "snsgraph/ingest.hpp"

namespace snsgraph {
namespace {

InteractionRecord rec(std::string id, const char* author, std::vector<std::string> tags = {"ge2017"}) {
    InteractionRecord r;
    r.id = std::move(id);
    r.author = Handle(author);
    r.text = "text";
    r.hashtags = std::move(tags);
    return r;
}

TEST(RecordJson, ParsesOneLine) {
    const auto r = record_from_json(
        R"({"id":"1","author":"@Alice","text":"hi @bob","hashtags":["#GE2017"],"mentions":["bob"],)"
        R"("in_reply_to":null,"timestamp":"2017-05-01T10:00:00Z","extra":1})");
    EXPECT_EQ(r.id, "1");
    EXPECT_EQ(r.author, Handle("alice"));
    EXPECT_EQ(r.hashtags, std::vector<std::string>{"ge2017"});
    ASSERT_EQ(r.mentions.size(), 1u);
    EXPECT_EQ(r.mentions[0], Handle("bob"));
    EXPECT_FALSE(r.in_reply_to.has_value());
    EXPECT_TRUE(r.follows.empty());
}

TEST(RecordJson, RejectsBadStructure) {
    EXPECT_THROW(record_from_json("{not json"), ParseError);
    EXPECT_THROW(record_from_json(R"(["id"])"), ParseError);
    EXPECT_THROW(record_from_json(R"({"author":"a","text":"t"})"), ParseError);
    EXPECT_THROW(record_from_json(R"({"id":"1","author":"a b","text":"t"})"), ParseError);
    EXPECT_THROW(record_from_json(R"({"id":"1","author":"a","text":"t","mentions":"b"})"), ParseError);
}

TEST(RecordJson, RoundTrip) {
    for (const auto& r : testing::synthetic_corpus({.records = 200, .users = 50, .communities = 5}))
        EXPECT_EQ(record_from_json(record_to_json(r)), r);
}

TEST(ParseCorpus, SkipsAndReportsBadLines) {
    std::istringstream in(R"({"id":"1","author":"a","text":"x","hashtags":["ge2017"]}
{"id":"2","author":"b","text":"y"
{"id":"3","author":"c","text":"z"}

{"id":"4","author":"d","text":"w"}
)");
    const auto parsed = parse_corpus(in);
    EXPECT_EQ(parsed.records.size(), 3u);
    ASSERT_EQ(parsed.diagnostics.size(), 1u);
    EXPECT_EQ(parsed.diagnostics[0].line, 2u);
}

TEST(ParseCorpus, DuplicateIdsAreDiagnostics) {
    std::istringstream in("{\"id\":\"1\",\"author\":\"a\",\"text\":\"x\"}\n{\"id\":\"1\",\"author\":\"b\",\"text\":\"y\"}\n");
    const auto parsed = parse_corpus(in);
    EXPECT_EQ(parsed.records.size(), 1u);
    EXPECT_EQ(parsed.diagnostics.size(), 1u);
}

TEST(ParseCorpus, EmptyAndUnreadable) {
    std::istringstream empty("");
    EXPECT_THROW(parse_corpus(empty), EmptyCorpusError);
    std::istringstream junk("nope\n{}\n");
    EXPECT_THROW(parse_corpus(junk), EmptyCorpusError);
    EXPECT_THROW(parse_corpus_file("/nonexistent/corpus.jsonl"), IoError);
}

TEST(TopicFilter, Examples) {
    const TopicFilter filter({"ge2017"});
    std::vector<InteractionRecord> records{rec("1", "a"), rec("2", "b", {"brexit"}), rec("3", "c", {"GE2017"})};
    const auto kept = filter_topic(records, filter);
    ASSERT_EQ(kept.size(), 2u);
    EXPECT_EQ(kept[0].id, "1");
    EXPECT_EQ(kept[1].id, "3");
    EXPECT_THROW(TopicFilter({"#", ""}), ConfigError);
    EXPECT_EQ(TopicFilter::parse("#GE2017,brexit").tags().size(), 2u);
}

TEST(BuildGraph, Examples) {
    auto a_reply = rec("1", "a");
    a_reply.in_reply_to = Handle("b");
    auto a_mention = rec("2", "a");
    a_mention.mentions = {Handle("c")};
    auto b_follow = rec("3", "b");
    b_follow.follows = {Handle("c")};
    const auto built = build_graph({a_reply, a_mention, b_follow});
    const auto& g = built.graph;
    EXPECT_EQ(g.node_count(), 3u);
    EXPECT_EQ(g.edge_count(), 3u);
    EXPECT_EQ(g.weight(Handle("a"), Handle("b"), InteractionKind::Reply), 1u);
    EXPECT_EQ(g.weight(Handle("a"), Handle("c"), InteractionKind::Mention), 1u);
    EXPECT_EQ(g.weight(Handle("b"), Handle("c"), InteractionKind::Follow), 1u);

    auto again = rec("4", "a");
    again.mentions = {Handle("c")};
    EXPECT_EQ(build_graph({a_mention, again}).graph.weight(Handle("a"), Handle("c"), InteractionKind::Mention), 2u);

    auto self = rec("5", "a");
    self.mentions = {Handle("a")};
    const auto looped = build_graph({self});
    EXPECT_EQ(looped.graph.edge_count(), 0u);
    EXPECT_EQ(looped.graph.node_count(), 1u);
    EXPECT_EQ(looped.stats.self_loops_dropped, 1u);
}

TEST(BuildGraph, RetweetAddsMentionOnce) {
    EXPECT_EQ(retweeted_author("RT @UKLabour: Vote!"), Handle("uklabour"));
    EXPECT_FALSE(retweeted_author("ART @x").has_value());
    EXPECT_FALSE(retweeted_author("RT me").has_value());

    auto rt = rec("1", "a");
    rt.text = "RT @b: hello";
    auto built = build_graph({rt});
    EXPECT_EQ(built.graph.weight(Handle("a"), Handle("b"), InteractionKind::Mention), 1u);
    EXPECT_EQ(built.stats.retweet_mentions, 1u);

    rt.mentions = {Handle("b")};
    built = build_graph({rt});
    EXPECT_EQ(built.graph.weight(Handle("a"), Handle("b"), InteractionKind::Mention), 1u);
    EXPECT_EQ(built.stats.retweet_mentions, 0u);
}

class BuildGraphProperties : public ::testing::Test {
protected:
    std::vector<InteractionRecord> corpus =
        testing::synthetic_corpus({.records = 1500, .users = 300, .communities = 6, .seed = 21});
};

TEST_F(BuildGraphProperties, OrderInsensitive) {
    const auto reference = build_graph(corpus);
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 3; ++trial) {
        auto shuffled = corpus;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const auto built = build_graph(shuffled);
        EXPECT_EQ(built.graph, reference.graph);
        EXPECT_EQ(built.stats, reference.stats);
    }
}

TEST_F(BuildGraphProperties, CountsAndNodeBounds) {
    const auto built = build_graph(corpus);
    const auto& g = built.graph;
    EXPECT_EQ(g.total_weight(), built.stats.interactions());
    EXPECT_LE(g.node_count(), 1 + 2 * built.stats.interactions());

    std::set<Handle> authors, touched;
    for (const auto& r : corpus) authors.insert(r.author);
    for (const auto& [key, w] : g.edges()) {
        touched.insert(key.source);
        touched.insert(key.target);
    }
    for (const auto& node : g.nodes()) EXPECT_TRUE(authors.contains(node) || touched.contains(node)) << node.value();
}

} // namespace
} // namespace snsgraph
