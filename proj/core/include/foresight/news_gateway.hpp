#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "foresight/domain.hpp"

namespace foresight {

template <typename Item>
struct RelevanceScored {
    Item item;
    double score = 0.0;  // in [0,1]
};

using ScoredTrend = RelevanceScored<TrendRecord>;
using ScoredHeadline = RelevanceScored<SourceHeadline>;

// Pluggable query/document relevance. Scores are normalized to [0,1].
class RelevanceScorer {
  public:
    virtual ~RelevanceScorer() = default;
    virtual std::vector<double> score(const std::string& query,
                                      const std::vector<std::string>& docs) const = 0;
};

// Default scorer: cosine similarity between TF-IDF term vectors of the query
// and each document. IDF statistics come from the document set itself.
class TfIdfScorer : public RelevanceScorer {
  public:
    std::vector<double> score(const std::string& query,
                              const std::vector<std::string>& docs) const override;
};

// Lowercased alphanumeric word tokens; shared by the scorer and its tests.
std::vector<std::string> tokenize_words(const std::string& text);

class NewsGateway {
  public:
    virtual ~NewsGateway() = default;

    // At most `limit` trends relevant to the topic, best first. Ties break by
    // recency (later window_end first), then tag order, then summary.
    // Zero-relevance trends are filtered out.
    virtual std::vector<ScoredTrend> relevant_trends(const Topic& topic, int limit) = 0;

    // Headlines published within [start, end], most relevant first.
    virtual std::vector<SourceHeadline> search_sources(const std::string& query, Date start,
                                                       Date end, int limit) = 0;
};

// Offline store over ingested trend records and headline fixtures.
class FixtureNewsGateway : public NewsGateway {
  public:
    explicit FixtureNewsGateway(std::unique_ptr<RelevanceScorer> scorer = nullptr);

    // Validates and stores records; duplicates (identical summary + window)
    // are dropped. Returns the number of records actually added.
    std::size_t ingest_trends(const std::vector<TrendRecord>& records);
    std::size_t add_headlines(const std::vector<SourceHeadline>& headlines);

    // JSONL fixture files, one record per line.
    std::size_t load_trends_jsonl(const std::filesystem::path& path);
    std::size_t load_headlines_jsonl(const std::filesystem::path& path);

    std::vector<ScoredTrend> relevant_trends(const Topic& topic, int limit) override;
    std::vector<SourceHeadline> search_sources(const std::string& query, Date start, Date end,
                                               int limit) override;

    std::size_t trend_count() const { return trends_.size(); }
    std::size_t headline_count() const { return headlines_.size(); }

  private:
    std::unique_ptr<RelevanceScorer> scorer_;
    std::vector<TrendRecord> trends_;
    std::vector<SourceHeadline> headlines_;
};

}  // namespace foresight
