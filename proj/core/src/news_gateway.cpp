#include "foresight/news_gateway.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <unordered_map>

#include "foresight/errors.hpp"

namespace foresight {

std::vector<std::string> tokenize_words(const std::string& text) {
    std::vector<std::string> out;
    std::string word;
    for (char c : text) {
        const auto uc = static_cast<unsigned char>(c);
        if (std::isalnum(uc)) {
            word.push_back(static_cast<char>(std::tolower(uc)));
        } else if (!word.empty()) {
            out.push_back(std::move(word));
            word.clear();
        }
    }
    if (!word.empty()) out.push_back(std::move(word));
    return out;
}

std::vector<double> TfIdfScorer::score(const std::string& query,
                                       const std::vector<std::string>& docs) const {
    const std::size_t n = docs.size();
    std::vector<std::unordered_map<std::string, double>> tf(n);
    std::unordered_map<std::string, std::size_t> df;
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& tok : tokenize_words(docs[i])) tf[i][tok] += 1.0;
        for (const auto& [tok, cnt] : tf[i]) df[tok] += 1;
    }
    // Smoothed IDF keeps every weight positive, so cosine lands in [0,1].
    auto idf = [&](const std::string& tok) {
        const auto it = df.find(tok);
        const double d = it == df.end() ? 0.0 : static_cast<double>(it->second);
        return std::log((1.0 + static_cast<double>(n)) / (1.0 + d)) + 1.0;
    };

    std::unordered_map<std::string, double> qv;
    for (const auto& tok : tokenize_words(query)) qv[tok] += 1.0;
    double qnorm = 0.0;
    for (auto& [tok, w] : qv) {
        w *= idf(tok);
        qnorm += w * w;
    }
    qnorm = std::sqrt(qnorm);

    std::vector<double> scores(n, 0.0);
    if (qnorm == 0.0) return scores;
    for (std::size_t i = 0; i < n; ++i) {
        double dot = 0.0, dnorm = 0.0;
        for (const auto& [tok, cnt] : tf[i]) {
            const double w = cnt * idf(tok);
            dnorm += w * w;
            const auto it = qv.find(tok);
            if (it != qv.end()) dot += w * it->second;
        }
        if (dnorm > 0.0) scores[i] = dot / (std::sqrt(dnorm) * qnorm);
    }
    return scores;
}

namespace {

std::string expand_slug(const std::string& slug) {
    std::string s = slug;
    std::replace(s.begin(), s.end(), '-', ' ');
    std::replace(s.begin(), s.end(), '_', ' ');
    return s;
}

std::string trend_doc_text(const TrendRecord& t) {
    std::string doc = t.summary;
    for (const auto& tag : t.topic_tags) {
        doc += " ";
        doc += expand_slug(tag);
    }
    return doc;
}

std::string trend_dedup_key(const TrendRecord& t) {
    return t.summary + "\x1f" + t.window_start.to_string() + "\x1f" + t.window_end.to_string();
}

std::string joined_tags(const TrendRecord& t) {
    std::string s;
    for (const auto& tag : t.topic_tags) {
        s += tag;
        s += ",";
    }
    return s;
}

}  // namespace

FixtureNewsGateway::FixtureNewsGateway(std::unique_ptr<RelevanceScorer> scorer)
    : scorer_(scorer ? std::move(scorer) : std::make_unique<TfIdfScorer>()) {}

std::size_t FixtureNewsGateway::ingest_trends(const std::vector<TrendRecord>& records) {
    std::string problems;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto violations = validate(records[i]);
        for (const auto& v : violations) {
            problems += fmt::format("record {}: {}; ", i, v);
        }
    }
    if (!problems.empty()) throw ValidationFailed("ingest_trends: " + problems);

    std::set<std::string> seen;
    for (const auto& t : trends_) seen.insert(trend_dedup_key(t));
    std::size_t added = 0;
    for (const auto& r : records) {
        if (seen.insert(trend_dedup_key(r)).second) {
            trends_.push_back(r);
            ++added;
        }
    }
    return added;
}

std::size_t FixtureNewsGateway::add_headlines(const std::vector<SourceHeadline>& headlines) {
    std::string problems;
    for (std::size_t i = 0; i < headlines.size(); ++i) {
        for (const auto& v : validate(headlines[i])) {
            problems += fmt::format("record {}: {}; ", i, v);
        }
    }
    if (!problems.empty()) throw ValidationFailed("add_headlines: " + problems);

    std::set<std::string> seen;
    for (const auto& h : headlines_) {
        seen.insert(h.headline + "\x1f" + h.published.to_string() + "\x1f" + h.origin);
    }
    std::size_t added = 0;
    for (const auto& h : headlines) {
        if (seen.insert(h.headline + "\x1f" + h.published.to_string() + "\x1f" + h.origin).second) {
            headlines_.push_back(h);
            ++added;
        }
    }
    return added;
}

std::size_t FixtureNewsGateway::load_trends_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionViolation("trend fixture not readable: " + path.string());
    std::vector<TrendRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            records.push_back(json::parse(line).get<TrendRecord>());
        } catch (const json::exception& e) {
            throw ValidationFailed(fmt::format("{}:{}: {}", path.string(), lineno, e.what()));
        }
    }
    return ingest_trends(records);
}

std::size_t FixtureNewsGateway::load_headlines_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionViolation("headline fixture not readable: " + path.string());
    std::vector<SourceHeadline> headlines;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            headlines.push_back(json::parse(line).get<SourceHeadline>());
        } catch (const json::exception& e) {
            throw ValidationFailed(fmt::format("{}:{}: {}", path.string(), lineno, e.what()));
        }
    }
    return add_headlines(headlines);
}

std::vector<ScoredTrend> FixtureNewsGateway::relevant_trends(const Topic& topic, int limit) {
    if (limit < 1) throw PreconditionViolation("relevant_trends: limit must be ≥ 1");
    if (trends_.empty()) throw EmptyStore("relevant_trends: no trends ingested");

    const std::string query = topic.name + " " + expand_slug(topic.slug);
    std::vector<std::string> docs;
    docs.reserve(trends_.size());
    for (const auto& t : trends_) docs.push_back(trend_doc_text(t));
    const std::vector<double> scores = scorer_->score(query, docs);

    std::vector<ScoredTrend> out;
    for (std::size_t i = 0; i < trends_.size(); ++i) {
        if (scores[i] > 0.0) out.push_back({trends_[i], scores[i]});
    }
    std::sort(out.begin(), out.end(), [](const ScoredTrend& a, const ScoredTrend& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.item.window_end != b.item.window_end) return a.item.window_end > b.item.window_end;
        const std::string ta = joined_tags(a.item), tb = joined_tags(b.item);
        if (ta != tb) return ta < tb;
        return a.item.summary < b.item.summary;
    });
    if (out.size() > static_cast<std::size_t>(limit)) out.resize(static_cast<std::size_t>(limit));
    return out;
}

std::vector<SourceHeadline> FixtureNewsGateway::search_sources(const std::string& query, Date start,
                                                               Date end, int limit) {
    if (query.empty()) throw PreconditionViolation("search_sources: query must be non-empty");
    if (start > end) throw PreconditionViolation("search_sources: start must be ≤ end");
    if (limit < 1) throw PreconditionViolation("search_sources: limit must be ≥ 1");
    if (headlines_.empty()) throw EmptyStore("search_sources: no headline fixtures loaded");

    std::vector<const SourceHeadline*> in_window;
    for (const auto& h : headlines_) {
        if (h.published >= start && h.published <= end) in_window.push_back(&h);
    }
    std::vector<std::string> docs;
    docs.reserve(in_window.size());
    for (const auto* h : in_window) docs.push_back(h->headline);
    const std::vector<double> scores = scorer_->score(query, docs);

    std::vector<ScoredHeadline> scored;
    for (std::size_t i = 0; i < in_window.size(); ++i) {
        if (scores[i] > 0.0) scored.push_back({*in_window[i], scores[i]});
    }
    std::sort(scored.begin(), scored.end(), [](const ScoredHeadline& a, const ScoredHeadline& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.item.published != b.item.published) return a.item.published > b.item.published;
        return a.item.headline < b.item.headline;
    });
    if (scored.size() > static_cast<std::size_t>(limit))
        scored.resize(static_cast<std::size_t>(limit));

    std::vector<SourceHeadline> out;
    out.reserve(scored.size());
    for (auto& s : scored) out.push_back(std::move(s.item));
    return out;
}

}  // namespace foresight
