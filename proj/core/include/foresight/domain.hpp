#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foresight/date.hpp"
#include "json.hpp"

namespace foresight {

using json = nlohmann::json;

struct Topic {
    std::string name;  // display name, e.g. "Automotive"
    std::string slug;  // stable lowercase URL-safe identifier
};

struct TrendRecord {
    std::string summary;
    std::vector<std::string> topic_tags;
    std::int64_t source_count = 0;
    Date window_start;
    Date window_end;
};

struct SourceHeadline {
    std::string headline;
    Date published;
    std::string origin;
};

struct ForecastSpec {
    std::string id;
    std::string topic;  // Topic slug
    std::string title;
    std::string description;
    Date timeframe_start;
    Date timeframe_end;
    Date created_at;
};

// One candidate probability value paired with the logprob of its token.
struct ProbabilityGuess {
    double value = 0.0;    // P_i, in [0,1]
    double logprob = 0.0;  // w_i, finite
};

struct EstimateResult {
    std::string forecast_id;
    double p_hat = 0.0;
    double u_hat = 0.0;
    std::vector<ProbabilityGuess> guesses;
    std::vector<std::string> positive_trends;
    std::vector<std::string> negative_trends;
    Date estimated_at;
};

enum class Verdict { DidNotHappen = -1, Inconclusive = 0, Happened = 1 };

int verdict_code(Verdict v);
Verdict verdict_from_code(int code);              // throws on unknown code
std::string verdict_label(Verdict v);             // "happened" | "inconclusive" | "did_not_happen"
Verdict verdict_from_label(const std::string&);   // throws on unknown label

struct OutcomeRecord {
    std::string forecast_id;
    Verdict verdict = Verdict::Inconclusive;
    Date checked_at;
    std::optional<int> binary_outcome;  // present iff verdict is conclusive
};

// Invariant validation. Returns the list of violated invariants, each named
// by its rule; an empty list means the record is valid. Never throws.
std::vector<std::string> validate(const Topic&);
std::vector<std::string> validate(const TrendRecord&);
std::vector<std::string> validate(const SourceHeadline&);
std::vector<std::string> validate(const ForecastSpec&);
std::vector<std::string> validate(const ProbabilityGuess&);
std::vector<std::string> validate(const EstimateResult&);
std::vector<std::string> validate(const OutcomeRecord&);

// Canonical serialization: one JSON object per record, snake_case fields.
void to_json(json& j, const Topic&);
void from_json(const json& j, Topic&);
void to_json(json& j, const TrendRecord&);
void from_json(const json& j, TrendRecord&);
void to_json(json& j, const SourceHeadline&);
void from_json(const json& j, SourceHeadline&);
void to_json(json& j, const ForecastSpec&);
void from_json(const json& j, ForecastSpec&);
void to_json(json& j, const ProbabilityGuess&);
void from_json(const json& j, ProbabilityGuess&);
void to_json(json& j, const EstimateResult&);
void from_json(const json& j, EstimateResult&);
void to_json(json& j, const OutcomeRecord&);
void from_json(const json& j, OutcomeRecord&);

// Deterministic forecast identifier: content hash of (topic, title, timeframe).
std::string forecast_id_for(const std::string& topic_slug, const std::string& title,
                            Date timeframe_start, Date timeframe_end);

// Lowercase URL-safe slug of a display name ("Climate Change" -> "climate-change").
std::string slugify(const std::string& name);

}  // namespace foresight
