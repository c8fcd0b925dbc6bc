#include "foresight/domain.hpp"

#include <cctype>
#include <cmath>

#include "foresight/errors.hpp"
#include "foresight/hashing.hpp"

namespace foresight {

namespace {

Date date_field(const json& j, const char* key) {
    auto parsed = Date::parse(j.at(key).get<std::string>());
    if (!parsed) throw ValidationFailed(std::string("bad date in field '") + key + "'");
    return *parsed;
}

bool is_slug(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!(std::islower(static_cast<unsigned char>(c)) ||
              std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '_'))
            return false;
    }
    return true;
}

}  // namespace

int verdict_code(Verdict v) { return static_cast<int>(v); }

Verdict verdict_from_code(int code) {
    switch (code) {
        case 1: return Verdict::Happened;
        case 0: return Verdict::Inconclusive;
        case -1: return Verdict::DidNotHappen;
    }
    throw ValidationFailed("unknown verdict code " + std::to_string(code));
}

std::string verdict_label(Verdict v) {
    switch (v) {
        case Verdict::Happened: return "happened";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::DidNotHappen: return "did_not_happen";
    }
    throw ValidationFailed("unknown verdict value");
}

Verdict verdict_from_label(const std::string& label) {
    if (label == "happened") return Verdict::Happened;
    if (label == "inconclusive") return Verdict::Inconclusive;
    if (label == "did_not_happen") return Verdict::DidNotHappen;
    throw ValidationFailed("unknown verdict label '" + label + "'");
}

std::vector<std::string> validate(const Topic& t) {
    std::vector<std::string> v;
    if (t.name.empty()) v.push_back("name non-empty");
    if (!is_slug(t.slug)) v.push_back("slug lowercase, URL-safe");
    return v;
}

std::vector<std::string> validate(const TrendRecord& t) {
    std::vector<std::string> v;
    if (t.summary.empty()) v.push_back("summary non-empty");
    if (t.source_count < 0) v.push_back("source_count ≥ 0");
    if (!(t.window_start <= t.window_end)) v.push_back("window_start ≤ window_end");
    for (const auto& tag : t.topic_tags) {
        if (!is_slug(tag)) {
            v.push_back("topic_tags are slugs");
            break;
        }
    }
    return v;
}

std::vector<std::string> validate(const SourceHeadline& h) {
    std::vector<std::string> v;
    if (h.headline.empty()) v.push_back("headline non-empty");
    return v;
}

std::vector<std::string> validate(const ForecastSpec& f) {
    std::vector<std::string> v;
    if (f.id.empty()) v.push_back("id non-empty");
    if (!is_slug(f.topic)) v.push_back("topic is a slug");
    if (f.title.empty()) v.push_back("title non-empty");
    if (f.description.empty()) v.push_back("description non-empty");
    if (!(f.timeframe_start < f.timeframe_end)) v.push_back("timeframe_start < timeframe_end");
    if (!(f.created_at <= f.timeframe_end)) v.push_back("created_at ≤ timeframe_end");
    return v;
}

std::vector<std::string> validate(const ProbabilityGuess& g) {
    std::vector<std::string> v;
    if (!(g.value >= 0.0)) v.push_back("value ≥ 0");
    if (!(g.value <= 1.0)) v.push_back("value ≤ 1");
    if (!std::isfinite(g.logprob)) v.push_back("logprob finite");
    return v;
}

std::vector<std::string> validate(const EstimateResult& e) {
    std::vector<std::string> v;
    if (e.forecast_id.empty()) v.push_back("forecast_id non-empty");
    if (e.guesses.empty()) {
        v.push_back("guesses non-empty");
        return v;
    }
    double lo = 1.0, hi = 0.0;
    for (const auto& g : e.guesses) {
        lo = std::min(lo, g.value);
        hi = std::max(hi, g.value);
    }
    if (!(e.p_hat >= lo && e.p_hat <= hi)) v.push_back("min(guesses) ≤ p_hat ≤ max(guesses)");
    if (!(e.u_hat >= 0.0)) v.push_back("u_hat ≥ 0");
    return v;
}

std::vector<std::string> validate(const OutcomeRecord& o) {
    std::vector<std::string> v;
    if (o.forecast_id.empty()) v.push_back("forecast_id non-empty");
    switch (o.verdict) {
        case Verdict::Happened:
            if (!o.binary_outcome || *o.binary_outcome != 1)
                v.push_back("binary_outcome = 1 iff verdict = happened");
            break;
        case Verdict::DidNotHappen:
            if (!o.binary_outcome || *o.binary_outcome != 0)
                v.push_back("binary_outcome = 0 iff verdict = did_not_happen");
            break;
        case Verdict::Inconclusive:
            if (o.binary_outcome) v.push_back("binary_outcome absent iff verdict = inconclusive");
            break;
    }
    return v;
}

void to_json(json& j, const Topic& t) { j = json{{"name", t.name}, {"identifier", t.slug}}; }
void from_json(const json& j, Topic& t) {
    t.name = j.at("name").get<std::string>();
    t.slug = j.at("identifier").get<std::string>();
}

void to_json(json& j, const TrendRecord& t) {
    j = json{{"summary", t.summary},
             {"topic_tags", t.topic_tags},
             {"source_count", t.source_count},
             {"window_start", t.window_start.to_string()},
             {"window_end", t.window_end.to_string()}};
}
void from_json(const json& j, TrendRecord& t) {
    t.summary = j.at("summary").get<std::string>();
    t.topic_tags = j.at("topic_tags").get<std::vector<std::string>>();
    t.source_count = j.at("source_count").get<std::int64_t>();
    t.window_start = date_field(j, "window_start");
    t.window_end = date_field(j, "window_end");
}

void to_json(json& j, const SourceHeadline& h) {
    j = json{{"headline", h.headline},
             {"published", h.published.to_string()},
             {"origin", h.origin}};
}
void from_json(const json& j, SourceHeadline& h) {
    h.headline = j.at("headline").get<std::string>();
    h.published = date_field(j, "published");
    h.origin = j.at("origin").get<std::string>();
}

void to_json(json& j, const ForecastSpec& f) {
    j = json{{"id", f.id},
             {"topic", f.topic},
             {"title", f.title},
             {"description", f.description},
             {"timeframe_start", f.timeframe_start.to_string()},
             {"timeframe_end", f.timeframe_end.to_string()},
             {"created_at", f.created_at.to_string()}};
}
void from_json(const json& j, ForecastSpec& f) {
    f.id = j.at("id").get<std::string>();
    f.topic = j.at("topic").get<std::string>();
    f.title = j.at("title").get<std::string>();
    f.description = j.at("description").get<std::string>();
    f.timeframe_start = date_field(j, "timeframe_start");
    f.timeframe_end = date_field(j, "timeframe_end");
    f.created_at = date_field(j, "created_at");
}

void to_json(json& j, const ProbabilityGuess& g) {
    j = json{{"value", g.value}, {"logprob", g.logprob}};
}
void from_json(const json& j, ProbabilityGuess& g) {
    g.value = j.at("value").get<double>();
    g.logprob = j.at("logprob").get<double>();
}

void to_json(json& j, const EstimateResult& e) {
    j = json{{"forecast_id", e.forecast_id},
             {"p_hat", e.p_hat},
             {"u_hat", e.u_hat},
             {"guesses", e.guesses},
             {"positive_trends", e.positive_trends},
             {"negative_trends", e.negative_trends},
             {"estimated_at", e.estimated_at.to_string()}};
}
void from_json(const json& j, EstimateResult& e) {
    e.forecast_id = j.at("forecast_id").get<std::string>();
    e.p_hat = j.at("p_hat").get<double>();
    e.u_hat = j.at("u_hat").get<double>();
    e.guesses = j.at("guesses").get<std::vector<ProbabilityGuess>>();
    e.positive_trends = j.at("positive_trends").get<std::vector<std::string>>();
    e.negative_trends = j.at("negative_trends").get<std::vector<std::string>>();
    e.estimated_at = date_field(j, "estimated_at");
}

void to_json(json& j, const OutcomeRecord& o) {
    j = json{{"forecast_id", o.forecast_id},
             {"verdict", verdict_label(o.verdict)},
             {"checked_at", o.checked_at.to_string()}};
    if (o.binary_outcome) j["binary_outcome"] = *o.binary_outcome;
}
void from_json(const json& j, OutcomeRecord& o) {
    o.forecast_id = j.at("forecast_id").get<std::string>();
    o.verdict = verdict_from_label(j.at("verdict").get<std::string>());
    o.checked_at = date_field(j, "checked_at");
    if (j.contains("binary_outcome")) {
        o.binary_outcome = j.at("binary_outcome").get<int>();
    } else {
        o.binary_outcome.reset();
    }
}

std::string forecast_id_for(const std::string& topic_slug, const std::string& title,
                            Date timeframe_start, Date timeframe_end) {
    const std::string material = topic_slug + "\n" + title + "\n" + timeframe_start.to_string() +
                                 "\n" + timeframe_end.to_string();
    return short_hash(material, 16);
}

std::string slugify(const std::string& name) {
    std::string out;
    out.reserve(name.size());
    bool last_dash = true;  // suppress leading dash
    for (char c : name) {
        const auto uc = static_cast<unsigned char>(c);
        if (std::isalnum(uc)) {
            out.push_back(static_cast<char>(std::tolower(uc)));
            last_dash = false;
        } else if (!last_dash) {
            out.push_back('-');
            last_dash = true;
        }
    }
    while (!out.empty() && out.back() == '-') out.pop_back();
    return out;
}

}  // namespace foresight
