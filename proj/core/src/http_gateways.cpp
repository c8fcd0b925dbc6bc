#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "foresight/http_gateways.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "foresight/errors.hpp"
#include "httplib.h"

namespace foresight {

namespace {

// Splits "https://host:port/path" into the client origin and path prefix.
std::pair<std::string, std::string> split_base_url(const std::string& base_url) {
    const auto scheme_end = base_url.find("://");
    const std::size_t host_start = scheme_end == std::string::npos ? 0 : scheme_end + 3;
    const auto path_start = base_url.find('/', host_start);
    if (path_start == std::string::npos) return {base_url, ""};
    std::string prefix = base_url.substr(path_start);
    while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
    return {base_url.substr(0, path_start), prefix};
}

std::string env_or_empty(const std::string& var) {
    const char* v = std::getenv(var.c_str());
    return v ? v : "";
}

int retry_after_seconds(const httplib::Response& res) {
    if (!res.has_header("Retry-After")) return 1;
    try {
        return std::max(1, std::stoi(res.get_header_value("Retry-After")));
    } catch (const std::exception&) {
        return 1;
    }
}

}  // namespace

HttpLlmGateway::HttpLlmGateway(LlmProviderConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.base_url.empty()) throw PreconditionViolation("llm provider base_url not configured");
    if (cfg_.model.empty()) throw PreconditionViolation("llm provider model not configured");
}

ProviderLimits HttpLlmGateway::limits() const {
    return {cfg_.min_temperature, cfg_.min_top_p, cfg_.max_top_alternatives};
}

Completion HttpLlmGateway::parse_response(const json& body, const std::string& fingerprint) {
    if (!body.contains("choices") || body["choices"].empty()) {
        throw MalformedCompletion("provider response has no choices");
    }
    const json& choice = body["choices"][0];
    if (!choice.contains("logprobs") || choice["logprobs"].is_null() ||
        !choice["logprobs"].contains("content") || choice["logprobs"]["content"].is_null()) {
        throw MissingLogprobs("provider returned no token logprobs; enable logprobs support");
    }

    Completion c;
    c.request_fingerprint = fingerprint;
    for (const json& entry : choice["logprobs"]["content"]) {
        TokenPosition pos;
        pos.chosen_token = entry.at("token").get<std::string>();
        const double chosen_lp = entry.at("logprob").get<double>();
        if (entry.contains("top_logprobs") && entry["top_logprobs"].is_array()) {
            for (const json& alt : entry["top_logprobs"]) {
                pos.alternatives.push_back(
                    {alt.at("token").get<std::string>(), alt.at("logprob").get<double>()});
            }
        }
        // Some providers return logprobs only for the chosen token; degrade
        // to a single-alternative position instead of failing.
        if (pos.alternatives.empty()) {
            pos.alternatives.push_back({pos.chosen_token, chosen_lp});
        }
        std::stable_sort(pos.alternatives.begin(), pos.alternatives.end(),
                         [](const TokenAlternative& a, const TokenAlternative& b) {
                             return a.logprob > b.logprob;
                         });
        const bool chosen_present =
            std::any_of(pos.alternatives.begin(), pos.alternatives.end(),
                        [&](const TokenAlternative& a) { return a.token == pos.chosen_token; });
        if (!chosen_present) pos.alternatives.push_back({pos.chosen_token, chosen_lp});
        c.full_text += pos.chosen_token;
        c.positions.push_back(std::move(pos));
    }
    if (c.positions.empty()) throw MissingLogprobs("provider returned an empty logprob stream");
    return c;
}

Completion HttpLlmGateway::complete(const std::string& prompt, const DecodingParams& params) {
    if (prompt.empty()) throw PreconditionViolation("complete: prompt must be non-empty");
    if (auto v = validate(params); !v.empty()) {
        throw PreconditionViolation("complete: invalid decoding params: " + v.front());
    }

    const auto [origin, prefix] = split_base_url(cfg_.base_url);
    const std::string key = env_or_empty(cfg_.api_key_env);
    if (key.empty()) {
        throw PreconditionViolation("missing API key: set " + cfg_.api_key_env);
    }

    const json request = {
        {"model", cfg_.model},
        {"messages", json::array({{{"role", "user"}, {"content", prompt}}})},
        {"temperature", params.temperature},
        {"top_p", params.top_p},
        {"max_tokens", params.max_tokens},
        {"logprobs", true},
        {"top_logprobs", params.top_alternatives},
    };
    const std::string fingerprint = request_fingerprint(prompt, params);

    httplib::Client client(origin);
    client.set_connection_timeout(15);
    client.set_read_timeout(120);
    httplib::Headers headers = {{"Authorization", "Bearer " + key}};

    std::string last_failure = "unknown";
    for (int attempt = 0; attempt <= cfg_.max_retries; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(std::chrono::milliseconds(500 << (attempt - 1)));
        }
        auto res = client.Post(prefix + "/chat/completions", headers, request.dump(),
                               "application/json");
        if (!res) {
            last_failure = fmt::format("transport: {}", httplib::to_string(res.error()));
            continue;
        }
        if (res->status == 429) {
            const int hint = retry_after_seconds(*res);
            if (attempt == cfg_.max_retries) {
                throw RateLimited("provider rate limit persisted after retries", hint);
            }
            std::this_thread::sleep_for(std::chrono::seconds(hint));
            continue;
        }
        if (res->status >= 500) {
            last_failure = fmt::format("provider status {}", res->status);
            continue;
        }
        if (res->status != 200) {
            throw TransportError(fmt::format("provider rejected request: status {} body {:.200}",
                                             res->status, res->body));
        }
        json body;
        try {
            body = json::parse(res->body);
        } catch (const json::exception& e) {
            throw MalformedCompletion(fmt::format("provider returned invalid JSON: {}", e.what()));
        }
        Completion c = parse_response(body, fingerprint);
        c.provider_name = name();
        return c;
    }
    throw TransportError(fmt::format("provider unreachable after {} retries ({})",
                                     cfg_.max_retries, last_failure));
}

HttpNewsGateway::HttpNewsGateway(NewsProviderConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.base_url.empty()) throw PreconditionViolation("news provider base_url not configured");
}

std::vector<ScoredTrend> HttpNewsGateway::relevant_trends(const Topic&, int) {
    // Trends are precomputed records ingested offline; a live trend service
    // is not part of the wire protocol.
    throw ProviderUnavailable("live news provider does not serve trend records; ingest fixtures");
}

std::vector<SourceHeadline> HttpNewsGateway::search_sources(const std::string& query, Date start,
                                                            Date end, int limit) {
    if (query.empty()) throw PreconditionViolation("search_sources: query must be non-empty");
    if (start > end) throw PreconditionViolation("search_sources: start must be ≤ end");
    if (limit < 1) throw PreconditionViolation("search_sources: limit must be ≥ 1");

    const auto [origin, prefix] = split_base_url(cfg_.base_url);
    httplib::Client client(origin);
    client.set_connection_timeout(15);
    client.set_read_timeout(60);
    httplib::Headers headers;
    const std::string key = env_or_empty(cfg_.api_key_env);
    if (!key.empty()) headers.emplace("Authorization", "Bearer " + key);

    httplib::Params params{{"q", query},
                           {"from", start.to_string()},
                           {"to", end.to_string()},
                           {"limit", std::to_string(limit)}};

    for (int attempt = 0; attempt <= cfg_.max_retries; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(std::chrono::milliseconds(500 << (attempt - 1)));
        }
        auto res = client.Get(prefix + "/search", params, headers);
        if (!res || res->status >= 500 || res->status == 429) continue;
        if (res->status != 200) {
            throw ProviderUnavailable(fmt::format("news provider status {}", res->status));
        }
        try {
            const json body = json::parse(res->body);
            std::vector<SourceHeadline> out;
            for (const json& a : body.at("articles")) out.push_back(a.get<SourceHeadline>());
            return out;
        } catch (const json::exception& e) {
            throw ProviderUnavailable(fmt::format("news provider returned invalid JSON: {}",
                                                  e.what()));
        }
    }
    throw ProviderUnavailable("news provider unreachable after retries");
}

}  // namespace foresight
