#include "foresight/llm_gateway.hpp"

#include <fmt/core.h>

#include <cmath>
#include <fstream>

#include "foresight/errors.hpp"
#include "foresight/hashing.hpp"

namespace foresight {

std::vector<std::string> validate(const DecodingParams& p) {
    std::vector<std::string> v;
    if (!(p.temperature >= 0.0)) v.push_back("temperature ≥ 0");
    if (!(p.top_p > 0.0 && p.top_p <= 1.0)) v.push_back("0 < top_p ≤ 1");
    if (p.max_tokens < 1) v.push_back("max_tokens ≥ 1");
    if (p.top_alternatives < 1) v.push_back("top_alternatives ≥ 1");
    return v;
}

std::vector<std::string> validate(const Completion& c) {
    std::vector<std::string> v;
    std::string joined;
    for (const auto& pos : c.positions) {
        joined += pos.chosen_token;
        if (pos.alternatives.empty()) {
            v.push_back("alternatives non-empty");
            continue;
        }
        bool chosen_found = false;
        double prev = std::numeric_limits<double>::infinity();
        for (const auto& alt : pos.alternatives) {
            if (alt.token == pos.chosen_token) chosen_found = true;
            if (!std::isfinite(alt.logprob)) v.push_back("logprob finite");
            if (alt.logprob > prev) {
                v.push_back("alternatives sorted descending by logprob");
                break;
            }
            prev = alt.logprob;
        }
        if (!chosen_found) v.push_back("chosen_token appears among alternatives");
    }
    if (joined != c.full_text) v.push_back("concatenation of chosen tokens equals full_text");
    return v;
}

void to_json(json& j, const TokenPosition& p) {
    json alts = json::array();
    for (const auto& a : p.alternatives) alts.push_back({{"token", a.token}, {"logprob", a.logprob}});
    j = json{{"chosen_token", p.chosen_token}, {"alternatives", alts}};
}

void from_json(const json& j, TokenPosition& p) {
    p.chosen_token = j.at("chosen_token").get<std::string>();
    p.alternatives.clear();
    for (const auto& a : j.at("alternatives")) {
        p.alternatives.push_back({a.at("token").get<std::string>(), a.at("logprob").get<double>()});
    }
}

void to_json(json& j, const Completion& c) {
    j = json{{"full_text", c.full_text},
             {"positions", c.positions},
             {"provider_name", c.provider_name},
             {"request_fingerprint", c.request_fingerprint}};
}

void from_json(const json& j, Completion& c) {
    c.full_text = j.at("full_text").get<std::string>();
    c.positions = j.at("positions").get<std::vector<TokenPosition>>();
    c.provider_name = j.at("provider_name").get<std::string>();
    c.request_fingerprint = j.at("request_fingerprint").get<std::string>();
}

std::string request_fingerprint(const std::string& prompt, const DecodingParams& params) {
    const std::string material =
        fmt::format("{}\x1ftemperature={:.17g}\x1ftop_p={:.17g}\x1fmax_tokens={}\x1ftop_alternatives={}",
                    prompt, params.temperature, params.top_p, params.max_tokens,
                    params.top_alternatives);
    return short_hash(material, 24);
}

DecodingParams LlmGateway::deterministic_params() const {
    const ProviderLimits lim = limits();
    DecodingParams p;
    p.temperature = lim.min_temperature;
    p.top_p = lim.min_top_p;
    p.top_alternatives = lim.max_top_alternatives;
    return p;
}

MockLlmGateway::MockLlmGateway(std::filesystem::path fixtures_dir) : dir_(std::move(fixtures_dir)) {
    if (!std::filesystem::is_directory(dir_)) {
        throw PreconditionViolation("mock fixtures directory not found: " + dir_.string());
    }
}

Completion MockLlmGateway::complete(const std::string& prompt, const DecodingParams& params) {
    if (prompt.empty()) throw PreconditionViolation("complete: prompt must be non-empty");
    if (auto v = validate(params); !v.empty()) {
        throw PreconditionViolation("complete: invalid decoding params: " + v.front());
    }
    const std::string fp = request_fingerprint(prompt, params);
    const auto path = dir_ / (fp + ".json");
    std::ifstream in(path);
    if (!in) {
        throw MissingFixture(fmt::format("no mock fixture for fingerprint {} (prompt starts: {:.60})",
                                         fp, prompt));
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw MalformedCompletion(fmt::format("fixture {} is not valid JSON: {}", path.string(),
                                              e.what()));
    }
    Completion c = j.get<Completion>();
    if (auto v = validate(c); !v.empty()) {
        throw MalformedCompletion(fmt::format("fixture {} violates: {}", path.string(), v.front()));
    }
    return c;
}

std::filesystem::path MockLlmGateway::script(const std::filesystem::path& fixtures_dir,
                                             const std::string& prompt,
                                             const DecodingParams& params, Completion completion) {
    completion.provider_name = "mock";
    completion.request_fingerprint = request_fingerprint(prompt, params);
    if (auto v = validate(completion); !v.empty()) {
        throw PreconditionViolation("scripted completion violates: " + v.front());
    }
    std::filesystem::create_directories(fixtures_dir);
    const auto path = fixtures_dir / (completion.request_fingerprint + ".json");
    std::ofstream out(path);
    out << json(completion).dump(2) << "\n";
    if (!out) throw WriteFailed("could not write fixture " + path.string());
    return path;
}

std::vector<TokenPosition> tokenize_around(const std::string& full_text, const std::string& token,
                                           std::size_t from) {
    const auto pos = full_text.find(token, from);
    std::vector<TokenPosition> out;
    auto push = [&](const std::string& text) {
        if (!text.empty()) out.push_back({text, {{text, -0.01}}});
    };
    if (pos == std::string::npos || token.empty()) {
        push(full_text);
        return out;
    }
    push(full_text.substr(0, pos));
    push(token);
    push(full_text.substr(pos + token.size()));
    return out;
}

Completion trivial_completion(const std::string& text) {
    Completion c;
    c.full_text = text;
    c.positions = {{text, {{text, -0.01}}}};
    return c;
}

}  // namespace foresight
