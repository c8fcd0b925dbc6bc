#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "foresight/domain.hpp"

namespace foresight {

struct DecodingParams {
    double temperature = 0.0;
    double top_p = 0.01;       // in (0,1]
    int max_tokens = 1024;
    int top_alternatives = 20;  // alternative tokens requested per position
};

std::vector<std::string> validate(const DecodingParams&);

struct TokenAlternative {
    std::string token;
    double logprob = 0.0;  // natural log, ≤ 0 for real providers
};

// One generated position: the chosen token plus the provider's top
// alternatives, sorted descending by logprob. The chosen token always
// appears among the alternatives.
struct TokenPosition {
    std::string chosen_token;
    std::vector<TokenAlternative> alternatives;
};

struct Completion {
    std::string full_text;  // concatenation of chosen tokens
    std::vector<TokenPosition> positions;
    std::string provider_name;
    std::string request_fingerprint;
};

std::vector<std::string> validate(const Completion&);

void to_json(json& j, const TokenPosition&);
void from_json(const json& j, TokenPosition&);
void to_json(json& j, const Completion&);
void from_json(const json& j, Completion&);

// Stable hash of (prompt, params); keys mock fixtures and dedupes requests.
std::string request_fingerprint(const std::string& prompt, const DecodingParams& params);

// Decoding floors/ceilings a provider accepts, used to derive the most
// deterministic settings the provider allows.
struct ProviderLimits {
    double min_temperature = 0.0;
    double min_top_p = 0.01;
    int max_top_alternatives = 20;
};

class LlmGateway {
  public:
    virtual ~LlmGateway() = default;

    // Returns the completion with per-position token alternatives and
    // logprobs. Throws TransportError / RateLimited / MissingLogprobs.
    virtual Completion complete(const std::string& prompt, const DecodingParams& params) = 0;

    virtual ProviderLimits limits() const = 0;
    virtual std::string name() const = 0;

    // Most deterministic settings the provider accepts: minimum temperature
    // and top_p, maximum alternatives per position.
    DecodingParams deterministic_params() const;
};

// Fixture-backed provider: every (prompt, params) fingerprint maps to one
// scripted completion file. Read-only after construction; repeated identical
// calls return byte-identical completions.
class MockLlmGateway : public LlmGateway {
  public:
    explicit MockLlmGateway(std::filesystem::path fixtures_dir);

    Completion complete(const std::string& prompt, const DecodingParams& params) override;
    ProviderLimits limits() const override { return limits_; }
    std::string name() const override { return "mock"; }

    // Writes a fixture file keyed by the fingerprint of (prompt, params).
    // The completion's fingerprint and provider_name fields are filled in.
    static std::filesystem::path script(const std::filesystem::path& fixtures_dir,
                                        const std::string& prompt, const DecodingParams& params,
                                        Completion completion);

  private:
    std::filesystem::path dir_;
    ProviderLimits limits_;
};

// Splits text into positions so that `token` (first occurrence at or after
// `from`) stands alone as one chosen token; used when scripting fixtures.
std::vector<TokenPosition> tokenize_around(const std::string& full_text, const std::string& token,
                                           std::size_t from = 0);

// Single-position completion whose one token carries the whole text.
Completion trivial_completion(const std::string& text);

}  // namespace foresight
