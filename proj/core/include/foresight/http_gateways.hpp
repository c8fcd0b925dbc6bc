#pragma once

#include <string>

#include "foresight/llm_gateway.hpp"
#include "foresight/news_gateway.hpp"

namespace foresight {

// Live chat-completion provider speaking the mainstream logprob-returning
// JSON wire protocol (POST {base}/chat/completions). The API key is read
// from the environment, never from config files.
struct LlmProviderConfig {
    std::string base_url;  // e.g. "https://api.example.com/v1"
    std::string model;
    double min_temperature = 0.0;
    double min_top_p = 0.01;
    int max_top_alternatives = 20;
    int max_retries = 3;
    std::string api_key_env = "FORESIGHT_LLM_KEY";
};

class HttpLlmGateway : public LlmGateway {
  public:
    explicit HttpLlmGateway(LlmProviderConfig cfg);

    Completion complete(const std::string& prompt, const DecodingParams& params) override;
    ProviderLimits limits() const override;
    std::string name() const override { return "http:" + cfg_.model; }

    // Maps one provider response body to a Completion; exposed for tests.
    static Completion parse_response(const json& body, const std::string& fingerprint);

  private:
    LlmProviderConfig cfg_;
};

// Live news search endpoint: GET {base}/search?q=…&from=…&to=…&limit=…,
// responding {"articles": [{headline, published, origin}, …]}.
struct NewsProviderConfig {
    std::string base_url;
    int max_retries = 3;
    std::string api_key_env = "FORESIGHT_NEWS_KEY";
};

class HttpNewsGateway : public NewsGateway {
  public:
    explicit HttpNewsGateway(NewsProviderConfig cfg);

    std::vector<ScoredTrend> relevant_trends(const Topic& topic, int limit) override;
    std::vector<SourceHeadline> search_sources(const std::string& query, Date start, Date end,
                                               int limit) override;

  private:
    NewsProviderConfig cfg_;
};

}  // namespace foresight
