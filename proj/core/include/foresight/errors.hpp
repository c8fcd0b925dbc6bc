#pragma once

#include <stdexcept>
#include <string>

namespace foresight {

// Failure classes map 1:1 onto CLI exit codes.
enum class ExitClass {
    usage = 1,
    gateway = 2,
    parse = 3,
    storage = 4,
    insufficient_data = 5,
};

class Error : public std::runtime_error {
  public:
    Error(ExitClass cls, const std::string& msg) : std::runtime_error(msg), cls_(cls) {}
    ExitClass exit_class() const { return cls_; }

  private:
    ExitClass cls_;
};

struct PreconditionViolation : Error {
    explicit PreconditionViolation(const std::string& msg) : Error(ExitClass::usage, msg) {}
};

// gateway failures
struct TransportError : Error {
    explicit TransportError(const std::string& msg) : Error(ExitClass::gateway, msg) {}
};
struct MissingLogprobs : Error {
    explicit MissingLogprobs(const std::string& msg) : Error(ExitClass::gateway, msg) {}
};
struct RateLimited : Error {
    RateLimited(const std::string& msg, int retry_after_s)
        : Error(ExitClass::gateway, msg), retry_after_s(retry_after_s) {}
    int retry_after_s;
};
struct MissingFixture : Error {
    explicit MissingFixture(const std::string& msg) : Error(ExitClass::gateway, msg) {}
};
struct ProviderUnavailable : Error {
    explicit ProviderUnavailable(const std::string& msg) : Error(ExitClass::gateway, msg) {}
};

// parse failures
struct AnchorNotFound : Error {
    explicit AnchorNotFound(const std::string& msg) : Error(ExitClass::parse, msg) {}
};
struct NoParseableGuesses : Error {
    explicit NoParseableGuesses(const std::string& msg) : Error(ExitClass::parse, msg) {}
};
struct MalformedGeneration : Error {
    MalformedGeneration(const std::string& msg, std::size_t position)
        : Error(ExitClass::parse, msg), position(position) {}
    std::size_t position;  // line number of the first violation
};
struct ValidationFailed : Error {
    explicit ValidationFailed(const std::string& msg) : Error(ExitClass::parse, msg) {}
};
struct MalformedCompletion : Error {
    explicit MalformedCompletion(const std::string& msg) : Error(ExitClass::parse, msg) {}
};

// storage failures
struct UnknownForecastId : Error {
    explicit UnknownForecastId(const std::string& msg) : Error(ExitClass::storage, msg) {}
};
struct CorruptLedger : Error {
    explicit CorruptLedger(const std::string& msg) : Error(ExitClass::storage, msg) {}
};
struct WriteFailed : Error {
    explicit WriteFailed(const std::string& msg) : Error(ExitClass::storage, msg) {}
};

// insufficient data
struct EmptyStore : Error {
    explicit EmptyStore(const std::string& msg) : Error(ExitClass::insufficient_data, msg) {}
};
struct EmptyGuessList : Error {
    explicit EmptyGuessList(const std::string& msg) : Error(ExitClass::insufficient_data, msg) {}
};
struct EmptySet : Error {
    explicit EmptySet(const std::string& msg) : Error(ExitClass::insufficient_data, msg) {}
};
struct TooFewRecords : Error {
    explicit TooFewRecords(const std::string& msg) : Error(ExitClass::insufficient_data, msg) {}
};
struct NonConvergence : Error {
    NonConvergence(const std::string& msg, double residual)
        : Error(ExitClass::insufficient_data, msg), residual(residual) {}
    double residual;
};

}  // namespace foresight
