#pragma once

#include <string>
#include <string_view>

namespace foresight {

// SHA-256 hex digest (64 chars).
std::string sha256_hex(std::string_view data);

// Truncated digest for compact identifiers and fingerprints.
std::string short_hash(std::string_view data, std::size_t hex_chars = 16);

}  // namespace foresight
