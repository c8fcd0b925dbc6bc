#include "foresight/hashing.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace foresight {

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256: EVP_Digest failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out(len * 2, '0');
    for (unsigned int i = 0; i < len; ++i) {
        out[2 * i] = hex[digest[i] >> 4];
        out[2 * i + 1] = hex[digest[i] & 0xf];
    }
    return out;
}

std::string short_hash(std::string_view data, std::size_t hex_chars) {
    std::string full = sha256_hex(data);
    if (hex_chars > full.size()) hex_chars = full.size();
    return full.substr(0, hex_chars);
}

}  // namespace foresight
