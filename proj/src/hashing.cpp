#include "anxdep/hashing.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace anxdep {

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0x0F]);
    }
    return out;
}

std::string content_key(std::string_view backend_identity, std::string_view prompt) {
    std::string buf;
    buf.reserve(backend_identity.size() + prompt.size() + 1);
    buf.append(backend_identity);
    buf.push_back('\0');  // unambiguous separator
    buf.append(prompt);
    return sha256_hex(buf);
}

}  // namespace anxdep
