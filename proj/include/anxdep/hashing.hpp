#pragma once

#include <string>
#include <string_view>

namespace anxdep {

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

// Cache/content key for a (backend identity, prompt) pair.
std::string content_key(std::string_view backend_identity, std::string_view prompt);

}  // namespace anxdep
