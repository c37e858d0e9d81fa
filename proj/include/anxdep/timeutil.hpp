#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace anxdep {

// RFC 3339 timestamp with seconds precision ("2023-05-16T09:30:00Z" or a
// ±HH:MM offset; fractional seconds are accepted and truncated).
std::int64_t parse_rfc3339(std::string_view s);
std::string format_rfc3339(std::int64_t epoch_seconds);

// ISO 8601 calendar date, as the epoch instant at 00:00:00 UTC.
std::int64_t parse_date(std::string_view s);
std::string format_date(std::int64_t epoch_seconds);

constexpr std::int64_t kSecondsPerDay = 86400;

}  // namespace anxdep
