#include "anxdep/timeutil.hpp"

#include <cstdio>

#include "anxdep/errors.hpp"

namespace anxdep {
namespace {

// Howard Hinnant's civil-date algorithms.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const auto yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const auto doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp < 10 ? mp + 3 : mp - 9;
    y = yr + (m <= 2);
}

bool read_digits(std::string_view s, std::size_t pos, std::size_t count, int& out) {
    if (pos + count > s.size()) return false;
    int value = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const char c = s[pos + i];
        if (c < '0' || c > '9') return false;
        value = value * 10 + (c - '0');
    }
    out = value;
    return true;
}

[[noreturn]] void bad(std::string_view kind, std::string_view s) {
    throw DataError("invalid " + std::string(kind) + ": '" + std::string(s) + "'");
}

}  // namespace

std::int64_t parse_date(std::string_view s) {
    int y = 0, mo = 0, da = 0;
    if (s.size() != 10 || !read_digits(s, 0, 4, y) || s[4] != '-' || !read_digits(s, 5, 2, mo) ||
        s[7] != '-' || !read_digits(s, 8, 2, da))
        bad("date", s);
    if (mo < 1 || mo > 12 || da < 1 || da > 31) bad("date", s);
    return days_from_civil(y, static_cast<unsigned>(mo), static_cast<unsigned>(da)) * kSecondsPerDay;
}

std::int64_t parse_rfc3339(std::string_view s) {
    int y = 0, mo = 0, da = 0, hh = 0, mi = 0, ss = 0;
    if (s.size() < 20 || !read_digits(s, 0, 4, y) || s[4] != '-' || !read_digits(s, 5, 2, mo) ||
        s[7] != '-' || !read_digits(s, 8, 2, da) || (s[10] != 'T' && s[10] != 't' && s[10] != ' ') ||
        !read_digits(s, 11, 2, hh) || s[13] != ':' || !read_digits(s, 14, 2, mi) || s[16] != ':' ||
        !read_digits(s, 17, 2, ss))
        bad("timestamp", s);
    if (mo < 1 || mo > 12 || da < 1 || da > 31 || hh > 23 || mi > 59 || ss > 60) bad("timestamp", s);

    std::size_t pos = 19;
    if (pos < s.size() && s[pos] == '.') {  // fractional seconds: truncate
        ++pos;
        const std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) bad("timestamp", s);
    }
    if (pos >= s.size()) bad("timestamp", s);

    std::int64_t offset = 0;
    if (s[pos] == 'Z' || s[pos] == 'z') {
        ++pos;
    } else if (s[pos] == '+' || s[pos] == '-') {
        const int sign = s[pos] == '-' ? -1 : 1;
        int oh = 0, om = 0;
        if (!read_digits(s, pos + 1, 2, oh) || pos + 3 >= s.size() || s[pos + 3] != ':' ||
            !read_digits(s, pos + 4, 2, om))
            bad("timestamp", s);
        offset = sign * (oh * 3600 + om * 60);
        pos += 6;
    } else {
        bad("timestamp", s);
    }
    if (pos != s.size()) bad("timestamp", s);

    const std::int64_t days = days_from_civil(y, static_cast<unsigned>(mo), static_cast<unsigned>(da));
    return days * kSecondsPerDay + hh * 3600 + mi * 60 + ss - offset;
}

std::string format_rfc3339(std::int64_t t) {
    std::int64_t days = t / kSecondsPerDay;
    std::int64_t rem = t % kSecondsPerDay;
    if (rem < 0) {
        rem += kSecondsPerDay;
        --days;
    }
    std::int64_t y;
    unsigned mo, da;
    civil_from_days(days, y, mo, da);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                  static_cast<long long>(y), mo, da, static_cast<long long>(rem / 3600),
                  static_cast<long long>((rem / 60) % 60), static_cast<long long>(rem % 60));
    return buf;
}

std::string format_date(std::int64_t t) {
    std::int64_t days = t / kSecondsPerDay;
    if (t % kSecondsPerDay < 0) --days;
    std::int64_t y;
    unsigned mo, da;
    civil_from_days(days, y, mo, da);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02u", static_cast<long long>(y), mo, da);
    return buf;
}

}  // namespace anxdep
