#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace news::util {

std::string trim(std::string_view s);
std::string lower_ascii(std::string_view s);

// Collapses whitespace runs to single spaces and trims the ends.
std::string normalize_ws(std::string_view s);

std::vector<std::string> split_ws(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

bool iequals(std::string_view a, std::string_view b);
bool icontains(std::string_view haystack, std::string_view needle);

// Case-folded alphanumeric tokens; non-ASCII bytes are kept so accented
// words survive as tokens.
std::vector<std::string> fold_tokens(std::string_view s);

std::uint64_t fnv1a64(std::string_view s);
std::string hex64(std::uint64_t v);

std::size_t utf8_length(std::string_view s);
std::size_t word_count(std::string_view s);

// --- time ---------------------------------------------------------------

using Timestamp = std::int64_t; // seconds since Unix epoch, UTC

struct CalDate {
    int year = 0;
    unsigned month = 0; // 1..12
    unsigned day = 0;   // 1..31
    auto operator<=>(const CalDate&) const = default;
};

std::string format_iso8601(Timestamp t);
std::string format_date(const CalDate& d); // YYYY-MM-DD

// Accepts "YYYY-MM-DDTHH:MM:SSZ" and plain "YYYY-MM-DD".
std::optional<Timestamp> parse_iso8601(std::string_view s);
std::optional<CalDate> parse_date(std::string_view s);

CalDate to_cal_date(Timestamp t);
Timestamp from_cal_date(const CalDate& d); // midnight UTC
unsigned last_day_of_month(int year, unsigned month);

// --- files --------------------------------------------------------------

std::string read_file(const std::string& path); // throws IoError
void write_file(const std::string& path, std::string_view content);

} // namespace news::util
