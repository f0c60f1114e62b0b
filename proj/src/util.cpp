#include "news/util.hpp"

#include "news/errors.hpp"

#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace news::util {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string normalize_ws(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_space = true; // leading whitespace dropped
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_space = true;
        } else {
            if (in_space && !out.empty()) out.push_back(' ');
            out.push_back(c);
            in_space = false;
        }
    }
    return out;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        size_t b = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > b) out.emplace_back(s.substr(b, i - b));
    }
    return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t b = 0;
    while (true) {
        size_t e = s.find(sep, b);
        if (e == std::string_view::npos) {
            out.emplace_back(s.substr(b));
            break;
        }
        out.emplace_back(s.substr(b, e - b));
        b = e + 1;
    }
    return out;
}

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

bool icontains(std::string_view haystack, std::string_view needle) {
    if (needle.empty()) return true;
    if (needle.size() > haystack.size()) return false;
    for (size_t i = 0; i + needle.size() <= haystack.size(); ++i)
        if (iequals(haystack.substr(i, needle.size()), needle)) return true;
    return false;
}

std::vector<std::string> fold_tokens(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (unsigned char c : s) {
        bool word = std::isalnum(c) || c >= 0x80;
        if (word) {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::size_t utf8_length(std::string_view s) {
    std::size_t n = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++n; // skip continuation bytes
    return n;
}

std::size_t word_count(std::string_view s) {
    return split_ws(s).size();
}

// --- time ---------------------------------------------------------------

namespace {
using days_t = std::chrono::duration<std::int64_t, std::ratio<86400>>;
} // namespace

std::string format_iso8601(Timestamp t) {
    std::int64_t day = t / 86400;
    std::int64_t secs = t % 86400;
    if (secs < 0) {
        secs += 86400;
        --day;
    }
    auto ymd = std::chrono::year_month_day{
        std::chrono::sys_days{days_t{day}}};
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02dZ",
                  int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day()),
                  int(secs / 3600), int((secs / 60) % 60), int(secs % 60));
    return buf;
}

std::string format_date(const CalDate& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", d.year, d.month, d.day);
    return buf;
}

std::optional<CalDate> parse_date(std::string_view s) {
    if (s.size() < 10) return std::nullopt;
    if (s[4] != '-' || s[7] != '-') return std::nullopt;
    auto digits = [&](size_t b, size_t n, int& out) {
        out = 0;
        for (size_t i = b; i < b + n; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
            out = out * 10 + (s[i] - '0');
        }
        return true;
    };
    int y, m, d;
    if (!digits(0, 4, y) || !digits(5, 2, m) || !digits(8, 2, d)) return std::nullopt;
    if (m < 1 || m > 12 || d < 1 || d > int(last_day_of_month(y, unsigned(m))))
        return std::nullopt;
    return CalDate{y, unsigned(m), unsigned(d)};
}

std::optional<Timestamp> parse_iso8601(std::string_view s) {
    auto d = parse_date(s.substr(0, std::min<size_t>(10, s.size())));
    if (!d) return std::nullopt;
    Timestamp t = from_cal_date(*d);
    if (s.size() == 10) return t;
    if (s.size() < 19 || (s[10] != 'T' && s[10] != ' ')) return std::nullopt;
    auto num2 = [&](size_t b, int& out) {
        if (!std::isdigit(static_cast<unsigned char>(s[b])) ||
            !std::isdigit(static_cast<unsigned char>(s[b + 1])))
            return false;
        out = (s[b] - '0') * 10 + (s[b + 1] - '0');
        return true;
    };
    int hh, mm, ss;
    if (!num2(11, hh) || s[13] != ':' || !num2(14, mm) || s[16] != ':' || !num2(17, ss))
        return std::nullopt;
    if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
    return t + hh * 3600 + mm * 60 + ss;
}

CalDate to_cal_date(Timestamp t) {
    std::int64_t day = t / 86400;
    if (t % 86400 < 0) --day;
    auto ymd = std::chrono::year_month_day{
        std::chrono::sys_days{days_t{day}}};
    return CalDate{int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day())};
}

Timestamp from_cal_date(const CalDate& d) {
    auto sd = std::chrono::sys_days{std::chrono::year_month_day{
        std::chrono::year{d.year}, std::chrono::month{d.month},
        std::chrono::day{d.day}}};
    return std::chrono::duration_cast<std::chrono::seconds>(
               sd.time_since_epoch())
        .count();
}

unsigned last_day_of_month(int year, unsigned month) {
    auto last = std::chrono::year_month_day_last{
        std::chrono::year{year}, std::chrono::month_day_last{std::chrono::month{month}}};
    return unsigned(last.day());
}

// --- files --------------------------------------------------------------

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write file: " + path);
    out.write(content.data(), std::streamsize(content.size()));
    if (!out) throw IoError("short write: " + path);
}

} // namespace news::util
