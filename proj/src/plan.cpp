#include "news/plan.hpp"

#include "news/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace news::plan {

std::optional<YearMonth> YearMonth::parse(std::string_view s) {
    if (s.size() != 7 || s[4] != '-') return std::nullopt;
    int y = 0;
    unsigned m = 0;
    for (size_t i = 0; i < 4; ++i) {
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
        y = y * 10 + (s[i] - '0');
    }
    for (size_t i = 5; i < 7; ++i) {
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
        m = m * 10 + unsigned(s[i] - '0');
    }
    if (m < 1 || m > 12) return std::nullopt;
    return YearMonth{y, m};
}

std::string YearMonth::str() const {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%04d-%02u", year, month);
    return buf;
}

int months_between(const YearMonth& a, const YearMonth& b) {
    return (b.year - a.year) * 12 + int(b.month) - int(a.month);
}

std::string QuerySpec::render() const {
    std::string q = topic;
    if (q.find(' ') != std::string::npos) q = "\"" + q + "\"";
    if (site_restrict) q += " site:" + *site_restrict;
    if (date_window)
        q += " after:" + util::format_date(date_window->start) +
             " before:" + util::format_date(date_window->end);
    return q;
}

std::string QuerySpec::digest() const {
    return util::hex64(util::fnv1a64(edition.edition_id + "|" + render()));
}

void QueryPlan::check_unique() const {
    std::unordered_set<std::string> seen;
    for (const auto& q : queries) {
        std::string key = q.edition.edition_id + "|" + q.render();
        if (!seen.insert(key).second)
            throw ConfigError("duplicate query in plan: " + key);
    }
}

void QueryPlan::append(const QueryPlan& other) {
    queries.insert(queries.end(), other.queries.begin(), other.queries.end());
}

void validate_editions(const std::vector<PortalEdition>& editions) {
    if (editions.empty()) throw ConfigError("editions list is empty");
    std::unordered_set<std::string> ids;
    for (const auto& e : editions) {
        if (e.region_code.empty() || e.language_code.empty())
            throw ConfigError("edition with empty region or language code: " +
                              e.edition_id);
        if (!ids.insert(e.edition_id).second)
            throw ConfigError("duplicate edition_id: " + e.edition_id);
    }
}

QueryPlan build_stage1(const std::vector<PortalEdition>& editions,
                       const std::string& topic) {
    validate_editions(editions);
    if (topic.empty()) throw ConfigError("topic is empty");
    QueryPlan p;
    p.queries.reserve(editions.size());
    for (const auto& e : editions) {
        QuerySpec q;
        q.edition = e;
        q.topic = topic;
        q.stage = Stage::s1_editions;
        p.queries.push_back(std::move(q));
    }
    return p;
}

QueryPlan segment_months(const YearMonth& start_month, const YearMonth& end_month,
                         const PortalEdition& edition, const std::string& topic) {
    if (end_month < start_month)
        throw RangeError("month range start " + start_month.str() +
                         " is after end " + end_month.str());
    if (topic.empty()) throw ConfigError("topic is empty");
    QueryPlan p;
    int n = months_between(start_month, end_month) + 1;
    p.queries.reserve(size_t(n));
    YearMonth ym = start_month;
    for (int i = 0; i < n; ++i) {
        QuerySpec q;
        q.edition = edition;
        q.topic = topic;
        q.stage = Stage::s2_months;
        q.date_window = DateWindow{
            CalDate{ym.year, ym.month, 1},
            CalDate{ym.year, ym.month, util::last_day_of_month(ym.year, ym.month)}};
        p.queries.push_back(std::move(q));
        if (++ym.month > 12) {
            ym.month = 1;
            ++ym.year;
        }
    }
    return p;
}

QueryPlan build_iso_stage(const std::vector<PortalEdition>& editions,
                          const std::vector<std::string>& iso_tokens,
                          const std::string& topic) {
    validate_editions(editions);
    if (iso_tokens.empty()) throw ConfigError("ISO restriction set is empty");
    if (topic.empty()) throw ConfigError("topic is empty");
    QueryPlan p;
    p.queries.reserve(editions.size() * iso_tokens.size());
    for (const auto& e : editions) {
        for (const auto& iso : iso_tokens) {
            QuerySpec q;
            q.edition = e;
            q.topic = topic;
            q.stage = Stage::s3_iso;
            q.site_restrict = iso;
            p.queries.push_back(std::move(q));
        }
    }
    return p;
}

QueryPlan expand_domains(const std::vector<std::string>& domains,
                         const std::vector<PortalEdition>& editions,
                         const std::string& topic) {
    // Empty inputs are legal and yield an empty plan.
    std::vector<std::string> uniq;
    std::unordered_set<std::string> seen;
    uniq.reserve(domains.size());
    for (const auto& d : domains) {
        std::string low = util::lower_ascii(util::trim(d));
        if (low.empty()) continue;
        if (seen.insert(low).second) uniq.push_back(std::move(low));
    }
    QueryPlan p;
    p.queries.reserve(uniq.size() * editions.size());
    for (const auto& d : uniq) {
        for (const auto& e : editions) {
            QuerySpec q;
            q.edition = e;
            q.topic = topic;
            q.stage = Stage::s4_domains;
            q.site_restrict = d;
            p.queries.push_back(std::move(q));
        }
    }
    return p;
}

} // namespace news::plan
