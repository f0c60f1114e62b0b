#pragma once

#include "news/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace news::plan {

// One valid region+language aggregator edition.
struct PortalEdition {
    std::string region_code;
    std::string language_code;
    std::string edition_id; // e.g. "es:ES"

    bool operator==(const PortalEdition&) const = default;
};

struct YearMonth {
    int year = 0;
    unsigned month = 0; // 1..12

    auto operator<=>(const YearMonth&) const = default;
    static std::optional<YearMonth> parse(std::string_view s); // "YYYY-MM"
    std::string str() const;
};

int months_between(const YearMonth& a, const YearMonth& b); // b - a in months

struct DateWindow {
    CalDate start;
    CalDate end; // inclusive
    bool operator==(const DateWindow&) const = default;
};

// A single parameterized search.
struct QuerySpec {
    PortalEdition edition;
    std::string topic;
    std::optional<DateWindow> date_window;    // present iff stage == s2_months
    std::optional<std::string> site_restrict; // present iff stage in {s3_iso, s4_domains}
    Stage stage = Stage::s1_editions;

    // "<topic> [site:<restrict>] [after:<date> before:<date>]"; the topic is
    // quoted when it contains spaces.
    std::string render() const;
    std::string digest() const; // hash of edition_id + rendered query
};

struct QueryPlan {
    std::vector<QuerySpec> queries;
    std::string config_digest;
    Timestamp created_at = 0;

    // Throws ConfigError when two specs render identically on one edition.
    void check_unique() const;
    void append(const QueryPlan& other);
};

// Stage 1: one plain search per edition.
QueryPlan build_stage1(const std::vector<PortalEdition>& editions,
                       const std::string& topic);

// Stage 2: one calendar-month window per month in [start, end].
QueryPlan segment_months(const YearMonth& start_month, const YearMonth& end_month,
                         const PortalEdition& edition, const std::string& topic);

// Stage 3: one ISO-restricted search per (token, edition) pair.
QueryPlan build_iso_stage(const std::vector<PortalEdition>& editions,
                          const std::vector<std::string>& iso_tokens,
                          const std::string& topic);

// Stage 4: one site-restricted search per (domain, edition) pair.
QueryPlan expand_domains(const std::vector<std::string>& domains,
                         const std::vector<PortalEdition>& editions,
                         const std::string& topic);

void validate_editions(const std::vector<PortalEdition>& editions);

} // namespace news::plan
