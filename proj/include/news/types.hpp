#pragma once

#include "news/util.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace news {

using util::CalDate;
using util::Timestamp;

// Collection stage a query (and the records it produced) belongs to.
enum class Stage {
    s1_editions,
    s2_months,
    s3_iso,
    s4_domains,
    s5_backfill,
};

std::string to_string(Stage s);
std::optional<Stage> stage_from_string(std::string_view s);
int stage_index(Stage s);

enum class ExtractionMethod {
    listing,
    direct_fetch,
    backfill,
    manual,
};

std::string to_string(ExtractionMethod m);
std::optional<ExtractionMethod> extraction_method_from_string(std::string_view s);

enum class DatasetOrigin {
    aggregator,
    licensed_a,
    licensed_b,
    imported,
};

std::string to_string(DatasetOrigin o);
std::optional<DatasetOrigin> dataset_origin_from_string(std::string_view s);

// Quality flag tokens stored in NewsRecord::quality_flags.
namespace flags {
inline constexpr const char* no_content = "[NO CONTENT]";
inline constexpr const char* paywalled = "paywalled";
inline constexpr const char* non_html = "non_html";
inline constexpr const char* llm_parse_fail = "llm_parse_fail";
inline constexpr const char* author_unverified = "author_unverified";
inline constexpr const char* reprocess_manual = "reprocess_manual";
inline constexpr const char* published_at_approximate = "published_at_approximate";
inline constexpr const char* synopsis_truncated = "synopsis_truncated";
} // namespace flags

// The 20-field dataset row. Field order here matches the canonical
// delimited-text schema (see store module).
struct NewsRecord {
    std::string id;
    std::string outlet_name;
    std::string source_domain;
    std::optional<Timestamp> published_at;
    Timestamp collected_at = 0;
    std::string headline;
    std::optional<std::string> author;
    std::optional<std::string> geographic_reference;
    std::optional<std::string> thematic_category;
    std::string source_url;
    std::string full_text;
    std::uint64_t character_count = 0;
    std::uint64_t word_count = 0;
    std::optional<std::string> featured_image_url;
    ExtractionMethod extraction_method = ExtractionMethod::listing;
    std::string detected_language = "unknown";
    std::optional<std::string> ai_summary;
    std::set<std::string> quality_flags;
    Stage stage = Stage::s1_editions;
    std::string edition_id;

    bool has_flag(std::string_view f) const {
        return quality_flags.count(std::string(f)) > 0;
    }
    void set_flag(std::string_view f) { quality_flags.insert(std::string(f)); }

    // character_count / word_count always describe full_text.
    void refresh_counts() {
        character_count = util::utf8_length(full_text);
        word_count = util::word_count(full_text);
    }
};

struct Dataset {
    std::string name;
    DatasetOrigin origin = DatasetOrigin::aggregator;
    std::vector<NewsRecord> records;
    int schema_version = 1;
    std::vector<std::string> audit_log; // one entry per pipeline pass

    void log_pass(std::string entry) { audit_log.push_back(std::move(entry)); }
};

} // namespace news
