#pragma once

#include "news/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace news::dedup {

// Normalized dedup key: lowercase host, default port dropped, trailing slash
// trimmed, tracking params stripped, remaining query params sorted, fragment
// dropped. Canonicalization is idempotent.
struct CanonicalUrl {
    std::string host;
    std::string path;
    std::string query; // sorted k=v pairs joined with '&'

    bool operator==(const CanonicalUrl&) const = default;
    std::string key() const { return host + path + (query.empty() ? "" : "?" + query); }
};

extern const std::vector<std::string> kDefaultTrackingParams; // utm_*, fbclid, gclid, ...

CanonicalUrl canonicalize_url(const std::string& raw); // throws ParseError
CanonicalUrl canonicalize_url(const std::string& raw,
                              const std::vector<std::string>& tracking_params);

// Token-set Jaccard over case-folded, punctuation-stripped tokens.
// Empty vs empty -> 1.0, empty vs non-empty -> 0.0.
double headline_similarity(const std::string& h1, const std::string& h2);

// Input view for deduplication; both RawResult streams and NewsRecord
// datasets adapt to this.
struct DedupItem {
    std::string id;
    std::string url;      // may be empty (licensed imports)
    std::string headline;
    std::optional<CalDate> date; // publication date when known
    Timestamp collected_at = 0;
    size_t order = 0;     // first-seen position
};

enum class DedupReason { url_match, headline_match };

std::string to_string(DedupReason r);

struct DedupDecision {
    std::string kept_id;
    std::vector<std::string> dropped_ids;
    DedupReason reason = DedupReason::url_match;
    double similarity = 1.0; // 1.0 when reason == url_match
};

struct DedupOutcome {
    std::vector<std::string> unique_ids; // first-seen order of group keepers
    std::vector<DedupDecision> decisions;
};

// Two items are duplicates iff their canonical URLs are equal, or headline
// similarity >= threshold and (when both dates are known) the calendar dates
// match. The relation is closed transitively; the earliest collected_at in a
// group wins, first-seen order breaking ties. Bucketed candidate generation,
// pair scoring parallelized with OpenMP.
DedupOutcome dedup_merge(const std::vector<DedupItem>& items, double threshold);

// Audit export: one line per decision, delimited text.
std::string decisions_to_delimited(const std::vector<DedupDecision>& decisions);

} // namespace news::dedup
