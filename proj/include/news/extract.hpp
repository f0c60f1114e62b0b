#pragma once

#include "news/harvest.hpp"
#include "news/types.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace news::extract {

enum class ResourceKind {
    html_article,
    html_nonarticle,
    pdf,
    image,
    audio,
    video,
    archive,
    executable,
    unknown,
};

std::string to_string(ResourceKind k);
bool is_non_html(ResourceKind k);

enum class ClassifiedVia { header, extension, magic_bytes };

struct ResourceClass {
    ResourceKind kind = ResourceKind::unknown;
    std::string content_type;
    ClassifiedVia via = ClassifiedVia::header;
};

// Precedence: magic bytes > content-type header > extension. HTML is an
// html_article candidate here; the validation stage makes the final call.
ResourceClass classify_resource(const std::string& url,
                                const std::map<std::string, std::string>& headers,
                                std::string_view first_bytes);

enum class ContentStatus { ok, no_content, paywalled, non_html };

std::string to_string(ContentStatus s);

struct ExtractedContent {
    std::string full_text; // possibly empty
    std::optional<std::string> featured_image_url;
    std::string detected_language = "unknown";
    ContentStatus status = ContentStatus::ok;
};

// Pulls article text out of an HTML document: prefers <article>/<main>,
// falls back to the densest block, drops navigation/ads/sidebars, keeps
// paragraph breaks as newlines. `fallback_language` is used when the
// stopword profile is inconclusive.
ExtractedContent extract_article_text(const std::string& body_html,
                                      const std::string& fallback_language = "unknown");

// Ranked stopword-hit language guess; empty result when nothing matches.
std::string detect_language(const std::string& text);

struct FetchOutcome {
    ResourceClass resource;
    ExtractedContent content;
    int http_status = 0;
};

// Fetches one publisher URL and classifies + extracts. Network errors are
// reported via status/flags, never thrown.
FetchOutcome fetch_and_extract(harvest::Fetcher& fetcher, const std::string& url,
                               const std::string& fallback_language);

struct BackfillReport {
    int attempted = 0;
    int filled = 0;
    int no_content = 0;
    int paywalled = 0;
    int non_html = 0;
};

// Second-pass content completion for records with empty full_text. Fills or
// flags; never overwrites non-empty text, never fabricates.
BackfillReport backfill_content(std::vector<NewsRecord>& records,
                                harvest::Fetcher& fetcher);

// Applies a fetch outcome to a record: text, counts, language, image,
// status flags.
void apply_content(NewsRecord& record, const FetchOutcome& outcome,
                   ExtractionMethod method);

} // namespace news::extract
