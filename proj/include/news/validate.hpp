#pragma once

#include "news/types.hpp"

#include <string>
#include <vector>

namespace news::validate {

// First matching reason wins; the order below is the documented precedence.
enum class NoiseReason {
    non_html_pdf,
    non_html_image,
    non_html_audio,
    non_html_video,
    non_html_archive,
    non_html_executable,
    non_html_other,
    placeholder_text,
    section_or_homepage,
    adult_seo,
    missing_keyword,
    other,
};

std::string to_string(NoiseReason r);

struct NoiseReport {
    std::vector<std::pair<NoiseReason, size_t>> counts; // every reason, fixed order
    size_t pre_count = 0;
    size_t post_count = 0;
    double reduction_ratio = 0.0; // 1 - post/pre

    size_t count_of(NoiseReason r) const;
    size_t non_html_total() const;
    size_t dropped_total() const;
    bool accounting_holds() const; // post + sum(counts) == pre

    std::string to_delimited() const;
    std::string summary() const;
};

struct ValidationConfig {
    std::vector<std::string> topic_tokens;          // keyword filter, required
    std::vector<std::string> section_path_tokens = {// index-like URL markers
                                                    "tag", "category", "seccion",
                                                    "temas", "topics", "archive",
                                                    "autor", "author"};
    std::vector<std::string> adult_seo_markers = {// body markers for SEO spam
                                                  "adult content", "hot singles",
                                                  "free stream", "click now"};
};

// Keeps a record iff any topic token occurs case-insensitively in full_text
// or headline. Returns indices (kept, dropped) over the input order.
std::pair<std::vector<size_t>, std::vector<size_t>>
keyword_filter(const std::vector<NewsRecord>& records,
               const std::vector<std::string>& topic_tokens);

bool keyword_present(const NewsRecord& record,
                     const std::vector<std::string>& topic_tokens);

enum class UrlShape { article, index_like };

// Root paths, section tokens and shallow undated paths are index-like. The
// heuristic is advisory: it refines the drop reason of records the keyword
// filter already rejects.
UrlShape url_article_heuristic(const std::string& url,
                               const std::vector<std::string>& section_tokens);

struct ValidationOutcome {
    Dataset clean;
    NoiseReport report;
};

// Applies, in order: non-HTML rejection, placeholder flags, keyword filter
// (with section/adult refinement), residual quality drops. Every dropped
// record is accounted exactly once.
ValidationOutcome run_validation(const Dataset& dataset, const ValidationConfig& config);

} // namespace news::validate
