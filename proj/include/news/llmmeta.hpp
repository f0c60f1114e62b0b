#pragma once

#include "news/types.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace news::llmmeta {

struct MetadataGuess {
    std::optional<std::string> author;
    std::optional<std::string> geographic_focus;
    std::optional<std::string> section;
    std::optional<std::string> synopsis; // capped at 60 words
    std::string model_id;
    std::string prompt_digest;
    bool parse_failed = false;
};

// Single-turn completion transport: {model, prompt} in, completion text out.
// The HTTP client and test mocks both satisfy this.
using CompletionFn = std::function<std::string(const std::string& model,
                                               const std::string& prompt)>;

struct ModelConfig {
    std::string endpoint; // e.g. http://127.0.0.1:8089
    std::string model = "local-extractor";
    std::string prompt_template; // with {{headline}} / {{text}} placeholders
    double timeout_s = 60.0;
};

// Default prompt template shipped under data/prompts/.
std::string default_prompt_template();

// POSTs {"model","prompt"} to <endpoint>/complete, expects {"text"}.
// Throws ExtractionError when the endpoint is unreachable.
CompletionFn make_http_completion(const ModelConfig& cfg);

std::string render_prompt(const std::string& prompt_template,
                          const std::string& headline, const std::string& full_text);

// Zero-shot extraction of the four metadata fields. Unparseable output gets
// one bounded retry, then all fields absent + parse_failed. Throws
// DomainError when full_text is empty (precondition).
MetadataGuess extract_metadata(const std::string& headline,
                               const std::string& full_text,
                               const ModelConfig& cfg, const CompletionFn& complete);

// Parses the labeled-line reply format (AUTHOR:/GEOFOCUS:/SECTION:/SYNOPSIS:).
std::optional<MetadataGuess> parse_model_reply(const std::string& reply);

// Author is accepted only when the string occurs near the byline regions:
// first 500 or last 200 characters of the text.
bool validate_author(const MetadataGuess& guess, const std::string& full_text);

struct HallucinationFlag {
    std::string group_key; // hash of the normalized shared text
    std::vector<std::string> member_ids;
};

// Groups records by exact whitespace-normalized full_text; every group with
// >= min_group members and >= min_len characters is flagged, its members'
// text cleared and queued for manual reprocessing. Idempotent.
std::vector<HallucinationFlag> detect_hallucination(std::vector<NewsRecord>& records,
                                                    size_t min_group = 2,
                                                    size_t min_len = 200);

// Applies a guess to a record: byline validation, synopsis cap, section
// normalization, quality flags.
void apply_metadata(NewsRecord& record, MetadataGuess guess);

} // namespace news::llmmeta
