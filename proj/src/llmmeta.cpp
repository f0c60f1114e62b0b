#include "news/llmmeta.hpp"

#include "news/errors.hpp"
#include "news/url.hpp"
#include "news/util.hpp"

#include <httplib.h>
#include <json.hpp>

#include <algorithm>
#include <unordered_map>

namespace news::llmmeta {

using nlohmann::json;

std::string default_prompt_template() {
    return util::read_file(std::string(NEWSHARVEST_DATA_DIR) +
                           "/prompts/metadata_extract.txt");
}

CompletionFn make_http_completion(const ModelConfig& cfg) {
    return [cfg](const std::string& model, const std::string& prompt) -> std::string {
        url::Url u = url::parse(cfg.endpoint);
        httplib::Client client(u.scheme + "://" + u.host_port());
        client.set_read_timeout(int(cfg.timeout_s), 0);
        json payload = {{"model", model}, {"prompt", prompt}};
        auto res = client.Post("/complete", payload.dump(), "application/json");
        if (!res)
            throw ExtractionError("model endpoint unreachable: " + cfg.endpoint);
        if (res->status != 200)
            throw ExtractionError("model endpoint status " +
                                  std::to_string(res->status));
        try {
            return json::parse(res->body).at("text").get<std::string>();
        } catch (const std::exception& e) {
            throw ExtractionError(std::string("model reply not parseable: ") +
                                  e.what());
        }
    };
}

std::string render_prompt(const std::string& prompt_template,
                          const std::string& headline,
                          const std::string& full_text) {
    std::string out = prompt_template;
    auto replace_all = [&](std::string_view key, const std::string& value) {
        size_t pos = 0;
        while ((pos = out.find(key, pos)) != std::string::npos) {
            out.replace(pos, key.size(), value);
            pos += value.size();
        }
    };
    replace_all("{{headline}}", headline);
    replace_all("{{text}}", full_text);
    return out;
}

std::optional<MetadataGuess> parse_model_reply(const std::string& reply) {
    MetadataGuess g;
    bool any_label = false;
    for (const auto& raw_line : util::split(reply, '\n')) {
        std::string line = util::trim(raw_line);
        auto take = [&](std::string_view label, std::optional<std::string>& slot) {
            if (line.size() < label.size()) return false;
            if (!util::iequals(line.substr(0, label.size()), label)) return false;
            any_label = true;
            std::string value = util::trim(line.substr(label.size()));
            std::string low = util::lower_ascii(value);
            if (!value.empty() && low != "none" && low != "unknown" && low != "n/a")
                slot = value;
            return true;
        };
        if (take("AUTHOR:", g.author)) continue;
        if (take("GEOFOCUS:", g.geographic_focus)) continue;
        if (take("SECTION:", g.section)) continue;
        take("SYNOPSIS:", g.synopsis);
    }
    if (!any_label) return std::nullopt;
    return g;
}

MetadataGuess extract_metadata(const std::string& headline,
                               const std::string& full_text,
                               const ModelConfig& cfg,
                               const CompletionFn& complete) {
    if (full_text.empty())
        throw DomainError("extract_metadata requires non-empty full_text");

    std::string prompt = render_prompt(cfg.prompt_template, headline, full_text);
    std::string digest = util::hex64(util::fnv1a64(prompt));

    // one bounded retry on unparseable output
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::string reply = complete(cfg.model, prompt);
        if (auto parsed = parse_model_reply(reply)) {
            parsed->model_id = cfg.model;
            parsed->prompt_digest = digest;
            return *parsed;
        }
    }
    MetadataGuess failed;
    failed.model_id = cfg.model;
    failed.prompt_digest = digest;
    failed.parse_failed = true;
    return failed;
}

bool validate_author(const MetadataGuess& guess, const std::string& full_text) {
    if (!guess.author) return false;
    const std::string& author = *guess.author;
    if (author.empty()) return false;
    std::string head = full_text.substr(0, std::min<size_t>(500, full_text.size()));
    std::string tail =
        full_text.size() > 200 ? full_text.substr(full_text.size() - 200) : full_text;
    return util::icontains(head, author) || util::icontains(tail, author);
}

namespace {

// Truncates to the word cap; clears a synopsis that is a verbatim slice of a
// single overlong source sentence.
std::optional<std::string> sanitize_synopsis(std::optional<std::string> synopsis,
                                             const std::string& full_text,
                                             bool* truncated) {
    if (!synopsis) return std::nullopt;
    auto words = util::split_ws(*synopsis);
    constexpr size_t kCap = 60;
    if (words.size() > kCap) {
        std::string cut;
        for (size_t i = 0; i < kCap; ++i) {
            if (!cut.empty()) cut += " ";
            cut += words[i];
        }
        *synopsis = cut;
        if (truncated) *truncated = true;
    }
    if (full_text.find(*synopsis) != std::string::npos) {
        // locate the containing sentence; a verbatim copy of a sentence
        // longer than the cap is not a synopsis
        size_t pos = full_text.find(*synopsis);
        size_t sent_begin = full_text.find_last_of(".!?", pos);
        sent_begin = sent_begin == std::string::npos ? 0 : sent_begin + 1;
        size_t sent_end = full_text.find_first_of(".!?", pos + synopsis->size());
        sent_end = sent_end == std::string::npos ? full_text.size() : sent_end + 1;
        std::string sentence = full_text.substr(sent_begin, sent_end - sent_begin);
        if (util::word_count(sentence) > kCap) return std::nullopt;
    }
    return synopsis;
}

} // namespace

void apply_metadata(NewsRecord& record, MetadataGuess guess) {
    if (guess.parse_failed) {
        record.set_flag(flags::llm_parse_fail);
        return;
    }
    if (guess.author) {
        if (validate_author(guess, record.full_text))
            record.author = guess.author;
        else
            record.set_flag(flags::author_unverified);
    }
    if (guess.geographic_focus) record.geographic_reference = guess.geographic_focus;
    if (guess.section) record.thematic_category = guess.section;
    bool truncated = false;
    if (auto syn = sanitize_synopsis(guess.synopsis, record.full_text, &truncated)) {
        record.ai_summary = syn;
        if (truncated) record.set_flag(flags::synopsis_truncated);
    }
}

std::vector<HallucinationFlag> detect_hallucination(std::vector<NewsRecord>& records,
                                                    size_t min_group,
                                                    size_t min_len) {
    if (min_group < 2) throw DomainError("min_group must be >= 2");

    std::unordered_map<std::string, std::vector<size_t>> groups;
    for (size_t i = 0; i < records.size(); ++i) {
        std::string norm = util::normalize_ws(records[i].full_text);
        if (norm.size() < min_len) continue;
        groups[norm].push_back(i);
    }

    std::vector<HallucinationFlag> out;
    for (const auto& [norm, members] : groups) {
        if (members.size() < min_group) continue;
        HallucinationFlag flag;
        flag.group_key = util::hex64(util::fnv1a64(norm));
        for (size_t idx : members) {
            flag.member_ids.push_back(records[idx].id);
            records[idx].full_text.clear();
            records[idx].refresh_counts();
            records[idx].set_flag(flags::reprocess_manual);
            records[idx].set_flag(flags::no_content);
        }
        out.push_back(std::move(flag));
    }
    std::sort(out.begin(), out.end(),
              [](const HallucinationFlag& a, const HallucinationFlag& b) {
                  return a.member_ids.front() < b.member_ids.front();
              });
    return out;
}

} // namespace news::llmmeta
