#include "news/extract.hpp"

#include "news/errors.hpp"
#include "news/html.hpp"
#include "news/url.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace news::extract {

std::string to_string(ResourceKind k) {
    switch (k) {
        case ResourceKind::html_article: return "html_article";
        case ResourceKind::html_nonarticle: return "html_nonarticle";
        case ResourceKind::pdf: return "pdf";
        case ResourceKind::image: return "image";
        case ResourceKind::audio: return "audio";
        case ResourceKind::video: return "video";
        case ResourceKind::archive: return "archive";
        case ResourceKind::executable: return "executable";
        case ResourceKind::unknown: return "unknown";
    }
    return "unknown";
}

bool is_non_html(ResourceKind k) {
    switch (k) {
        case ResourceKind::pdf:
        case ResourceKind::image:
        case ResourceKind::audio:
        case ResourceKind::video:
        case ResourceKind::archive:
        case ResourceKind::executable:
            return true;
        default:
            return false;
    }
}

std::string to_string(ContentStatus s) {
    switch (s) {
        case ContentStatus::ok: return "ok";
        case ContentStatus::no_content: return "no_content";
        case ContentStatus::paywalled: return "paywalled";
        case ContentStatus::non_html: return "non_html";
    }
    return "ok";
}

namespace {

ResourceKind kind_from_magic(std::string_view b) {
    auto has = [&](std::string_view sig, size_t at = 0) {
        return b.size() >= at + sig.size() && b.substr(at, sig.size()) == sig;
    };
    if (has("%PDF-")) return ResourceKind::pdf;
    if (has("\x89PNG") || has("GIF8") || has("\xFF\xD8\xFF") || has("BM"))
        return ResourceKind::image;
    if (has("ID3") || has("\xFF\xFB") || has("OggS") || has("fLaC"))
        return ResourceKind::audio;
    if (has("ftyp", 4) || has("\x1A\x45\xDF\xA3")) return ResourceKind::video;
    if (has("PK\x03\x04") || has("\x1F\x8B") || has("Rar!") || has("7z\xBC\xAF"))
        return ResourceKind::archive;
    if (has("MZ") || has("\x7F" "ELF")) return ResourceKind::executable;
    // sniff html
    size_t start = b.find_first_not_of(" \t\r\n");
    if (start != std::string_view::npos) {
        std::string head = util::lower_ascii(b.substr(start, 32));
        if (head.rfind("<!doctype", 0) == 0 || head.rfind("<html", 0) == 0)
            return ResourceKind::html_article;
    }
    return ResourceKind::unknown;
}

ResourceKind kind_from_content_type(std::string_view ct_full) {
    std::string ct = util::lower_ascii(ct_full.substr(0, ct_full.find(';')));
    ct = util::trim(ct);
    if (ct == "text/html" || ct == "application/xhtml+xml")
        return ResourceKind::html_article;
    if (ct == "application/pdf") return ResourceKind::pdf;
    if (ct.rfind("image/", 0) == 0) return ResourceKind::image;
    if (ct.rfind("audio/", 0) == 0) return ResourceKind::audio;
    if (ct.rfind("video/", 0) == 0) return ResourceKind::video;
    if (ct == "application/zip" || ct == "application/gzip" ||
        ct == "application/x-tar" || ct == "application/x-rar-compressed" ||
        ct == "application/x-7z-compressed")
        return ResourceKind::archive;
    if (ct == "application/x-msdownload" || ct == "application/x-executable")
        return ResourceKind::executable;
    return ResourceKind::unknown;
}

ResourceKind kind_from_extension(std::string_view ext) {
    static const std::unordered_map<std::string_view, ResourceKind> map = {
        {"pdf", ResourceKind::pdf},        {"jpg", ResourceKind::image},
        {"jpeg", ResourceKind::image},     {"png", ResourceKind::image},
        {"gif", ResourceKind::image},      {"webp", ResourceKind::image},
        {"mp3", ResourceKind::audio},      {"wav", ResourceKind::audio},
        {"ogg", ResourceKind::audio},      {"mp4", ResourceKind::video},
        {"avi", ResourceKind::video},      {"mkv", ResourceKind::video},
        {"webm", ResourceKind::video},     {"zip", ResourceKind::archive},
        {"gz", ResourceKind::archive},     {"tar", ResourceKind::archive},
        {"rar", ResourceKind::archive},    {"7z", ResourceKind::archive},
        {"exe", ResourceKind::executable}, {"dll", ResourceKind::executable},
        {"msi", ResourceKind::executable}, {"html", ResourceKind::html_article},
        {"htm", ResourceKind::html_article},
    };
    auto it = map.find(ext);
    return it == map.end() ? ResourceKind::unknown : it->second;
}

} // namespace

ResourceClass classify_resource(const std::string& url_str,
                                const std::map<std::string, std::string>& headers,
                                std::string_view first_bytes) {
    ResourceClass rc;
    auto ct_it = headers.find("content-type");
    if (ct_it != headers.end()) rc.content_type = ct_it->second;

    if (!first_bytes.empty()) {
        ResourceKind k = kind_from_magic(first_bytes);
        if (k != ResourceKind::unknown) {
            rc.kind = k;
            rc.via = ClassifiedVia::magic_bytes;
            return rc;
        }
    }
    if (!rc.content_type.empty()) {
        ResourceKind k = kind_from_content_type(rc.content_type);
        if (k != ResourceKind::unknown) {
            rc.kind = k;
            rc.via = ClassifiedVia::header;
            return rc;
        }
    }
    if (auto u = url::try_parse(url_str)) {
        ResourceKind k = kind_from_extension(url::path_extension(u->path));
        if (k != ResourceKind::unknown) {
            rc.kind = k;
            rc.via = ClassifiedVia::extension;
            return rc;
        }
    }
    rc.kind = ResourceKind::unknown;
    rc.via = ClassifiedVia::header;
    return rc;
}

namespace {

// Two-letter code -> ten most frequent function words.
const std::vector<std::pair<std::string, std::array<const char*, 10>>> kStopwords = {
    {"es", {"de", "la", "que", "el", "en", "y", "los", "del", "las", "por"}},
    {"en", {"the", "of", "to", "and", "in", "a", "is", "that", "for", "it"}},
    {"fr", {"de", "la", "le", "et", "les", "des", "en", "du", "une", "dans"}},
    {"de", {"der", "die", "und", "den", "von", "zu", "das", "mit", "sich", "auf"}},
    {"it", {"di", "e", "il", "la", "che", "a", "in", "per", "del", "una"}},
    {"pt", {"de", "a", "o", "que", "e", "do", "da", "em", "um", "para"}},
    {"hr", {"je", "i", "u", "na", "se", "da", "su", "za", "od", "kao"}},
    {"nl", {"de", "het", "een", "en", "van", "ik", "te", "dat", "die", "niet"}},
};

bool contains_any_class(const std::string& open_tag,
                        std::initializer_list<const char*> needles) {
    auto cls = html::attr_value(open_tag, "class");
    auto id = html::attr_value(open_tag, "id");
    std::string hay = util::lower_ascii((cls ? *cls : "") + " " + (id ? *id : ""));
    for (const char* n : needles)
        if (hay.find(n) != std::string::npos) return true;
    return false;
}

// Removes boilerplate sub-blocks from a container's inner HTML.
std::string prune_boilerplate(std::string html_in, bool* saw_paywall_marker) {
    static const char* kNoiseTags[] = {"nav", "aside", "footer", "header",
                                       "form", "script", "style"};
    for (const char* tag : kNoiseTags) {
        for (;;) {
            auto blocks = html::find_blocks(html_in, tag);
            if (blocks.empty()) break;
            const auto& b = blocks.front();
            size_t len = b.open_tag.size() + b.inner.size();
            size_t close = html_in.find('>', b.begin + len);
            size_t end = close == std::string::npos ? html_in.size() : close + 1;
            html_in.erase(b.begin, end - b.begin);
        }
    }
    for (;;) {
        bool removed = false;
        for (const auto& d : html::find_blocks(html_in, "div")) {
            bool paywall = contains_any_class(d.open_tag, {"paywall", "subscription"});
            if (paywall && saw_paywall_marker) *saw_paywall_marker = true;
            if (paywall ||
                contains_any_class(d.open_tag, {"ad", "advert", "sidebar", "comment",
                                                "promo", "related", "menu", "nav",
                                                "byline"})) {
                size_t len = d.open_tag.size() + d.inner.size();
                size_t close = html_in.find('>', d.begin + len);
                size_t end = close == std::string::npos ? html_in.size() : close + 1;
                html_in.erase(d.begin, end - d.begin);
                removed = true;
                break;
            }
        }
        if (!removed) break;
    }
    return html_in;
}

std::string paragraphs_of(const std::string& container_html) {
    std::string text;
    for (const auto& p : html::find_blocks(container_html, "p")) {
        std::string para = util::normalize_ws(html::strip_tags(p.inner));
        if (para.empty()) continue;
        if (!text.empty()) text += "\n";
        text += para;
    }
    return text;
}

} // namespace

std::string detect_language(const std::string& text) {
    auto tokens = util::fold_tokens(text);
    std::unordered_map<std::string, int> freq;
    for (const auto& t : tokens) ++freq[t];
    std::string best;
    int best_hits = 0;
    for (const auto& [lang, words] : kStopwords) {
        int hits = 0;
        for (const char* w : words) {
            auto it = freq.find(w);
            if (it != freq.end()) hits += it->second;
        }
        if (hits > best_hits) {
            best_hits = hits;
            best = lang;
        }
    }
    return best;
}

ExtractedContent extract_article_text(const std::string& body_html,
                                      const std::string& fallback_language) {
    ExtractedContent out;

    // Candidate container: <article>, then <main>, then the densest <div>,
    // then <body>.
    std::string container;
    auto pick_densest = [](const std::vector<html::TagBlock>& blocks) {
        std::string best;
        size_t best_len = 0;
        for (const auto& b : blocks) {
            size_t len = paragraphs_of(b.inner).size();
            if (len > best_len) {
                best_len = len;
                best = b.inner;
            }
        }
        return best;
    };
    container = pick_densest(html::find_blocks(body_html, "article"));
    if (container.empty()) container = pick_densest(html::find_blocks(body_html, "main"));
    if (container.empty()) container = pick_densest(html::find_blocks(body_html, "div"));
    if (container.empty()) {
        auto body = html::find_blocks(body_html, "body");
        if (!body.empty()) container = body.front().inner;
        else container = body_html;
    }

    bool paywall_marker = false;
    std::string pruned = prune_boilerplate(container, &paywall_marker);
    std::string text = paragraphs_of(pruned);
    if (text.empty()) text = util::normalize_ws(html::strip_tags(pruned));

    for (const auto& img : html::find_blocks(body_html, "img")) {
        if (auto src = html::attr_value(img.open_tag, "src")) {
            out.featured_image_url = *src;
            break;
        }
    }

    size_t tokens = util::word_count(text);
    static const char* kSubscribeWords[] = {"subscribe",  "suscr", "abonn",
                                            "subscripci", "assine"};
    bool subscribe_hint = false;
    std::string page_text = util::lower_ascii(html::strip_tags(body_html));
    for (const char* w : kSubscribeWords)
        if (page_text.find(w) != std::string::npos) subscribe_hint = true;

    if (tokens < 25 && (paywall_marker || subscribe_hint) && tokens > 0) {
        out.status = ContentStatus::paywalled;
        out.full_text.clear();
        return out;
    }
    if (text.empty()) {
        out.status = ContentStatus::no_content;
        out.full_text.clear();
        return out;
    }

    out.full_text = text;
    out.status = ContentStatus::ok;
    std::string lang = detect_language(text);
    out.detected_language = lang.empty() ? fallback_language : lang;
    return out;
}

FetchOutcome fetch_and_extract(harvest::Fetcher& fetcher, const std::string& u,
                               const std::string& fallback_language) {
    FetchOutcome out;
    harvest::HttpResponse r;
    try {
        r = fetcher.get(u);
    } catch (const FetchError&) {
        out.content.status = ContentStatus::no_content;
        return out;
    }
    out.http_status = r.status;
    if (r.status == 0 || r.status >= 400) {
        out.content.status = ContentStatus::no_content;
        return out;
    }
    out.resource = classify_resource(u, r.headers, std::string_view(r.body).substr(0, 64));
    if (is_non_html(out.resource.kind)) {
        out.content.status = ContentStatus::non_html;
        return out;
    }
    if (out.resource.kind == ResourceKind::unknown) {
        out.content.status = ContentStatus::no_content;
        return out;
    }
    out.content = extract_article_text(r.body, fallback_language);
    return out;
}

void apply_content(NewsRecord& record, const FetchOutcome& outcome,
                   ExtractionMethod method) {
    switch (outcome.content.status) {
        case ContentStatus::ok:
            record.full_text = outcome.content.full_text;
            record.detected_language = outcome.content.detected_language;
            if (outcome.content.featured_image_url)
                record.featured_image_url = outcome.content.featured_image_url;
            record.extraction_method = method;
            record.quality_flags.erase(flags::no_content);
            break;
        case ContentStatus::no_content:
            record.full_text.clear();
            record.set_flag(flags::no_content);
            break;
        case ContentStatus::paywalled:
            record.full_text.clear();
            record.set_flag(flags::paywalled);
            record.set_flag(flags::no_content);
            break;
        case ContentStatus::non_html:
            record.full_text.clear();
            record.set_flag(flags::non_html);
            record.set_flag(flags::no_content);
            break;
    }
    record.refresh_counts();
}

BackfillReport backfill_content(std::vector<NewsRecord>& records,
                                harvest::Fetcher& fetcher) {
    BackfillReport report;
    for (auto& rec : records) {
        if (!rec.full_text.empty()) continue; // never overwrite existing text
        if (rec.source_url.empty()) continue;
        ++report.attempted;
        FetchOutcome outcome =
            fetch_and_extract(fetcher, rec.source_url, rec.detected_language);
        apply_content(rec, outcome, ExtractionMethod::backfill);
        switch (outcome.content.status) {
            case ContentStatus::ok: ++report.filled; break;
            case ContentStatus::no_content: ++report.no_content; break;
            case ContentStatus::paywalled: ++report.paywalled; break;
            case ContentStatus::non_html: ++report.non_html; break;
        }
    }
    return report;
}

} // namespace news::extract
