#pragma once

#include "news/harvest.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace news::simnews {

// Noise classes the aggregator is known to surface.
enum class NoiseKind {
    pdf,
    image,
    audio,
    video,
    archive,
    executable,
    homepage,
    section_index,
    placeholder_text,
    adult_seo,
};

std::string to_string(NoiseKind k);
std::optional<NoiseKind> noise_kind_from_string(std::string_view s);

struct FixtureArticle {
    std::string url; // logical publisher URL
    std::string headline;
    std::string outlet;
    std::string language;
    std::string body; // paragraphs separated by '\n'
    std::string published_at; // ISO-8601, may be empty
    std::string image_url;    // may be empty
    bool contains_keyword = true;
    bool paywalled = false;
};

struct FixtureNoise {
    NoiseKind kind = NoiseKind::pdf;
    std::string url;
    std::string headline; // listing label; derived from kind when empty
    std::string outlet;
};

struct FixtureCorpus {
    std::string topic;
    std::string placeholder_body; // shared verbatim by all placeholder_text pages
    std::vector<FixtureArticle> articles;
    std::vector<FixtureNoise> noise;
    std::map<std::string, std::string> redirects;            // alias -> target
    std::map<std::string, std::vector<std::string>> listings; // "edition|query" -> urls

    // Checks URL uniqueness, listing references and keyword consistency.
    // Throws CorpusError naming the offending URL.
    void validate() const;

    // Follows redirect aliases to the final corpus URL (bounded).
    std::string resolve_alias(const std::string& url) const;
};

FixtureCorpus load_corpus(const std::string& path);
FixtureCorpus corpus_from_json(const std::string& json_text);

// Path to the corpus bundled under data/.
std::string default_corpus_path();

// Publisher page HTML for an article, exactly as the fixture serves it.
std::string render_article_page(const FixtureArticle& a);
std::string render_listing_page(const FixtureCorpus& corpus,
                                const std::vector<std::string>& urls);

// Maps logical publisher URLs onto `<endpoint>/site/<host><path>` so an
// offline run never leaves the fixture server.
harvest::UrlMapper make_fixture_mapper(const std::string& endpoint);

class FixtureServer {
  public:
    explicit FixtureServer(FixtureCorpus corpus);
    ~FixtureServer();
    FixtureServer(const FixtureServer&) = delete;
    FixtureServer& operator=(const FixtureServer&) = delete;

    // Binds 127.0.0.1; port 0 picks a free port. Throws ConfigError on
    // bind failure.
    void start(int port = 0);
    void stop();
    int port() const;
    std::string base_url() const;
    const FixtureCorpus& corpus() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace news::simnews
