#pragma once

#include "news/clock.hpp"
#include "news/plan.hpp"
#include "news/types.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace news::harvest {

// Politeness and transport parameters. Defaults follow the collection
// design: randomized 1.5-4.0 s intervals, result cap 100.
struct FetchPolicy {
    double min_delay_s = 1.5;
    double max_delay_s = 4.0;
    std::vector<std::string> user_agents = {
        "Mozilla/5.0 (X11; Linux x86_64) Gecko/20100101 Firefox/126.0",
        "Mozilla/5.0 (Windows NT 10.0; Win64; x64) AppleWebKit/537.36 Chrome/125.0 Safari/537.36",
        "Mozilla/5.0 (Macintosh; Intel Mac OS X 14_4) AppleWebKit/605.1.15 Safari/605.1.15",
    };
    int result_cap = 100;
    int max_retries = 3;
    double timeout_s = 10.0;

    void validate() const; // throws ConfigError
};

// One aggregator hit as parsed from a listing.
struct RawResult {
    std::string id; // assigned sequentially by the executor
    std::string headline;
    std::string result_url; // possibly a redirect URL
    std::string outlet_label;
    std::optional<Timestamp> published_at;
    bool published_at_approximate = false;
    std::string edition_id;
    std::string query_digest;
    Timestamp collected_at = 0;
    Stage stage = Stage::s1_editions;
};

// Uniform draw from [min_delay_s, max_delay_s]; reproducible per seed.
double schedule_delay(const FetchPolicy& policy, std::mt19937_64& rng);

// Per-host delay enforcement plus User-Agent rotation. One scheduler owns
// all politeness state; workers may fetch different hosts concurrently.
class DelayScheduler {
  public:
    DelayScheduler(const FetchPolicy& policy, Clock& clock, std::uint64_t seed);

    // Blocks (via the clock) until a request to `host` is polite, then
    // reserves the next slot. Returns the request start time.
    double acquire(const std::string& host);
    const std::string& next_user_agent();
    Clock& clock() { return clock_; }
    const FetchPolicy& policy() const { return policy_; }

  private:
    FetchPolicy policy_;
    Clock& clock_;
    std::mt19937_64 rng_;
    std::unordered_map<std::string, double> next_ok_;
    size_t ua_index_ = 0;
    std::mutex mu_;
};

// Rewrites a logical URL to the URL actually fetched. Identity in
// production; the fixture maps publisher URLs onto the fixture server.
using UrlMapper = std::function<std::string(const std::string&)>;

struct HttpResponse {
    int status = 0;
    std::string body;
    std::string content_type;
    std::map<std::string, std::string> headers;
};

// HTTP front door for every module that fetches: politeness, UA rotation,
// retry with backoff, URL mapping. Sessions are anonymous; no cookie is
// ever sent.
class Fetcher {
  public:
    Fetcher(const FetchPolicy& policy, Clock& clock, std::uint64_t seed,
            UrlMapper mapper = nullptr);

    // GET with politeness + retries. Throws FetchError after max_retries.
    HttpResponse get(const std::string& url);
    // Single attempt, no retries; network failure -> status 0.
    HttpResponse get_once(const std::string& url);

    // Follows 3xx chains (depth <= 10) to the terminal publisher URL.
    // Throws ResolutionError on loops, depth overflow or non-2xx terminal.
    std::string resolve_redirect(const std::string& url);

    DelayScheduler& scheduler() { return sched_; }
    const FetchPolicy& policy() const { return policy_; }

  private:
    FetchPolicy policy_;
    DelayScheduler sched_;
    UrlMapper mapper_;
};

struct ListingEntry {
    std::string headline;
    std::string href;
    std::string outlet;
    std::string time_attr; // ISO timestamp when given
    std::string time_text; // "2 days ago" style
};

using ListingParser = std::function<std::vector<ListingEntry>(const std::string&)>;

// Parser for the fixture listing markup (<li class="result"> entries).
std::vector<ListingEntry> parse_listing_html(const std::string& html);

struct QueryOutcome {
    std::vector<RawResult> results;
    bool saturated = false; // |results| >= policy.result_cap
};

// Runs one query against `<endpoint>/search?q=...&edition=...`, parses the
// listing and resolves relative hrefs. Throws FetchError / ParseError.
QueryOutcome execute_query(const plan::QuerySpec& q, Fetcher& fetcher,
                           const std::string& endpoint,
                           const ListingParser& parser = parse_listing_html);

// Resolves published_at from either an ISO attribute or a relative phrase
// ("3 days ago"); relative forms are approximate.
struct PublishedAt {
    std::optional<Timestamp> when;
    bool approximate = false;
};
PublishedAt resolve_published_at(const std::string& time_attr,
                                 const std::string& time_text,
                                 Timestamp collected_at);

} // namespace news::harvest
