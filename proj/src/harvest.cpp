#include "news/harvest.hpp"

#include "news/errors.hpp"
#include "news/html.hpp"
#include "news/url.hpp"

#include <httplib.h>

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace news::harvest {

void FetchPolicy::validate() const {
    if (min_delay_s <= 0 || min_delay_s > max_delay_s)
        throw ConfigError("fetch policy requires 0 < min_delay_s <= max_delay_s");
    if (user_agents.empty()) throw ConfigError("fetch policy needs at least one user agent");
    if (result_cap <= 0) throw ConfigError("result_cap must be positive");
    if (max_retries < 0) throw ConfigError("max_retries must be >= 0");
}

double schedule_delay(const FetchPolicy& policy, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(policy.min_delay_s, policy.max_delay_s);
    return dist(rng);
}

DelayScheduler::DelayScheduler(const FetchPolicy& policy, Clock& clock,
                               std::uint64_t seed)
    : policy_(policy), clock_(clock), rng_(seed) {
    policy_.validate();
}

double DelayScheduler::acquire(const std::string& host) {
    std::unique_lock lock(mu_);
    for (;;) {
        double t = clock_.now();
        auto it = next_ok_.find(host);
        if (it == next_ok_.end() || t >= it->second) {
            next_ok_[host] = t + schedule_delay(policy_, rng_);
            return t;
        }
        double wait = it->second - t;
        lock.unlock();
        clock_.sleep_for(wait);
        lock.lock();
    }
}

const std::string& DelayScheduler::next_user_agent() {
    std::lock_guard lock(mu_);
    const std::string& ua = policy_.user_agents[ua_index_ % policy_.user_agents.size()];
    ++ua_index_;
    return ua;
}

Fetcher::Fetcher(const FetchPolicy& policy, Clock& clock, std::uint64_t seed,
                 UrlMapper mapper)
    : policy_(policy), sched_(policy, clock, seed), mapper_(std::move(mapper)) {}

HttpResponse Fetcher::get_once(const std::string& logical_url) {
    std::string fetched = mapper_ ? mapper_(logical_url) : logical_url;
    url::Url u = url::parse(fetched);
    sched_.acquire(u.host_port());

    std::string origin = u.scheme + "://" + u.host_port();
    httplib::Client client(origin);
    client.set_follow_location(false);
    client.set_connection_timeout(int(policy_.timeout_s), 0);
    client.set_read_timeout(int(policy_.timeout_s), 0);
    // Anonymous sessions: a fresh client per request, UA only.
    httplib::Headers headers{{"User-Agent", sched_.next_user_agent()}};

    std::string target = u.path.empty() ? "/" : u.path;
    if (!u.query.empty()) target += "?" + u.query;
    auto res = client.Get(target, headers);

    HttpResponse out;
    if (!res) return out; // status 0 = transport failure
    out.status = res->status;
    out.body = res->body;
    for (const auto& [k, v] : res->headers) out.headers[util::lower_ascii(k)] = v;
    auto ct = out.headers.find("content-type");
    if (ct != out.headers.end()) out.content_type = ct->second;
    return out;
}

HttpResponse Fetcher::get(const std::string& url) {
    double backoff = policy_.max_delay_s;
    for (int attempt = 0;; ++attempt) {
        HttpResponse r = get_once(url);
        if (r.status != 0 && r.status < 500) return r;
        if (r.status >= 500 && attempt >= policy_.max_retries) return r;
        if (attempt >= policy_.max_retries)
            throw FetchError("fetch failed after " +
                             std::to_string(policy_.max_retries + 1) +
                             " attempts: " + url);
        sched_.clock().sleep_for(backoff);
        backoff *= 2;
    }
}

std::string Fetcher::resolve_redirect(const std::string& url) {
    std::string current = url;
    std::unordered_set<std::string> visited;
    for (int depth = 0; depth <= 10; ++depth) {
        if (!visited.insert(current).second)
            throw ResolutionError("redirect loop at " + current);
        HttpResponse r = get(current);
        if (r.status >= 200 && r.status < 300) return current;
        if (r.status >= 300 && r.status < 400) {
            auto loc = r.headers.find("location");
            if (loc == r.headers.end())
                throw ResolutionError("redirect without location: " + current,
                                      r.status);
            current = url::resolve_reference(url::parse(current), loc->second);
            continue;
        }
        throw ResolutionError("terminal status " + std::to_string(r.status) +
                                  " for " + current,
                              r.status);
    }
    throw ResolutionError("redirect chain deeper than 10: " + url);
}

std::vector<ListingEntry> parse_listing_html(const std::string& html_text) {
    std::vector<ListingEntry> out;
    for (const auto& li : html::find_blocks(html_text, "li")) {
        auto cls = html::attr_value(li.open_tag, "class");
        if (!cls || cls->find("result") == std::string::npos) continue;
        ListingEntry e;
        for (const auto& a : html::find_blocks(li.inner, "a")) {
            auto acls = html::attr_value(a.open_tag, "class");
            if (acls && acls->find("headline") == std::string::npos) continue;
            if (auto href = html::attr_value(a.open_tag, "href")) e.href = *href;
            e.headline = util::normalize_ws(html::strip_tags(a.inner));
            break;
        }
        for (const auto& sp : html::find_blocks(li.inner, "span")) {
            auto scls = html::attr_value(sp.open_tag, "class");
            if (scls && scls->find("outlet") != std::string::npos) {
                e.outlet = util::normalize_ws(html::strip_tags(sp.inner));
                break;
            }
        }
        for (const auto& tm : html::find_blocks(li.inner, "time")) {
            if (auto dt = html::attr_value(tm.open_tag, "datetime")) e.time_attr = *dt;
            e.time_text = util::normalize_ws(html::strip_tags(tm.inner));
            break;
        }
        out.push_back(std::move(e));
    }
    return out;
}

PublishedAt resolve_published_at(const std::string& time_attr,
                                 const std::string& time_text,
                                 Timestamp collected_at) {
    PublishedAt out;
    if (!time_attr.empty()) {
        out.when = util::parse_iso8601(time_attr);
        if (out.when) return out;
    }
    // "N minutes/hours/days ago"
    auto tokens = util::split_ws(util::lower_ascii(time_text));
    if (tokens.size() >= 3 && tokens.back() == "ago") {
        long n = 0;
        bool numeric = !tokens[0].empty() &&
                       std::all_of(tokens[0].begin(), tokens[0].end(),
                                   [](unsigned char c) { return std::isdigit(c); });
        if (numeric) n = std::stol(tokens[0]);
        long unit = 0;
        const std::string& u = tokens[1];
        if (u.rfind("minute", 0) == 0) unit = 60;
        else if (u.rfind("hour", 0) == 0) unit = 3600;
        else if (u.rfind("day", 0) == 0) unit = 86400;
        else if (u.rfind("week", 0) == 0) unit = 7 * 86400;
        else if (u.rfind("month", 0) == 0) unit = 30 * 86400;
        if (numeric && unit > 0) {
            out.when = collected_at - n * unit;
            out.approximate = true;
        }
    }
    return out;
}

namespace {

std::string url_encode(std::string_view s) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    for (unsigned char c : s) {
        if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
            out.push_back(char(c));
        } else {
            out.push_back('%');
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 15]);
        }
    }
    return out;
}

} // namespace

QueryOutcome execute_query(const plan::QuerySpec& q, Fetcher& fetcher,
                           const std::string& endpoint,
                           const ListingParser& parser) {
    std::string rendered = q.render();
    std::string digest = q.digest();
    url::Url base = url::parse(endpoint);
    std::string search_url = base.scheme + "://" + base.host_port() +
                             "/search?q=" + url_encode(rendered) +
                             "&edition=" + url_encode(q.edition.edition_id);
    HttpResponse r;
    try {
        r = fetcher.get(search_url);
    } catch (const FetchError& e) {
        throw FetchError(e.what(), digest);
    }
    if (r.status == 0)
        throw FetchError("endpoint unreachable: " + endpoint, digest);
    if (r.status != 200)
        throw FetchError("search returned status " + std::to_string(r.status),
                         digest);

    std::vector<ListingEntry> entries;
    try {
        entries = parser(r.body);
    } catch (const std::exception& e) {
        throw ParseError(std::string("listing parse failed: ") + e.what(), r.body);
    }

    QueryOutcome out;
    Timestamp collected = fetcher.scheduler().clock().wall_time();
    for (const auto& e : entries) {
        std::string headline = util::normalize_ws(e.headline);
        if (headline.empty() || e.href.empty()) continue; // not a result element
        RawResult res;
        res.headline = headline;
        res.result_url = e.href.find("://") != std::string::npos
                             ? e.href
                             : url::resolve_reference(base, e.href);
        res.outlet_label = e.outlet;
        auto pub = resolve_published_at(e.time_attr, e.time_text, collected);
        res.published_at = pub.when;
        res.published_at_approximate = pub.approximate;
        res.edition_id = q.edition.edition_id;
        res.query_digest = digest;
        res.collected_at = collected;
        res.stage = q.stage;
        out.results.push_back(std::move(res));
    }
    out.saturated = int(out.results.size()) >= fetcher.policy().result_cap;
    return out;
}

} // namespace news::harvest
