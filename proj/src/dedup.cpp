#include "news/dedup.hpp"

#include "news/errors.hpp"
#include "news/url.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace news::dedup {

const std::vector<std::string> kDefaultTrackingParams = {
    "utm_source", "utm_medium", "utm_campaign", "utm_term", "utm_content",
    "fbclid",     "gclid",      "igshid",       "mc_cid",   "mc_eid",
};

namespace {

bool is_tracking(const std::string& name, const std::vector<std::string>& params) {
    std::string low = util::lower_ascii(name);
    if (low.rfind("utm_", 0) == 0) return true;
    return std::find(params.begin(), params.end(), low) != params.end();
}

} // namespace

CanonicalUrl canonicalize_url(const std::string& raw) {
    return canonicalize_url(raw, kDefaultTrackingParams);
}

CanonicalUrl canonicalize_url(const std::string& raw,
                              const std::vector<std::string>& tracking_params) {
    url::Url u = url::parse(raw);
    CanonicalUrl c;
    c.host = u.host; // parse already lowercases; default ports dropped here
    c.path = u.path.empty() ? "/" : u.path;
    while (c.path.size() > 1 && c.path.back() == '/') c.path.pop_back();
    auto params = url::parse_query(u.query);
    params.erase(std::remove_if(params.begin(), params.end(),
                                [&](const auto& kv) {
                                    return is_tracking(kv.first, tracking_params);
                                }),
                 params.end());
    std::sort(params.begin(), params.end());
    std::string q;
    for (const auto& [k, v] : params) {
        if (!q.empty()) q += "&";
        q += k;
        if (!v.empty()) q += "=" + v;
    }
    c.query = q;
    return c;
}

double headline_similarity(const std::string& h1, const std::string& h2) {
    auto t1 = util::fold_tokens(h1);
    auto t2 = util::fold_tokens(h2);
    std::sort(t1.begin(), t1.end());
    t1.erase(std::unique(t1.begin(), t1.end()), t1.end());
    std::sort(t2.begin(), t2.end());
    t2.erase(std::unique(t2.begin(), t2.end()), t2.end());
    if (t1.empty() && t2.empty()) return 1.0;
    if (t1.empty() || t2.empty()) return 0.0;
    size_t inter = 0, i = 0, j = 0;
    while (i < t1.size() && j < t2.size()) {
        if (t1[i] == t2[j]) {
            ++inter;
            ++i;
            ++j;
        } else if (t1[i] < t2[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    size_t uni = t1.size() + t2.size() - inter;
    return double(inter) / double(uni);
}

std::string to_string(DedupReason r) {
    return r == DedupReason::url_match ? "url_match" : "headline_match";
}

namespace {

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = i;
    }
    size_t find(size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

bool dates_compatible(const DedupItem& a, const DedupItem& b) {
    if (a.date && b.date) return *a.date == *b.date;
    return true; // missing dates fall back to headline-only matching
}

} // namespace

DedupOutcome dedup_merge(const std::vector<DedupItem>& items, double threshold) {
    if (threshold < 0.0 || threshold > 1.0)
        throw DomainError("dedup threshold outside [0,1]");

    const size_t n = items.size();
    DedupOutcome out;
    if (n == 0) return out;

    // Canonical keys; empty URLs never match by URL.
    std::vector<std::string> canon(n);
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < (long long)n; ++i) {
        if (!items[i].url.empty())
            canon[i] = canonicalize_url(items[i].url).key();
    }

    UnionFind uf(n);
    std::unordered_map<std::string, size_t> first_by_url;
    first_by_url.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (canon[i].empty()) continue;
        auto [it, inserted] = first_by_url.emplace(canon[i], i);
        if (!inserted) uf.unite(i, it->second);
    }

    // Headline candidates from a token inverted index; a pair with Jaccard
    // >= threshold > 0 shares at least one token. Empty headlines share the
    // sentinel bucket, and threshold 0 degenerates to all pairs.
    std::vector<std::pair<size_t, size_t>> cand;
    if (threshold <= 0.0) {
        cand.reserve(n * (n - 1) / 2);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) cand.emplace_back(i, j);
    } else {
        std::unordered_map<std::string, std::vector<size_t>> postings;
        for (size_t i = 0; i < n; ++i) {
            auto toks = util::fold_tokens(items[i].headline);
            std::sort(toks.begin(), toks.end());
            toks.erase(std::unique(toks.begin(), toks.end()), toks.end());
            if (toks.empty()) {
                postings[""].push_back(i);
            } else {
                for (auto& t : toks) postings[t].push_back(i);
            }
        }
        std::unordered_set<std::uint64_t> seen;
        for (const auto& [tok, ids] : postings) {
            (void)tok;
            if (ids.size() < 2) continue;
            for (size_t a = 0; a < ids.size(); ++a) {
                for (size_t b = a + 1; b < ids.size(); ++b) {
                    size_t i = std::min(ids[a], ids[b]);
                    size_t j = std::max(ids[a], ids[b]);
                    if (seen.insert(std::uint64_t(i) << 32 | j).second)
                        cand.emplace_back(i, j);
                }
            }
        }
        std::sort(cand.begin(), cand.end());
    }

    std::vector<char> qualifies(cand.size(), 0);
#pragma omp parallel for schedule(dynamic, 256)
    for (long long k = 0; k < (long long)cand.size(); ++k) {
        auto [i, j] = cand[k];
        if (!dates_compatible(items[i], items[j])) continue;
        if (headline_similarity(items[i].headline, items[j].headline) >= threshold)
            qualifies[k] = 1;
    }
    for (size_t k = 0; k < cand.size(); ++k)
        if (qualifies[k]) uf.unite(cand[k].first, cand[k].second);

    // Group resolution: keeper = earliest collected_at, then first-seen.
    std::unordered_map<size_t, std::vector<size_t>> groups;
    for (size_t i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);

    struct Group {
        size_t first_order;
        size_t keeper;
        std::vector<size_t> members;
    };
    std::vector<Group> ordered;
    ordered.reserve(groups.size());
    for (auto& [root, members] : groups) {
        (void)root;
        std::sort(members.begin(), members.end(),
                  [&](size_t a, size_t b) { return items[a].order < items[b].order; });
        size_t keeper = members[0];
        for (size_t m : members)
            if (items[m].collected_at < items[keeper].collected_at) keeper = m;
        ordered.push_back(Group{items[members[0]].order, keeper, members});
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const Group& a, const Group& b) { return a.first_order < b.first_order; });

    for (const auto& g : ordered) {
        out.unique_ids.push_back(items[g.keeper].id);
        if (g.members.size() < 2) continue;
        DedupDecision url_dec, head_dec;
        url_dec.kept_id = head_dec.kept_id = items[g.keeper].id;
        url_dec.reason = DedupReason::url_match;
        url_dec.similarity = 1.0;
        head_dec.reason = DedupReason::headline_match;
        head_dec.similarity = 1.0;
        for (size_t m : g.members) {
            if (m == g.keeper) continue;
            bool by_url = !canon[m].empty() && canon[m] == canon[g.keeper];
            if (by_url) {
                url_dec.dropped_ids.push_back(items[m].id);
            } else {
                head_dec.dropped_ids.push_back(items[m].id);
                head_dec.similarity =
                    std::min(head_dec.similarity,
                             headline_similarity(items[g.keeper].headline,
                                                 items[m].headline));
            }
        }
        if (!url_dec.dropped_ids.empty()) out.decisions.push_back(std::move(url_dec));
        if (!head_dec.dropped_ids.empty()) out.decisions.push_back(std::move(head_dec));
    }
    return out;
}

std::string decisions_to_delimited(const std::vector<DedupDecision>& decisions) {
    std::string out = "kept_id\tdropped_id\treason\tsimilarity\n";
    char buf[32];
    for (const auto& d : decisions) {
        for (const auto& dropped : d.dropped_ids) {
            std::snprintf(buf, sizeof(buf), "%.6f", d.similarity);
            out += d.kept_id + "\t" + dropped + "\t" + to_string(d.reason) + "\t" +
                   buf + "\n";
        }
    }
    return out;
}

} // namespace news::dedup
