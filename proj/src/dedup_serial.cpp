#include "news/dedup_serial.hpp"

#include "news/errors.hpp"

#include <algorithm>
#include <map>

namespace news::dedup {

namespace {

// Deliberately naive union-find, separate from the bucketed path.
size_t root_of(std::vector<size_t>& parent, size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
}

} // namespace

DedupOutcome dedup_merge_serial(const std::vector<DedupItem>& items,
                                double threshold) {
    if (threshold < 0.0 || threshold > 1.0)
        throw DomainError("dedup threshold outside [0,1]");

    const size_t n = items.size();
    DedupOutcome out;
    if (n == 0) return out;

    std::vector<std::string> canon(n);
    for (size_t i = 0; i < n; ++i)
        if (!items[i].url.empty()) canon[i] = canonicalize_url(items[i].url).key();

    std::vector<size_t> parent(n);
    for (size_t i = 0; i < n; ++i) parent[i] = i;

    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            bool dup = false;
            if (!canon[i].empty() && canon[i] == canon[j]) {
                dup = true;
            } else {
                bool date_ok = !(items[i].date && items[j].date) ||
                               *items[i].date == *items[j].date;
                if (date_ok &&
                    headline_similarity(items[i].headline, items[j].headline) >=
                        threshold)
                    dup = true;
            }
            if (dup) parent[root_of(parent, i)] = root_of(parent, j);
        }
    }

    // first-seen order of groups, earliest collected_at keeper
    std::map<size_t, std::vector<size_t>> groups_by_first;
    {
        std::map<size_t, std::vector<size_t>> by_root;
        for (size_t i = 0; i < n; ++i) by_root[root_of(parent, i)].push_back(i);
        for (auto& [root, members] : by_root) {
            (void)root;
            std::sort(members.begin(), members.end(), [&](size_t a, size_t b) {
                return items[a].order < items[b].order;
            });
            groups_by_first[items[members[0]].order] = members;
        }
    }

    for (auto& [first, members] : groups_by_first) {
        (void)first;
        size_t keeper = members[0];
        for (size_t m : members)
            if (items[m].collected_at < items[keeper].collected_at) keeper = m;
        out.unique_ids.push_back(items[keeper].id);
        if (members.size() < 2) continue;
        DedupDecision url_dec, head_dec;
        url_dec.kept_id = head_dec.kept_id = items[keeper].id;
        url_dec.reason = DedupReason::url_match;
        url_dec.similarity = 1.0;
        head_dec.reason = DedupReason::headline_match;
        head_dec.similarity = 1.0;
        for (size_t m : members) {
            if (m == keeper) continue;
            if (!canon[m].empty() && canon[m] == canon[keeper]) {
                url_dec.dropped_ids.push_back(items[m].id);
            } else {
                head_dec.dropped_ids.push_back(items[m].id);
                head_dec.similarity = std::min(
                    head_dec.similarity,
                    headline_similarity(items[keeper].headline, items[m].headline));
            }
        }
        if (!url_dec.dropped_ids.empty()) out.decisions.push_back(std::move(url_dec));
        if (!head_dec.dropped_ids.empty()) out.decisions.push_back(std::move(head_dec));
    }
    return out;
}

} // namespace news::dedup
