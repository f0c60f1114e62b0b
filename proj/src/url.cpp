#include "news/url.hpp"

#include "news/errors.hpp"
#include "news/util.hpp"

#include <algorithm>
#include <cctype>

namespace news::url {

std::string Url::str() const {
    std::string out = scheme + "://" + host;
    if (port >= 0 && !is_default_port()) out += ":" + std::to_string(port);
    out += path.empty() ? "/" : path;
    if (!query.empty()) out += "?" + query;
    if (!fragment.empty()) out += "#" + fragment;
    return out;
}

std::string Url::host_port() const {
    if (port >= 0 && !is_default_port()) return host + ":" + std::to_string(port);
    return host;
}

bool Url::is_default_port() const {
    return port < 0 || (scheme == "http" && port == 80) ||
           (scheme == "https" && port == 443);
}

std::optional<Url> try_parse(std::string_view raw) {
    std::string s = util::trim(raw);
    auto scheme_end = s.find("://");
    if (scheme_end == std::string::npos || scheme_end == 0) return std::nullopt;
    Url u;
    u.scheme = util::lower_ascii(s.substr(0, scheme_end));
    if (u.scheme != "http" && u.scheme != "https") return std::nullopt;

    size_t rest = scheme_end + 3;
    size_t authority_end = s.find_first_of("/?#", rest);
    std::string authority = s.substr(rest, authority_end == std::string::npos
                                               ? std::string::npos
                                               : authority_end - rest);
    if (authority.empty()) return std::nullopt;
    auto colon = authority.rfind(':');
    if (colon != std::string::npos && colon + 1 < authority.size() &&
        std::all_of(authority.begin() + long(colon) + 1, authority.end(),
                    [](unsigned char c) { return std::isdigit(c); })) {
        u.port = std::stoi(authority.substr(colon + 1));
        authority = authority.substr(0, colon);
    }
    u.host = util::lower_ascii(authority);
    if (u.host.empty()) return std::nullopt;

    if (authority_end == std::string::npos) {
        u.path = "/";
        return u;
    }
    std::string tail = s.substr(authority_end);
    auto hash = tail.find('#');
    if (hash != std::string::npos) {
        u.fragment = tail.substr(hash + 1);
        tail = tail.substr(0, hash);
    }
    auto qm = tail.find('?');
    if (qm != std::string::npos) {
        u.query = tail.substr(qm + 1);
        tail = tail.substr(0, qm);
    }
    u.path = tail.empty() ? "/" : tail;
    return u;
}

Url parse(std::string_view raw) {
    auto u = try_parse(raw);
    if (!u) throw ParseError("invalid URL: " + std::string(raw));
    return *u;
}

std::string resolve_reference(const Url& base, std::string_view ref) {
    if (ref.empty()) return base.str();
    if (ref.find("://") != std::string_view::npos) return std::string(ref);
    if (ref.size() >= 2 && ref[0] == '/' && ref[1] == '/')
        return base.scheme + ":" + std::string(ref);
    Url out = base;
    out.query.clear();
    out.fragment.clear();
    if (ref[0] == '/') {
        out.path = std::string(ref);
    } else {
        auto slash = base.path.rfind('/');
        std::string dir = slash == std::string::npos ? "/" : base.path.substr(0, slash + 1);
        out.path = dir + std::string(ref);
    }
    auto hash = out.path.find('#');
    if (hash != std::string::npos) {
        out.fragment = out.path.substr(hash + 1);
        out.path = out.path.substr(0, hash);
    }
    auto qm = out.path.find('?');
    if (qm != std::string::npos) {
        out.query = out.path.substr(qm + 1);
        out.path = out.path.substr(0, qm);
    }
    return out.str();
}

std::vector<std::pair<std::string, std::string>> parse_query(std::string_view query) {
    std::vector<std::pair<std::string, std::string>> out;
    if (query.empty()) return out;
    for (const auto& part : util::split(query, '&')) {
        if (part.empty()) continue;
        auto eq = part.find('=');
        if (eq == std::string::npos)
            out.emplace_back(part, "");
        else
            out.emplace_back(part.substr(0, eq), part.substr(eq + 1));
    }
    return out;
}

std::string path_extension(std::string_view path) {
    auto slash = path.rfind('/');
    auto dot = path.rfind('.');
    if (dot == std::string_view::npos) return "";
    if (slash != std::string_view::npos && dot < slash) return "";
    return util::lower_ascii(path.substr(dot + 1));
}

// --- public suffix ---------------------------------------------------------

namespace {
// Enough of the public suffix list for news-outlet domains; the full list can
// be loaded from a data file when needed.
constexpr const char* kBuiltinRules = R"(com
org
net
edu
gov
int
mil
info
io
es
fr
de
it
uk
co.uk
ac.uk
gov.uk
hr
jp
co.jp
ac.jp
go.jp
us
ar
com.ar
gob.ar
mx
com.mx
gob.mx
br
com.br
pt
nl
be
at
ch
pl
cz
se
no
fi
dk
ie
gr
eu
cat
gob.es
gal
eus
news
media
press
online
digital
blog
site
app
dev
tv
fm
am
)";
} // namespace

PublicSuffixList PublicSuffixList::builtin() {
    return from_text(kBuiltinRules);
}

PublicSuffixList PublicSuffixList::from_file(const std::string& path) {
    return from_text(util::read_file(path));
}

PublicSuffixList PublicSuffixList::from_text(std::string_view text) {
    PublicSuffixList psl;
    for (auto& line : util::split(text, '\n')) {
        std::string rule = util::trim(line);
        if (rule.empty() || rule.starts_with("//")) continue;
        rule = util::lower_ascii(rule);
        if (rule.starts_with("!"))
            psl.exception_rules_.push_back(rule.substr(1));
        else if (rule.starts_with("*."))
            psl.wildcard_rules_.push_back(rule.substr(2));
        else
            psl.rules_.push_back(rule);
    }
    return psl;
}

size_t PublicSuffixList::suffix_length(std::string_view host) const {
    auto labels = util::split(host, '.');
    auto tail = [&](size_t n) {
        std::string s;
        for (size_t i = labels.size() - n; i < labels.size(); ++i) {
            if (!s.empty()) s += ".";
            s += labels[i];
        }
        return s;
    };
    size_t best = 1; // default rule: the rightmost label is a suffix
    for (size_t n = 1; n <= labels.size(); ++n) {
        std::string cand = tail(n);
        for (const auto& ex : exception_rules_)
            if (cand == ex) return n - 1;
        for (const auto& r : rules_)
            if (cand == r) best = std::max(best, n);
        if (n >= 2) {
            // "*.foo" matches "<label>.foo"
            std::string parent = tail(n - 1);
            for (const auto& w : wildcard_rules_)
                if (parent == w) best = std::max(best, n);
        }
    }
    return best;
}

std::string PublicSuffixList::registrable_domain(std::string_view host_in) const {
    std::string host = util::lower_ascii(util::trim(host_in));
    if (!host.empty() && host.back() == '.') host.pop_back();
    auto labels = util::split(host, '.');
    if (labels.size() <= 1) return host;
    size_t suffix = suffix_length(host);
    if (suffix >= labels.size()) return host; // host is itself a suffix
    size_t keep = suffix + 1;
    std::string out;
    for (size_t i = labels.size() - keep; i < labels.size(); ++i) {
        if (!out.empty()) out += ".";
        out += labels[i];
    }
    return out;
}

} // namespace news::url
