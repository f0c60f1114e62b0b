#include "news/simnews.hpp"

#include "news/errors.hpp"
#include "news/url.hpp"
#include "news/util.hpp"

#include <httplib.h>
#include <json.hpp>

#include <atomic>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace news::simnews {

using nlohmann::json;

std::string to_string(NoiseKind k) {
    switch (k) {
        case NoiseKind::pdf: return "pdf";
        case NoiseKind::image: return "image";
        case NoiseKind::audio: return "audio";
        case NoiseKind::video: return "video";
        case NoiseKind::archive: return "archive";
        case NoiseKind::executable: return "executable";
        case NoiseKind::homepage: return "homepage";
        case NoiseKind::section_index: return "section_index";
        case NoiseKind::placeholder_text: return "placeholder_text";
        case NoiseKind::adult_seo: return "adult_seo";
    }
    return "pdf";
}

std::optional<NoiseKind> noise_kind_from_string(std::string_view s) {
    for (int i = 0; i <= int(NoiseKind::adult_seo); ++i)
        if (to_string(NoiseKind(i)) == s) return NoiseKind(i);
    return std::nullopt;
}

std::string FixtureCorpus::resolve_alias(const std::string& u) const {
    std::string cur = u;
    for (int i = 0; i < 16; ++i) {
        auto it = redirects.find(cur);
        if (it == redirects.end()) return cur;
        cur = it->second;
    }
    return cur;
}

void FixtureCorpus::validate() const {
    std::unordered_set<std::string> urls;
    for (const auto& a : articles)
        if (!urls.insert(a.url).second)
            throw CorpusError("duplicate corpus url: " + a.url);
    for (const auto& n : noise)
        if (!urls.insert(n.url).second)
            throw CorpusError("duplicate corpus url: " + n.url);
    for (const auto& [alias, target] : redirects) {
        if (!urls.insert(alias).second)
            throw CorpusError("duplicate corpus url: " + alias);
        (void)target;
    }
    for (const auto& [key, listed] : listings) {
        for (const auto& u : listed) {
            std::string final = resolve_alias(u);
            if (!urls.count(final) || redirects.count(final))
                throw CorpusError("listing '" + key +
                                  "' references undefined url: " + u);
        }
    }
    for (const auto& a : articles) {
        if (a.contains_keyword && !topic.empty() &&
            !util::icontains(a.body, topic) && !util::icontains(a.headline, topic))
            throw CorpusError("article marked contains_keyword lacks topic: " + a.url);
    }
    if (!placeholder_body.empty() && !topic.empty() &&
        util::icontains(placeholder_body, topic))
        throw CorpusError("placeholder body must not contain the topic string");
}

FixtureCorpus corpus_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw CorpusError(std::string("corpus parse error: ") + e.what());
    }
    FixtureCorpus c;
    c.topic = j.value("topic", "");
    c.placeholder_body = j.value("placeholder_body", "");
    for (const auto& a : j.value("articles", json::array())) {
        FixtureArticle art;
        art.url = a.at("url").get<std::string>();
        art.headline = a.at("headline").get<std::string>();
        art.outlet = a.value("outlet", "");
        art.language = a.value("language", "en");
        art.body = a.value("body", "");
        art.published_at = a.value("published_at", "");
        art.image_url = a.value("image", "");
        art.contains_keyword = a.value("contains_keyword", true);
        art.paywalled = a.value("paywalled", false);
        c.articles.push_back(std::move(art));
    }
    for (const auto& n : j.value("noise", json::array())) {
        FixtureNoise noi;
        auto kind = noise_kind_from_string(n.at("kind").get<std::string>());
        if (!kind)
            throw CorpusError("unknown noise kind: " +
                              n.at("kind").get<std::string>());
        noi.kind = *kind;
        noi.url = n.at("url").get<std::string>();
        noi.headline = n.value("headline", "");
        noi.outlet = n.value("outlet", "");
        c.noise.push_back(std::move(noi));
    }
    for (const auto& [alias, target] : j.value("redirects", json::object()).items())
        c.redirects[alias] = target.get<std::string>();
    for (const auto& [key, arr] : j.value("listings", json::object()).items()) {
        std::vector<std::string> urls;
        for (const auto& u : arr) urls.push_back(u.get<std::string>());
        c.listings[key] = std::move(urls);
    }
    c.validate();
    return c;
}

FixtureCorpus load_corpus(const std::string& path) {
    return corpus_from_json(util::read_file(path));
}

std::string default_corpus_path() {
    return std::string(NEWSHARVEST_DATA_DIR) + "/corpus/default_corpus.json";
}

namespace {

std::string escape_html(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string listing_label(const FixtureCorpus& c, const std::string& final_url) {
    for (const auto& a : c.articles)
        if (a.url == final_url) return a.headline;
    for (const auto& n : c.noise) {
        if (n.url != final_url) continue;
        if (!n.headline.empty()) return n.headline;
        return "Resource " + to_string(n.kind) + " " + final_url;
    }
    return final_url;
}

std::string listing_outlet(const FixtureCorpus& c, const std::string& final_url) {
    for (const auto& a : c.articles)
        if (a.url == final_url) return a.outlet;
    for (const auto& n : c.noise)
        if (n.url == final_url) return n.outlet;
    return "";
}

std::string listing_time(const FixtureCorpus& c, const std::string& final_url) {
    for (const auto& a : c.articles)
        if (a.url == final_url) return a.published_at;
    return "";
}

} // namespace

std::string render_listing_page(const FixtureCorpus& corpus,
                                const std::vector<std::string>& urls) {
    std::string out = "<!doctype html>\n<html><body>\n<ol class=\"results\">\n";
    for (const auto& u : urls) {
        std::string final = corpus.resolve_alias(u);
        out += "<li class=\"result\"><a class=\"headline\" href=\"" +
               escape_html(u) + "\">" + escape_html(listing_label(corpus, final)) +
               "</a> <span class=\"outlet\">" +
               escape_html(listing_outlet(corpus, final)) + "</span>";
        std::string t = listing_time(corpus, final);
        if (!t.empty())
            out += " <time datetime=\"" + escape_html(t) + "\"></time>";
        out += "</li>\n";
    }
    out += "</ol>\n</body></html>\n";
    return out;
}

std::string render_article_page(const FixtureArticle& a) {
    std::string out =
        "<!doctype html>\n<html><head><title>" + escape_html(a.headline) +
        "</title><meta name=\"language\" content=\"" + escape_html(a.language) +
        "\"></head>\n<body>\n"
        "<nav class=\"nav\"><a href=\"/\">Home</a> <a href=\"/news\">News</a> "
        "<a href=\"/contact\">Contact</a></nav>\n"
        "<aside class=\"sidebar\">Newsletter signup. Advertisement block. "
        "Trending stories.</aside>\n"
        "<article>\n<h1>" + escape_html(a.headline) + "</h1>\n";
    if (a.paywalled) {
        out += "<div class=\"paywall\">Subscribe to continue reading</div>\n";
        auto words = util::split_ws(a.body);
        std::string teaser;
        for (size_t i = 0; i < std::min<size_t>(10, words.size()); ++i) {
            if (!teaser.empty()) teaser += " ";
            teaser += words[i];
        }
        out += "<p>" + escape_html(teaser) + "</p>\n";
    } else {
        for (const auto& para : util::split(a.body, '\n'))
            if (!para.empty()) out += "<p>" + escape_html(para) + "</p>\n";
    }
    if (!a.image_url.empty())
        out += "<img src=\"" + escape_html(a.image_url) + "\">\n";
    out += "</article>\n<footer>(c) " + escape_html(a.outlet) +
           " - all rights reserved</footer>\n</body></html>\n";
    return out;
}

namespace {

struct Payload {
    std::string content_type;
    std::string body;
};

Payload noise_payload(const FixtureCorpus& corpus, const FixtureNoise& n) {
    switch (n.kind) {
        case NoiseKind::pdf:
            return {"application/pdf",
                    "%PDF-1.4\n% fixture technical report\n1 0 obj\n<< /Type "
                    "/Catalog >>\nendobj\ntrailer\n%%EOF\n"};
        case NoiseKind::image:
            return {"image/png", std::string("\x89PNG\r\n\x1a\n", 8) + "fixturepixels"};
        case NoiseKind::audio:
            return {"audio/mpeg", std::string("ID3\x03\x00", 5) + "fixtureaudio"};
        case NoiseKind::video:
            return {"video/mp4",
                    std::string("\x00\x00\x00\x18", 4) + "ftypmp42fixturevideo"};
        case NoiseKind::archive:
            return {"application/zip", std::string("PK\x03\x04", 4) + "fixturezip"};
        case NoiseKind::executable:
            return {"application/octet-stream", std::string("MZ\x90\x00", 4) + "fixturebin"};
        case NoiseKind::homepage:
            return {"text/html",
                    "<!doctype html><html><body><nav><a href=\"/news\">News</a> "
                    "<a href=\"/sports\">Sports</a> <a href=\"/economy\">Economy"
                    "</a></nav><ul class=\"teasers\"><li><a href=\"/a1\">Local "
                    "festival opens</a></li><li><a href=\"/a2\">Transit strike "
                    "update</a></li><li><a href=\"/a3\">Weather outlook</a></li>"
                    "</ul></body></html>"};
        case NoiseKind::section_index:
            return {"text/html",
                    "<!doctype html><html><body><h2>Section archive</h2><ul "
                    "class=\"index\"><li><a href=\"/tag/energy/p1\">Archive page "
                    "1</a></li><li><a href=\"/tag/energy/p2\">Archive page 2</a>"
                    "</li></ul></body></html>"};
        case NoiseKind::placeholder_text: {
            std::string page =
                "<!doctype html><html><body><article><h1>" +
                escape_html(n.headline.empty() ? "Untitled" : n.headline) +
                "</h1>";
            for (const auto& para : util::split(corpus.placeholder_body, '\n'))
                if (!para.empty()) page += "<p>" + escape_html(para) + "</p>";
            page += "</article></body></html>";
            return {"text/html", page};
        }
        case NoiseKind::adult_seo: {
            // Keyword stuffing with trending terms; the topic string never
            // appears in the served body (cloaking).
            std::string stuffed;
            for (int i = 0; i < 12; ++i)
                stuffed +=
                    "<p>hot singles crypto giveaway fusion energy breakthrough "
                    "miracle diet celebrity scandal free stream adult content "
                    "click now limited offer</p>";
            return {"text/html",
                    "<!doctype html><html><head><meta name=\"keywords\" "
                    "content=\"" + escape_html(corpus.topic) +
                    " trending news breaking\"></head><body>" + stuffed +
                    "</body></html>"};
        }
    }
    return {"text/plain", ""};
}

} // namespace

harvest::UrlMapper make_fixture_mapper(const std::string& endpoint) {
    url::Url base = url::parse(endpoint);
    std::string origin = base.scheme + "://" + base.host_port();
    return [base, origin](const std::string& logical) -> std::string {
        auto u = url::try_parse(logical);
        if (!u) return logical;
        if (u->host == base.host && u->port == base.port) return logical;
        std::string mapped = origin + "/site/" + u->host + u->path;
        if (!u->query.empty()) mapped += "?" + u->query;
        return mapped;
    };
}

struct FixtureServer::Impl {
    FixtureCorpus corpus;
    httplib::Server server;
    std::thread thread;
    int port = 0;
    std::unordered_map<std::string, const FixtureArticle*> articles_by_key;
    std::unordered_map<std::string, const FixtureNoise*> noise_by_key;
    std::unordered_map<std::string, std::string> redirects_by_key; // key -> target url

    static std::string key_of(const std::string& logical_url) {
        auto u = url::try_parse(logical_url);
        if (!u) return logical_url;
        std::string p = u->path.empty() ? "/" : u->path;
        return u->host + p;
    }

    void index() {
        for (const auto& a : corpus.articles) articles_by_key[key_of(a.url)] = &a;
        for (const auto& n : corpus.noise) noise_by_key[key_of(n.url)] = &n;
        for (const auto& [alias, target] : corpus.redirects)
            redirects_by_key[key_of(alias)] = target;
    }

    void handle_site(const std::string& host, const std::string& path,
                     httplib::Response& res) {
        std::string key = host + path;
        if (auto it = redirects_by_key.find(key); it != redirects_by_key.end()) {
            res.status = 302;
            res.set_header("Location", it->second);
            return;
        }
        if (auto it = articles_by_key.find(key); it != articles_by_key.end()) {
            res.set_content(render_article_page(*it->second), "text/html");
            return;
        }
        if (auto it = noise_by_key.find(key); it != noise_by_key.end()) {
            Payload p = noise_payload(corpus, *it->second);
            res.set_content(p.body, p.content_type);
            return;
        }
        res.status = 404;
        res.set_content("not found: " + key, "text/plain");
    }
};

FixtureServer::FixtureServer(FixtureCorpus corpus) : impl_(new Impl) {
    impl_->corpus = std::move(corpus);
    impl_->corpus.validate();
    impl_->index();

    impl_->server.Get("/search", [this](const httplib::Request& req,
                                        httplib::Response& res) {
        std::string q = req.get_param_value("q");
        std::string edition = req.get_param_value("edition");
        std::string key = edition + "|" + q;
        auto it = impl_->corpus.listings.find(key);
        static const std::vector<std::string> kEmpty;
        const auto& urls = it == impl_->corpus.listings.end() ? kEmpty : it->second;
        res.set_content(render_listing_page(impl_->corpus, urls), "text/html");
    });

    impl_->server.Get(R"(/site/([^/]+)(/.*)?)", [this](const httplib::Request& req,
                                                       httplib::Response& res) {
        std::string host = req.matches[1];
        std::string path = req.matches.size() > 2 ? std::string(req.matches[2]) : "";
        if (path.empty()) path = "/";
        impl_->handle_site(host, path, res);
    });
}

FixtureServer::~FixtureServer() {
    stop();
}

void FixtureServer::start(int port) {
    if (port == 0) {
        impl_->port = impl_->server.bind_to_any_port("127.0.0.1");
        if (impl_->port <= 0) throw ConfigError("fixture server: bind failed");
    } else {
        if (!impl_->server.bind_to_port("127.0.0.1", port))
            throw ConfigError("fixture server: bind failed on port " +
                              std::to_string(port));
        impl_->port = port;
    }
    impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
}

void FixtureServer::stop() {
    if (impl_ && impl_->thread.joinable()) {
        impl_->server.stop();
        impl_->thread.join();
    }
}

int FixtureServer::port() const {
    return impl_->port;
}

std::string FixtureServer::base_url() const {
    return "http://127.0.0.1:" + std::to_string(impl_->port);
}

const FixtureCorpus& FixtureServer::corpus() const {
    return impl_->corpus;
}

} // namespace news::simnews
