#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace news::url {

struct Url {
    std::string scheme;   // lowercase
    std::string host;     // lowercase
    int port = -1;        // -1 when not given
    std::string path;     // begins with '/' (or empty)
    std::string query;    // without '?'
    std::string fragment; // without '#'

    std::string str() const;
    std::string host_port() const; // "host" or "host:port"
    bool is_default_port() const;
};

// Parses an absolute http(s) URL. Throws ParseError on malformed input.
Url parse(std::string_view raw);
std::optional<Url> try_parse(std::string_view raw);

// Resolves `ref` (possibly relative) against `base`.
std::string resolve_reference(const Url& base, std::string_view ref);

std::vector<std::pair<std::string, std::string>> parse_query(std::string_view query);
std::string path_extension(std::string_view path); // lowercase, without dot

// Public-suffix rules for registrable-domain extraction. The rule set is
// data: a newline-separated list of suffixes, '*'-prefixed wildcards and
// '!'-prefixed exceptions, same grammar as the public suffix list.
class PublicSuffixList {
  public:
    static PublicSuffixList builtin();
    static PublicSuffixList from_file(const std::string& path);
    static PublicSuffixList from_text(std::string_view text);

    // "blogs.outlet.co.uk" -> "outlet.co.uk"; returns host unchanged when no
    // rule applies beyond the default single-label suffix.
    std::string registrable_domain(std::string_view host) const;

  private:
    std::vector<std::string> rules_;
    std::vector<std::string> wildcard_rules_;  // stored without "*."
    std::vector<std::string> exception_rules_; // stored without "!"
    size_t suffix_length(std::string_view host) const;
};

} // namespace news::url
