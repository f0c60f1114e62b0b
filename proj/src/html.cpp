#include "news/html.hpp"

#include "news/util.hpp"

#include <cctype>

namespace news::html {

std::string decode_entities(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out.push_back(s[i++]);
            continue;
        }
        size_t semi = s.find(';', i);
        if (semi == std::string_view::npos || semi - i > 10) {
            out.push_back(s[i++]);
            continue;
        }
        std::string_view ent = s.substr(i + 1, semi - i - 1);
        if (ent == "amp") out.push_back('&');
        else if (ent == "lt") out.push_back('<');
        else if (ent == "gt") out.push_back('>');
        else if (ent == "quot") out.push_back('"');
        else if (ent == "apos") out.push_back('\'');
        else if (ent == "nbsp") out.push_back(' ');
        else if (!ent.empty() && ent[0] == '#') {
            long code = 0;
            bool ok = false;
            if (ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X')) {
                for (size_t k = 2; k < ent.size(); ++k) {
                    char c = ent[k];
                    int d = std::isdigit((unsigned char)c) ? c - '0'
                            : (c >= 'a' && c <= 'f')       ? c - 'a' + 10
                            : (c >= 'A' && c <= 'F')       ? c - 'A' + 10
                                                           : -1;
                    if (d < 0) { ok = false; break; }
                    code = code * 16 + d;
                    ok = true;
                }
            } else {
                for (size_t k = 1; k < ent.size(); ++k) {
                    if (!std::isdigit((unsigned char)ent[k])) { ok = false; break; }
                    code = code * 10 + (ent[k] - '0');
                    ok = true;
                }
            }
            if (!ok || code <= 0 || code > 0x10FFFF) {
                out.push_back(s[i++]);
                continue;
            }
            // UTF-8 encode
            if (code < 0x80) {
                out.push_back(char(code));
            } else if (code < 0x800) {
                out.push_back(char(0xC0 | (code >> 6)));
                out.push_back(char(0x80 | (code & 0x3F)));
            } else if (code < 0x10000) {
                out.push_back(char(0xE0 | (code >> 12)));
                out.push_back(char(0x80 | ((code >> 6) & 0x3F)));
                out.push_back(char(0x80 | (code & 0x3F)));
            } else {
                out.push_back(char(0xF0 | (code >> 18)));
                out.push_back(char(0x80 | ((code >> 12) & 0x3F)));
                out.push_back(char(0x80 | ((code >> 6) & 0x3F)));
                out.push_back(char(0x80 | (code & 0x3F)));
            }
        } else {
            out.push_back(s[i++]);
            continue;
        }
        i = semi + 1;
    }
    return out;
}

std::optional<std::string> attr_value(std::string_view open_tag, std::string_view name) {
    std::string low = util::lower_ascii(open_tag);
    std::string needle = util::lower_ascii(name);
    size_t pos = 0;
    while ((pos = low.find(needle, pos)) != std::string::npos) {
        // must be a word boundary and followed by '='
        bool boundary = pos == 0 || !std::isalnum((unsigned char)low[pos - 1]);
        size_t after = pos + needle.size();
        while (after < low.size() && std::isspace((unsigned char)low[after])) ++after;
        if (!boundary || after >= low.size() || low[after] != '=') {
            pos += 1;
            continue;
        }
        ++after;
        while (after < low.size() && std::isspace((unsigned char)low[after])) ++after;
        if (after >= open_tag.size()) return std::nullopt;
        char quote = open_tag[after];
        if (quote == '"' || quote == '\'') {
            size_t close = open_tag.find(quote, after + 1);
            if (close == std::string_view::npos) return std::nullopt;
            return decode_entities(open_tag.substr(after + 1, close - after - 1));
        }
        size_t end = after;
        while (end < open_tag.size() && !std::isspace((unsigned char)open_tag[end]) &&
               open_tag[end] != '>')
            ++end;
        return decode_entities(open_tag.substr(after, end - after));
    }
    return std::nullopt;
}

namespace {

bool tag_name_at(std::string_view html, size_t pos, std::string_view name) {
    // pos points at '<' or after "</"
    if (pos + name.size() > html.size()) return false;
    for (size_t i = 0; i < name.size(); ++i)
        if (std::tolower((unsigned char)html[pos + i]) !=
            std::tolower((unsigned char)name[i]))
            return false;
    size_t after = pos + name.size();
    if (after >= html.size()) return false;
    char c = html[after];
    return c == '>' || c == '/' || std::isspace((unsigned char)c);
}

} // namespace

std::vector<TagBlock> find_blocks(std::string_view html, std::string_view tag) {
    std::vector<TagBlock> out;
    size_t i = 0;
    while (i < html.size()) {
        size_t open = html.find('<', i);
        if (open == std::string_view::npos) break;
        if (open + 1 < html.size() && tag_name_at(html, open + 1, tag)) {
            size_t gt = html.find('>', open);
            if (gt == std::string_view::npos) break;
            TagBlock blk;
            blk.begin = open;
            blk.open_tag = std::string(html.substr(open, gt - open + 1));
            if (blk.open_tag.size() >= 2 && blk.open_tag[blk.open_tag.size() - 2] == '/') {
                out.push_back(std::move(blk));
                i = gt + 1;
                continue;
            }
            // scan for the matching close, counting nested same-name tags
            int depth = 1;
            size_t scan = gt + 1;
            size_t inner_end = std::string_view::npos;
            while (scan < html.size()) {
                size_t lt = html.find('<', scan);
                if (lt == std::string_view::npos) break;
                if (lt + 1 < html.size() && html[lt + 1] == '/' &&
                    tag_name_at(html, lt + 2, tag)) {
                    if (--depth == 0) {
                        inner_end = lt;
                        break;
                    }
                    scan = lt + 2;
                } else if (tag_name_at(html, lt + 1, tag)) {
                    ++depth;
                    scan = lt + 1;
                } else {
                    scan = lt + 1;
                }
            }
            if (inner_end != std::string_view::npos) {
                blk.inner = std::string(html.substr(gt + 1, inner_end - gt - 1));
                i = inner_end;
            } else {
                i = gt + 1;
            }
            out.push_back(std::move(blk));
        } else {
            i = open + 1;
        }
    }
    return out;
}

std::string strip_tags(std::string_view html) {
    std::string out;
    out.reserve(html.size());
    size_t i = 0;
    while (i < html.size()) {
        if (html[i] == '<') {
            // skip script/style bodies wholesale
            for (std::string_view skip : {"script", "style"}) {
                if (i + 1 < html.size() && tag_name_at(html, i + 1, skip)) {
                    std::string close = "</" + std::string(skip);
                    size_t end = html.find(close, i);
                    if (end == std::string_view::npos) { i = html.size(); break; }
                    i = html.find('>', end);
                    i = i == std::string_view::npos ? html.size() : i;
                    break;
                }
            }
            if (i >= html.size()) break;
            size_t gt = html.find('>', i);
            if (gt == std::string_view::npos) break;
            out.push_back(' ');
            i = gt + 1;
        } else {
            out.push_back(html[i++]);
        }
    }
    return decode_entities(out);
}

} // namespace news::html
