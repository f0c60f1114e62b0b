#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace news::html {

// &amp; &lt; &gt; &quot; &apos; &nbsp; and numeric (&#123; &#x1f;) forms.
std::string decode_entities(std::string_view s);

// Attribute value from an opening tag like `<a class="x" href='y'>`.
std::optional<std::string> attr_value(std::string_view open_tag, std::string_view name);

struct TagBlock {
    std::string open_tag; // full "<tag ...>" text
    std::string inner;    // content between open and matching close
    size_t begin = 0;     // offset of '<' in the source
};

// All blocks of `tag`, nesting-aware for the same tag name. Self-closing and
// unclosed tags yield empty inner text.
std::vector<TagBlock> find_blocks(std::string_view html, std::string_view tag);

// Removes tags (replaced by a space), drops <script>/<style> content
// entirely, decodes entities.
std::string strip_tags(std::string_view html);

} // namespace news::html
