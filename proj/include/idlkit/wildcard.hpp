#ifndef IDLKIT_WILDCARD_HPP
#define IDLKIT_WILDCARD_HPP

#include <string_view>

namespace idlkit {

/// Glob-style match used by LIKE: '*' matches any run (possibly empty),
/// '?' matches exactly one character, everything else matches literally.
/// Case-sensitive. Iterative with single backtrack point, O(n*m) worst case.
inline bool wildcard_match(std::string_view text, std::string_view pattern) {
    std::size_t t = 0, p = 0;
    std::size_t star = std::string_view::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++t;
            ++p;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string_view::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

} // namespace idlkit

#endif // IDLKIT_WILDCARD_HPP
