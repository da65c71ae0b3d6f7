#include "mmr/util/text.hpp"

#include <algorithm>
#include <cctype>

namespace mmr::text {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return std::string(s.substr(b, e - b));
}

std::string normalize_ws(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_run = false;
    for (char c : s) {
        if (is_space(c)) {
            in_run = true;
            continue;
        }
        if (in_run && !out.empty()) out.push_back(' ');
        in_run = false;
        out.push_back(c);
    }
    return out;
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::size_t count_words(std::string_view s) {
    std::size_t n = 0;
    bool in_word = false;
    for (char c : s) {
        if (is_space(c)) {
            in_word = false;
        } else if (!in_word) {
            in_word = true;
            ++n;
        }
    }
    return n;
}

std::vector<std::string> split_words(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) ++i;
        std::size_t b = i;
        while (i < s.size() && !is_space(s[i])) ++i;
        if (i > b) out.emplace_back(s.substr(b, i - b));
    }
    return out;
}

std::vector<std::string> split_lines(std::string_view s) {
    std::vector<std::string> out;
    std::size_t b = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '\n') {
            std::string_view line = s.substr(b, i - b);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            out.emplace_back(line);
            b = i + 1;
        }
    }
    if (!out.empty() && out.back().empty() && !s.empty() && s.back() == '\n') out.pop_back();
    return out;
}

namespace {

// Byte offsets where each word starts.
std::vector<std::size_t> word_starts(std::string_view s) {
    std::vector<std::size_t> starts;
    bool in_word = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (is_space(s[i])) {
            in_word = false;
        } else if (!in_word) {
            in_word = true;
            starts.push_back(i);
        }
    }
    return starts;
}

} // namespace

std::string tail_words(std::string_view s, std::size_t n) {
    auto starts = word_starts(s);
    if (starts.empty() || n == 0) return "";
    std::size_t from = starts.size() > n ? starts[starts.size() - n] : starts.front();
    return trim(s.substr(from));
}

std::string head_words(std::string_view s, std::size_t n) {
    auto starts = word_starts(s);
    if (starts.size() <= n) return trim(s);
    // Cut right before the (n+1)th word.
    return trim(s.substr(0, starts[n]));
}

std::string normalize_token(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    auto strippable = [](unsigned char c) {
        return std::isspace(c) || std::ispunct(c);
    };
    while (b < e && strippable(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && strippable(static_cast<unsigned char>(s[e - 1]))) --e;
    return to_lower(s.substr(b, e - b));
}

std::string extract_json_block(std::string_view s) {
    std::size_t start = s.find('{');
    while (start != std::string_view::npos) {
        int depth = 0;
        bool in_string = false;
        bool escaped = false;
        for (std::size_t i = start; i < s.size(); ++i) {
            char c = s[i];
            if (in_string) {
                if (escaped) {
                    escaped = false;
                } else if (c == '\\') {
                    escaped = true;
                } else if (c == '"') {
                    in_string = false;
                }
                continue;
            }
            if (c == '"') {
                in_string = true;
            } else if (c == '{') {
                ++depth;
            } else if (c == '}') {
                --depth;
                if (depth == 0) return std::string(s.substr(start, i - start + 1));
            }
        }
        start = s.find('{', start + 1);
    }
    return "";
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

} // namespace mmr::text
