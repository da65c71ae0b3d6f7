#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mmr::text {

bool is_space(char c);

std::string trim(std::string_view s);

// Collapses every whitespace run to a single space and trims the ends.
std::string normalize_ws(std::string_view s);

std::string to_lower(std::string_view s);

// Whitespace-delimited token count.
std::size_t count_words(std::string_view s);

std::vector<std::string> split_words(std::string_view s);

std::vector<std::string> split_lines(std::string_view s);

// Suffix of s starting at the nth-from-last word, original spacing kept.
std::string tail_words(std::string_view s, std::size_t n);

// Prefix of s containing at most n words, original spacing kept.
std::string head_words(std::string_view s, std::size_t n);

// Trims whitespace plus ASCII punctuation from both ends and lowercases;
// used for one-word verdict normalization ("no." -> "no").
std::string normalize_token(std::string_view s);

// Extracts the first balanced {...} block, tolerating surrounding prose
// and markdown code fences. Returns empty string when none found.
std::string extract_json_block(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

} // namespace mmr::text
