#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

namespace mmr::jsonl {

using json = nlohmann::json;

// One JSON object per line, UTF-8. Blank lines are skipped on read.
std::vector<json> read_file(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, const std::vector<json>& records);

std::string read_text_file(const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, const std::string& content);

} // namespace mmr::jsonl
