#include "mmr/util/jsonl.hpp"

#include <fstream>
#include <sstream>

#include "mmr/util/error.hpp"
#include "mmr/util/text.hpp"

namespace mmr::jsonl {

std::vector<json> read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("io-failure", "cannot open " + path.string());
    std::vector<json> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (text::trim(line).empty()) continue;
        json record = json::parse(line, nullptr, false);
        if (record.is_discarded()) {
            throw Error("parse-error",
                        path.string() + ":" + std::to_string(lineno) + " is not valid JSON");
        }
        out.push_back(std::move(record));
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::vector<json>& records) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("io-failure", "cannot write " + path.string());
    for (const auto& r : records) out << r.dump() << "\n";
    if (!out) throw Error("io-failure", "short write to " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io-failure", "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("io-failure", "cannot write " + path.string());
    out << content;
    if (!out) throw Error("io-failure", "short write to " + path.string());
}

} // namespace mmr::jsonl
