#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mmr {

// Runtime error carrying a stable machine-readable code alongside the
// human-readable message. Codes are kebab-case (e.g. "scripted-miss",
// "dimension-mismatch") and are what tests and the CLI match on.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace mmr
