#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bezout {

// Domain error with a stable machine-readable code ("DegreeMismatch",
// "NoSolution", ...) plus a human-readable detail string. The CLI maps the
// code straight into its JSON error output, so codes are part of the API.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& detail) {
    throw Error(std::move(code), detail);
}

} // namespace bezout
