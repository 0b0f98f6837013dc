#pragma once

#include <stdexcept>
#include <string>

namespace polywitness {

/**
 * Library-wide error type.  Every failure mode carries a stable machine
 * readable code (e.g. "AffinelyDependent", "NotALattice", "PlacementFailed")
 * plus a human readable message.  Codes are part of the public contract:
 * the CLI maps them to exit status and callers may dispatch on them.
 */
class Error : public std::runtime_error {
public:
    Error(std::string code, std::string message)
        : std::runtime_error(code + ": " + message),
          code_(std::move(code)),
          message_(std::move(message)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string code_;
    std::string message_;
};

[[noreturn]] inline void fail(const char* code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, const char* code, const std::string& message) {
    if (!condition) fail(code, message);
}

} // namespace polywitness
