#pragma once

#include <stdexcept>
#include <string>

namespace lcl {

// Every failure carries a stable code (e.g. "VertexFrozen") so the CLI and the
// HTTP layer can report it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)), detail_(detail) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string code_;
    std::string detail_;
};

[[noreturn]] inline void fail(std::string code, const std::string& detail) {
    throw Error(std::move(code), detail);
}

} // namespace lcl
