#pragma once

#include <stdexcept>
#include <string>

namespace skein {

// code is module-qualified, e.g. "diagram.ParseError"
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }
    bool is_parse_error() const noexcept {
        return code_.size() >= 10 && code_.compare(code_.size() - 10, 10, "ParseError") == 0;
    }

private:
    std::string code_;
};

}  // namespace skein
