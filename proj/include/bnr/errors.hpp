#pragma once

#include <stdexcept>
#include <string>

namespace bnr {

enum class ErrorCode {
    syntax,             // malformed model text
    duplicate,          // component declared twice
    undeclared,         // rule references an unknown component
    unknown_component,  // name lookup failed outside parsing
    not_unate,          // a local function is not unate
    too_large,          // brute-force bound exceeded
    domain_too_large,   // ensemble domain exceeds enumeration cap
    io,                 // file access problem
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message)
{
    throw Error(code, message);
}

} // namespace bnr
