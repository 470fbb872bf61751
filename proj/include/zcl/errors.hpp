#pragma once

#include <stdexcept>
#include <string>

namespace zcl {

enum class ErrorKind {
    dimension,
    precondition,
    argument,
    resource,
    schema,
    oracle_disagreement,
    internal,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& msg);

}  // namespace zcl
