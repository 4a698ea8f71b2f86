#pragma once

#include <stdexcept>
#include <string>

namespace gca {

// Error categories mirror the process exit codes of the CLI:
// 1 = a requested check failed, 2 = bad usage/parse input, 3 = internal.
enum class ErrorKind { check_failed = 1, usage = 2, internal = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(ErrorKind::usage, msg) {}
};

// Violated operation precondition (distinct from a certificate/check that ran
// and failed).
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error(ErrorKind::usage, msg) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(ErrorKind::internal, msg) {}
};

// Parse errors carry a 0-based input offset for diagnostics.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t offset)
        : Error(ErrorKind::usage, msg + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace gca
