#pragma once

#include <stdexcept>
#include <string>

namespace ekz {

// Coarse error taxonomy; the CLI maps categories onto its diagnostic
// prefix ("error:<category>: ...") and exit codes.
enum class ErrorCategory {
    Domain,    // invalid argument values (window length < 1, frequency out of range, ...)
    Data,      // input data violates a precondition (missing values, empty series)
    Parse,     // malformed file content
    Io,        // filesystem failures
    Resource,  // configured limits exceeded
};

const char* to_string(ErrorCategory category) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& m) : Error(ErrorCategory::Domain, m) {}
};

struct DataError : Error {
    explicit DataError(const std::string& m) : Error(ErrorCategory::Data, m) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(ErrorCategory::Parse, m) {}
};

struct IoError : Error {
    explicit IoError(const std::string& m) : Error(ErrorCategory::Io, m) {}
};

struct ResourceError : Error {
    explicit ResourceError(const std::string& m) : Error(ErrorCategory::Resource, m) {}
};

}  // namespace ekz
