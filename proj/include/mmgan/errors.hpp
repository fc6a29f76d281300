#pragma once

#include <stdexcept>
#include <string>

namespace mmgan {

/// Base for every error raised by the toolkit. `category()` is a short
/// machine-parsable tag that the CLI prints on failure.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& what)
        : std::runtime_error(what), category_(std::move(category)) {}

    const std::string& category() const noexcept { return category_; }

private:
    std::string category_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse", what) {}
};

struct FormatError : Error {
    explicit FormatError(const std::string& what) : Error("format", what) {}
};

struct ExtractionError : Error {
    explicit ExtractionError(const std::string& what) : Error("extraction", what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error("io", what) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error("validation", what) {}
};

struct IncompatibleError : Error {
    explicit IncompatibleError(const std::string& what) : Error("incompatible", what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error("config", what) {}
};

/// Raised when a caller breaks an operation's documented precondition.
struct ContractViolation : Error {
    explicit ContractViolation(const std::string& what) : Error("contract", what) {}
};

}  // namespace mmgan
