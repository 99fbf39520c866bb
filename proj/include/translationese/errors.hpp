#ifndef TRANSLATIONESE_ERRORS_HPP
#define TRANSLATIONESE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace translationese {

// Invalid input values or broken invariants (CLI exit code 1).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed file content; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what), line_(0) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Missing or unreadable external resources (CLI exit code 2).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace translationese

#endif
