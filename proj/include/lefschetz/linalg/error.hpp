#pragma once

#include <stdexcept>
#include <string>

namespace lefschetz {

/// Base class of every error raised by the library. The category determines
/// the process exit code chosen by the command line tool.
class Error : public std::runtime_error {
public:
    enum class Category { input, precision, internal };

    Error(Category category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    Category category() const noexcept { return category_; }

private:
    Category category_;
};

/// A caller violated an operation's documented precondition.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(Category::input, what) {}
};

/// Malformed text input (complexes, maps, configuration files).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(Category::input, line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A certified computation could not decide its answer at the maximum precision.
class PrecisionError : public Error {
public:
    explicit PrecisionError(const std::string& what) : Error(Category::precision, what) {}
};

/// An internal consistency check between two independent routes failed.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(Category::internal, what) {}
};

inline void require(bool condition, const std::string& message) {
    if (!condition) throw PreconditionError(message);
}

inline void ensure(bool condition, const std::string& message) {
    if (!condition) throw InternalError(message);
}

}  // namespace lefschetz
