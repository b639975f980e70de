#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace snsgraph {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A file or stream could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed input document. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Input was readable but carries nothing to analyse or violates a precondition.
class DataError : public Error {
public:
    using Error::Error;
};

class EmptyCorpusError : public DataError {
public:
    using DataError::DataError;
};

/// Modularity needs a positive total edge weight.
class UndefinedModularityError : public DataError {
public:
    using DataError::DataError;
};

/// Power iteration produced an all-zero iterate.
class DegenerateSpectrumError : public DataError {
public:
    using DataError::DataError;
};

/// Configuration value outside its documented domain.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace snsgraph
