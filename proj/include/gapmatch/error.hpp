#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gapmatch {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed pattern text. `offset()` is the 0-based character index.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Well-formed but semantically invalid input (e.g. a gap with min > max).
class ConstraintError : public Error {
public:
    using Error::Error;
};

/// A symbol that is not a member of the active alphabet.
class AlphabetError : public Error {
public:
    using Error::Error;
};

/// File could not be opened or read.
class IoError : public Error {
public:
    using Error::Error;
};

/// Input file content is malformed (bad FASTA record, non-numeric CSV cell, ...).
class DataError : public Error {
public:
    using Error::Error;
};

/// A caller violated a documented precondition; indicates a bug, not bad data.
class LogicError : public Error {
public:
    using Error::Error;
};

} // namespace gapmatch
