#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rrt {

using Element = std::uint32_t;
using Color = std::uint64_t;
using Code = std::uint64_t;

// Concrete evidence attached to a failed check: the offending tuples plus a
// short human-readable explanation.
struct Witness {
    std::vector<std::vector<Element>> tuples;
    std::string detail;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what, Witness witness = {})
        : Error(what), witness_(std::move(witness)) {}

    const Witness& witness() const noexcept { return witness_; }

private:
    Witness witness_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace rrt
