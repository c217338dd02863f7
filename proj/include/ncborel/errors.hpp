#pragma once

#include <stdexcept>
#include <string>

namespace ncborel {

/// Base class for all errors raised by the engine.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two operands were built over different parameter contexts.
struct ContextError : Error {
    using Error::Error;
};

/// An operation was applied to a form of unsupported degree
/// (wedge of 0-forms, box on degree >= 2, ...).
struct DegreeError : Error {
    using Error::Error;
};

/// Exact division failed (operand not divisible in the coefficient ring).
struct DivisionError : Error {
    using Error::Error;
};

/// Source text could not be tokenized or parsed.
struct ParseError : Error {
    enum class Kind { lexical, syntax, degree };

    ParseError(Kind k, std::size_t byte_offset, const std::string& what)
        : Error(what), kind(k), offset(byte_offset) {}

    Kind kind;
    std::size_t offset;
};

}  // namespace ncborel
