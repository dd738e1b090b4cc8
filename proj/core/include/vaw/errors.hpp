#pragma once

#include <stdexcept>
#include <string>

namespace vaw {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (graph descriptions, words, roots, field elements).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// An operation was called outside its contract (wrong graph, word not in the
/// kernel, non-spherical graph where a finite group is required, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// An enumeration exceeded its configured cap, which signals an infinite or
/// too large group/orbit.
class CapExceededError : public PreconditionError {
public:
    explicit CapExceededError(const std::string& what) : PreconditionError(what) {}
};

/// A derived Coxeter label could not be decided within the configured search
/// depth.  Carries the depth that was exhausted; never silently coerced to
/// infinity.
class UndeterminedLabelError : public Error {
public:
    UndeterminedLabelError(const std::string& what, unsigned depth)
        : Error(what), depth_(depth) {}
    unsigned depth() const { return depth_; }

private:
    unsigned depth_;
};

}  // namespace vaw
