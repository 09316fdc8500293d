#pragma once

#include <stdexcept>
#include <string>

namespace domishold {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad vertex index, bad file, bad parameter).
class InputError : public Error {
public:
    using Error::Error;
};

/// A desk-scale guard was exceeded; the answer is unknown, not negative.
class CapabilityError : public Error {
public:
    using Error::Error;
};

/// An operation was called on an input that violates its stated precondition
/// (non-verifying structure, graph that is not TD, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The question has no answer for this input (e.g. false points of constant 1).
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace domishold
