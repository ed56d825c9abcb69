#pragma once

#include <stdexcept>
#include <string>

namespace tiltcert {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (schemas, labels, relations).
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    using InputError::InputError;
};

class UnknownVertex : public InputError {
public:
    explicit UnknownVertex(const std::string& label) : InputError("unknown vertex: " + label) {}
};

class UnknownArrow : public InputError {
public:
    explicit UnknownArrow(const std::string& id) : InputError("unknown arrow: " + id) {}
};

class InvalidQuiver : public InputError {
public:
    using InputError::InputError;
};

class InvalidRelation : public InputError {
public:
    using InputError::InputError;
};

class NonCycleTerm : public InputError {
public:
    using InputError::InputError;
};

/// The normal-form computation did not close up below the length cap.
class NotStabilized : public Error {
public:
    NotStabilized(std::size_t cap, const std::string& why)
        : Error("not stabilized at max_len " + std::to_string(cap) + ": " + why), cap_(cap) {}
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

class SubspaceNotContained : public Error {
public:
    using Error::Error;
};

class NotBasic : public Error {
public:
    using Error::Error;
};

class AlgebraMismatch : public Error {
public:
    AlgebraMismatch() : Error("objects live over different algebras") {}
};

class ComplexMismatch : public Error {
public:
    using Error::Error;
};

class InvalidComplex : public InputError {
public:
    using InputError::InputError;
};

class NotBasicDecomposition : public Error {
public:
    using Error::Error;
};

class NotIndecomposable : public Error {
public:
    using Error::Error;
};

class NotTwoTerm : public Error {
public:
    using Error::Error;
};

}  // namespace tiltcert
