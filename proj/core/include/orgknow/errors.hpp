#pragma once

#include <stdexcept>
#include <string>

namespace orgknow {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A file, stream, or configuration problem: the input could not even be
/// read or understood at the syntax level. Maps to process exit code 1.
class InputError : public Error {
public:
    using Error::Error;
};

/// Well-formed input whose content violates a domain invariant.
/// Maps to process exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

// --- graph construction and metrics ---

class SelfLoopError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DuplicateEdgeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class UnknownNodeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InvalidNodeIdError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InvalidWeightError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class TooFewNodesError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// --- ballots ---

class SelfVoteError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DuplicateTargetError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class OverlongBallotError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class EmptyBallotError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DuplicateRespondentError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InvalidSchemeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// --- reputation ---

class ZeroDenominatorError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class EmptyInputError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class MixedPlatformError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// --- reports ---

class RosterMismatchError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// --- file parsing and export ---

class MalformedRowError : public InputError {
public:
    using InputError::InputError;
};

class DuplicateIdError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class EmptyRosterError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class RankGapError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NegativeCountError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class UnsupportedFormatError : public InputError {
public:
    using InputError::InputError;
};

class ConfigError : public InputError {
public:
    using InputError::InputError;
};

} // namespace orgknow
