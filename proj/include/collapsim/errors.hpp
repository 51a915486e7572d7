#pragma once

#include <stdexcept>
#include <string>

namespace collapsim {

// Base of every error raised by the library. The CLI maps subclasses of
// InvalidArgument to a usage error and everything else to a runtime failure.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A precondition on a caller-supplied value was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DomainError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NormalizationError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class UnsupportedDimension : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// Operation applied to a state that has already reached a terminal status.
class TerminalStateError : public Error {
public:
    using Error::Error;
};

class SingularSystem : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace collapsim
