#pragma once

#include <stdexcept>
#include <string>

namespace bohm {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Deformation parameter outside lambda > 0 or lambda < -1.
class InvalidDeformation : public Error {
public:
    using Error::Error;
};

// Division by a (numerically) vanishing ground state.
class NodeDivision : public Error {
public:
    using Error::Error;
};

// Trajectory came too close to a node of the wave function.
class SingularityEncountered : public Error {
public:
    using Error::Error;
};

// Square-well trajectory left the open box.
class DomainEscape : public Error {
public:
    using Error::Error;
};

// Invariant probe is not defined for the given field model.
class IncompatibleProbe : public Error {
public:
    using Error::Error;
};

// Bad parameters or configuration text.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace bohm
