#ifndef OMIT_ERRORS_HPP
#define OMIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace omit {

// Base class for every error raised by the library. The CLI maps the
// subclasses onto its exit-code contract (config=1, solver=2, io=3).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- input validation ---------------------------------------------------

struct NonPositiveParameter : Error {
    explicit NonPositiveParameter(const std::string& name)
        : Error("parameter must be strictly positive: " + name) {}
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct UnknownKey : Error {
    explicit UnknownKey(const std::string& key, int line)
        : Error("unknown key '" + key + "' at line " + std::to_string(line)) {}
};

// -- solver / numerics --------------------------------------------------

struct SolverFailure : Error {
    using Error::Error;
};

struct DegenerateDenominator : Error {
    using Error::Error;
};

struct ZeroField : Error {
    using Error::Error;
};

struct NotConverged : Error {
    using Error::Error;
};

struct UnstableIntegration : Error {
    using Error::Error;
};

// -- I/O -----------------------------------------------------------------

struct IoError : Error {
    using Error::Error;
};

}  // namespace omit

#endif  // OMIT_ERRORS_HPP
