#ifndef FLAMEDET_ERRORS_HPP
#define FLAMEDET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flamedet {

/// Base of all library errors. CLI maps subtypes to exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad inputs: dimension mismatches, decode failures, malformed files,
/// degenerate data, unknown config keys. Exit code 2 at the CLI.
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
};

/// Iterative optimization exceeded its budget. Exit code 3 at the CLI.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, long iterations)
        : Error(msg), iterations_(iterations) {}
    long iterations() const { return iterations_; }

private:
    long iterations_;
};

}  // namespace flamedet

#endif
