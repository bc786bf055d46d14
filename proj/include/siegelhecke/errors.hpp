#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller violated a contract: bad arguments, mismatched contexts, malformed
/// input files. Maps to CLI exit code 1.
class usage_error : public error {
public:
    using error::error;
};

/// Input data is mathematically inconsistent (e.g. an eigenvalue that is not
/// an exact power of p where one is required). Maps to CLI exit code 2.
class data_error : public error {
public:
    using error::error;
};

/// An internal invariant failed; indicates a bug, never bad input. Maps to
/// CLI exit code 3.
class internal_error : public error {
public:
    using error::error;
};

inline void require(bool condition, const std::string& message) {
    if (!condition) throw usage_error(message);
}

inline void check_internal(bool condition, const std::string& message) {
    if (!condition) throw internal_error(message);
}

} // namespace hecke
