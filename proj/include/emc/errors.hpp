#pragma once

#include <stdexcept>
#include <string>

namespace emc {

/// Model or argument validation failure (bad kernel, dimension mismatch, ...).
class invalid_input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A requested object would exceed the configured memory budget.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical postcondition failed (lost normalization, negative spectrum, ...).
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be read or written; the message carries the path.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace emc
