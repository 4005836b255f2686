#pragma once

#include <stdexcept>
#include <string>

namespace kgturan {

/// Malformed input or violated precondition (bad parameters, invalid certificate shape).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An instance is larger than the configured search cap. Never a silent truncation.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[noreturn]] inline void throw_cap(const std::string& what, std::size_t value, std::size_t cap)
{
    throw CapExceeded(what + " = " + std::to_string(value) + " exceeds cap " + std::to_string(cap));
}

} // namespace kgturan
