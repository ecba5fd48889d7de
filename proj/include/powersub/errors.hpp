#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powersub {

class GroupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested group order exceeds the configured order cap.
class SizeError : public GroupError {
public:
    using GroupError::GroupError;
};

/// Family parameter outside its valid range (e.g. Q6, E4_2).
class ParameterError : public GroupError {
public:
    using GroupError::GroupError;
};

/// An operation was called with an argument violating its precondition.
class PreconditionError : public GroupError {
public:
    using GroupError::GroupError;
};

class SyntaxError : public GroupError {
public:
    SyntaxError(const std::string& msg, std::size_t pos)
        : GroupError(msg + " at position " + std::to_string(pos)), pos_(pos) {}

    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

} // namespace powersub
