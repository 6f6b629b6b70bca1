#pragma once

#include <stdexcept>
#include <string>

namespace treeradon {

/// Raised when a boundary-dependent operation is asked to work on a
/// cylinder table that is too shallow for the vertices involved.
class InsufficientCylinderDepth : public std::runtime_error {
public:
    InsufficientCylinderDepth(int have, int need)
        : std::runtime_error("cylinder depth " + std::to_string(have) +
                             " insufficient, need at least " + std::to_string(need)),
          have_(have), need_(need) {}

    int have() const noexcept { return have_; }
    int need() const noexcept { return need_; }

private:
    int have_;
    int need_;
};

/// Raised when an operation requires a nonzero input (reducibility witness).
class ZeroInput : public std::runtime_error {
public:
    ZeroInput() : std::runtime_error("input function is identically zero") {}
};

/// Invalid parameters (q < 2, bad grid size, malformed words, ...).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// File / format errors raised by the IO layer.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace treeradon
