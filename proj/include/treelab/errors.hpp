#pragma once

#include <stdexcept>
#include <string>

namespace treelab {

/// Rejected input: a precondition or file/format constraint was violated.
/// The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured search or size ceiling was exceeded.
/// The CLI maps this to exit code 3.
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace treelab
