#pragma once

#include <stdexcept>

namespace mecenum {

struct NotChordalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotExtendableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by the bucket enumerator when no highest-label vertex is free of
/// unvisited parents; signals an input that is not Meek-closed.
struct NoAdmissibleVertexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by the brute-force oracle when the orientation space is too big.
struct TooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mecenum
