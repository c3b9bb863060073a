#pragma once

#include <stdexcept>

namespace gcflab {

/// Violation of an internal exact-arithmetic invariant (e.g. the determinant
/// identity failing mid-stream). Never caused by user input; computations
/// must abort when this is thrown.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace gcflab
