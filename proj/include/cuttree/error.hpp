#pragma once

#include <stdexcept>
#include <string>

namespace cuttree {

/// Contract violation or malformed input. The message is user-facing.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cuttree
