#pragma once

#include <stdexcept>
#include <string>

namespace satfrac {

/// An exhaustive computation would exceed its configured size limit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace satfrac
