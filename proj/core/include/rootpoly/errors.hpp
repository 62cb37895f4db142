#pragma once

#include <stdexcept>
#include <string>

namespace rootpoly {

// Bad user input (unknown family, index out of range, ...) is reported with
// std::invalid_argument; broken internal identities with std::logic_error.

/// A configured size bound would be exceeded (orbit limit, oracle rank bound).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rootpoly
