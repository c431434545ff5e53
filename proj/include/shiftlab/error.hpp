#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shiftlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an enumeration would exceed the configured block cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Block enumeration cap. Defaults to 2^22; the SHIFTLAB_MAX_BLOCKS environment
// variable overrides it on first use.
std::size_t block_cap();
void set_block_cap(std::size_t cap);

void check_cap(std::size_t count, const char* what);

}  // namespace shiftlab
