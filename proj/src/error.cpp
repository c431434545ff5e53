#include "shiftlab/error.hpp"

#include <cstdlib>

namespace shiftlab {

namespace {

std::size_t initial_cap() {
  if (const char* env = std::getenv("SHIFTLAB_MAX_BLOCKS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 22;
}

std::size_t& cap_ref() {
  static std::size_t cap = initial_cap();
  return cap;
}

}  // namespace

std::size_t block_cap() { return cap_ref(); }

void set_block_cap(std::size_t cap) { cap_ref() = cap; }

void check_cap(std::size_t count, const char* what) {
  if (count > block_cap()) {
    throw CapExceeded(std::string("enumeration cap exceeded in ") + what + ": " +
                      std::to_string(count) + " > " + std::to_string(block_cap()));
  }
}

}  // namespace shiftlab
