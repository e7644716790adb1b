#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace domcell {

// Elements of the ground set and colors are canonical small integers,
// 0..count-1. External names, if any, are mapped at the I/O boundary.
using Element = int;
using Color = int;

// An exhaustive operation was asked to run past its size guard.
class guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural fact the theory guarantees failed to hold at runtime.
// Indicates a bug in this library, never bad user input.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Limits for operations that enumerate subsets of the ground set.
struct EnumerationGuard {
  int max_elements = 12;
  int max_colors = 6;
};

// DOMCELL_GUARD_OVERRIDE lifts every size guard. Expert-only: enumeration
// cost grows exponentially in |T|.
inline bool guard_override_active() {
  const char* v = std::getenv("DOMCELL_GUARD_OVERRIDE");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

inline void require_within_guard(int element_count, int color_count,
                                 const EnumerationGuard& guard) {
  if (guard_override_active()) return;
  if (element_count > guard.max_elements) {
    throw guard_error("enumeration guard: " + std::to_string(element_count) +
                      " elements exceeds limit " +
                      std::to_string(guard.max_elements));
  }
  if (color_count > guard.max_colors) {
    throw guard_error("enumeration guard: " + std::to_string(color_count) +
                      " colors exceeds limit " +
                      std::to_string(guard.max_colors));
  }
}

}  // namespace domcell
