#pragma once

#include <stdexcept>
#include <string>

namespace omega_lift {

// Precondition violations throw std::invalid_argument. InternalError marks a
// broken invariant of the library itself (a convention or arithmetic bug),
// never bad user input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace omega_lift
