#pragma once

#include <stdexcept>
#include <string>

namespace helly {

// Domain error raised by library operations (bad input, violated
// precondition, exhausted search budget). The CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace helly
