#pragma once

#include <stdexcept>

namespace quadspin {

/// Base class for all quadspin errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NotHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct NotPsd : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct InvalidSpin : Error { using Error::Error; };
struct NonPositiveTemperature : Error { using Error::Error; };
struct DimensionNotFour : Error { using Error::Error; };
struct NoOnsetFound : Error { using Error::Error; };
struct InsufficientPoints : Error { using Error::Error; };
struct IoFailure : Error { using Error::Error; };

}  // namespace quadspin
