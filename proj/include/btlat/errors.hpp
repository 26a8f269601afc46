#pragma once

#include <stdexcept>
#include <string>

namespace btlat {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
  using Error::Error;
};
struct NoNonzeroEntry : Error {
  using Error::Error;
};
struct NoValidMatrix : Error {
  using Error::Error;
};
struct FrameMismatch : Error {
  using Error::Error;
};
struct InvalidDegree : Error {
  using Error::Error;
};
struct InvalidGrid : Error {
  using Error::Error;
};
struct InconsistentData : Error {
  using Error::Error;
};
struct NotIntegral : Error {
  using Error::Error;
};

}  // namespace btlat
