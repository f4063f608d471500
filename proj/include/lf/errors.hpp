#pragma once

#include <stdexcept>
#include <string>

namespace lf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data.
struct InputError : Error {
  using Error::Error;
};

// A computation exceeded a configured size bound.
struct ResourceLimit : Error {
  using Error::Error;
};

struct NotMutable : Error {
  using Error::Error;
};
struct MissingPointStruts : Error {
  using Error::Error;
};
struct NonSurjectiveRayMap : Error {
  using Error::Error;
};
struct UnsupportedShape : Error {
  using Error::Error;
};
struct NonSimplicialStability : Error {
  using Error::Error;
};
struct InfiniteBasis : Error {
  using Error::Error;
};
struct UnboundedEnumeration : Error {
  using Error::Error;
};
struct TooManyVariables : Error {
  using Error::Error;
};
// A scaffolding does not reproduce the polytope it is supposed to cover.
struct ValidationFailure : Error {
  using Error::Error;
};

}  // namespace lf
