#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dynkin {

/// Base class for every domain error raised by the library. `kind()` is a
/// stable identifier used in the CLI's JSON error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define DYNKIN_DEFINE_ERROR(Name)                                    \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  };

DYNKIN_DEFINE_ERROR(NotFiniteType)
DYNKIN_DEFINE_ERROR(ShapeError)
DYNKIN_DEFINE_ERROR(IndexError)
DYNKIN_DEFINE_ERROR(DivisibilityError)
DYNKIN_DEFINE_ERROR(Unsupported)
DYNKIN_DEFINE_ERROR(EmptyLevel)
DYNKIN_DEFINE_ERROR(DomainError)
DYNKIN_DEFINE_ERROR(CycleError)
DYNKIN_DEFINE_ERROR(NuPatternError)
DYNKIN_DEFINE_ERROR(ValidationFailed)
DYNKIN_DEFINE_ERROR(RegularityFailed)
DYNKIN_DEFINE_ERROR(Degenerate)
DYNKIN_DEFINE_ERROR(NotSplit)
DYNKIN_DEFINE_ERROR(ParseError)

#undef DYNKIN_DEFINE_ERROR

}  // namespace dynkin
