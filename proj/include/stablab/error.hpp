#pragma once

#include <stdexcept>
#include <string>

namespace stablab {

// Every computational failure carries a stable error name; the CLI reports it
// verbatim in its JSON output.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define STABLAB_DEFINE_ERROR(Type)                                   \
  class Type : public ::stablab::Error {                             \
   public:                                                           \
    explicit Type(const std::string& what) : Error(#Type, what) {}   \
  }

STABLAB_DEFINE_ERROR(ParseError);
STABLAB_DEFINE_ERROR(InvalidArgument);
STABLAB_DEFINE_ERROR(EnumerationOverflow);
STABLAB_DEFINE_ERROR(NotClosed);
STABLAB_DEFINE_ERROR(CapExceeded);
STABLAB_DEFINE_ERROR(NotCentral);
STABLAB_DEFINE_ERROR(InconsistentExtension);
STABLAB_DEFINE_ERROR(UnknownEntry);
STABLAB_DEFINE_ERROR(DualityViolation);
STABLAB_DEFINE_ERROR(DimensionMismatch);
STABLAB_DEFINE_ERROR(DecompositionFailure);
STABLAB_DEFINE_ERROR(ThresholdViolation);

}  // namespace stablab
