#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace anglegauge {

/// Base class for all library errors. `kind()` is a stable identifier used
/// by the CLI when emitting structured error JSON.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

#define ANGLEGAUGE_DEFINE_ERROR(Name)                  \
  class Name : public Error {                          \
  public:                                              \
    explicit Name(const std::string& what)             \
        : Error(#Name, what) {}                        \
  }

ANGLEGAUGE_DEFINE_ERROR(NonFiniteInput);
ANGLEGAUGE_DEFINE_ERROR(ZeroVector);
ANGLEGAUGE_DEFINE_ERROR(NotOrthonormal);
ANGLEGAUGE_DEFINE_ERROR(DomainError);
ANGLEGAUGE_DEFINE_ERROR(NotInjective);
ANGLEGAUGE_DEFINE_ERROR(ShapeError);
ANGLEGAUGE_DEFINE_ERROR(ZeroMap);
ANGLEGAUGE_DEFINE_ERROR(ImageCollapse);
ANGLEGAUGE_DEFINE_ERROR(IoError);
ANGLEGAUGE_DEFINE_ERROR(ParseError);
ANGLEGAUGE_DEFINE_ERROR(RaggedRows);
ANGLEGAUGE_DEFINE_ERROR(NonFiniteEntry);
ANGLEGAUGE_DEFINE_ERROR(ShapeMismatch);

#undef ANGLEGAUGE_DEFINE_ERROR

}  // namespace anglegauge
