#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace bloch {

// Every failure raised by the library derives from Error. kind() is the
// stable identifier that ends up in machine-readable reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define BLOCH_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

BLOCH_DEFINE_ERROR(SingularMatrix);
BLOCH_DEFINE_ERROR(NotConcurrent);
BLOCH_DEFINE_ERROR(NotNull);
BLOCH_DEFINE_ERROR(NotIncident);
BLOCH_DEFINE_ERROR(CoincidentPoints);
BLOCH_DEFINE_ERROR(DegenerateFlagTetra);
BLOCH_DEFINE_ERROR(DegenerateParameter);
BLOCH_DEFINE_ERROR(DependentRows);
BLOCH_DEFINE_ERROR(PrecisionExhausted);
BLOCH_DEFINE_ERROR(EmptyTriangulation);
BLOCH_DEFINE_ERROR(GeometryMismatch);
BLOCH_DEFINE_ERROR(ParseError);
BLOCH_DEFINE_ERROR(SchemaError);
BLOCH_DEFINE_ERROR(UsageError);
BLOCH_DEFINE_ERROR(ZeroVector);

#undef BLOCH_DEFINE_ERROR

// Raised when a tetrahedron violates its geometry's invariant; carries the
// offending tetrahedron index.
class GeometryError : public Error {
 public:
  GeometryError(std::size_t index, const std::string& what)
      : Error("GeometryError", "tetrahedron " + std::to_string(index) + ": " + what),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace bloch
