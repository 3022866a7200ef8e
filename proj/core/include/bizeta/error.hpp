#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bizeta {

/// Broad failure classes; the CLI maps each one onto an exit code.
enum class ErrorKind {
    input,        // malformed or unsupported input (exit 2)
    capacity,     // enumeration bound exceeded (exit 3)
    consistency,  // an identity that must hold did not (exit 4)
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string what) : std::runtime_error(std::move(what)), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

#define BIZETA_DEFINE_ERROR(Name, Kind)                                          \
    class Name : public Error {                                                  \
      public:                                                                    \
        explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
    }

BIZETA_DEFINE_ERROR(ParseError, input);
BIZETA_DEFINE_ERROR(NotPrimeError, input);
BIZETA_DEFINE_ERROR(ModelShapeError, input);
BIZETA_DEFINE_ERROR(SingularCurveError, input);
BIZETA_DEFINE_ERROR(PreconditionError, input);
BIZETA_DEFINE_ERROR(DivisionByZeroError, input);
BIZETA_DEFINE_ERROR(CapacityError, capacity);
BIZETA_DEFINE_ERROR(NotDivisibleError, consistency);
BIZETA_DEFINE_ERROR(InconsistentCountsError, consistency);
BIZETA_DEFINE_ERROR(StratificationError, consistency);
BIZETA_DEFINE_ERROR(InvalidMeasureError, consistency);
BIZETA_DEFINE_ERROR(ConsistencyError, consistency);
BIZETA_DEFINE_ERROR(TheoremViolationError, consistency);

#undef BIZETA_DEFINE_ERROR

/// Upper bound on the size of any exhaustive enumeration (field elements,
/// candidate polynomials, Jacobian scans).
struct Limits {
    std::uint64_t maxWork = 1'000'000;
};

/// Throws CapacityError when `amount` exceeds the configured bound.
void requireCapacity(const Limits& limits, std::uint64_t amount, const std::string& what);

/// base^exp, saturating at UINT64_MAX.
std::uint64_t saturatingPow(std::uint64_t base, unsigned exp);

}  // namespace bizeta
