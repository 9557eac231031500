#include "vnet/error.hpp"

#include <limits>

namespace vnet {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MixedFieldLevels: return "MixedFieldLevels";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::DegreeViolation: return "DegreeViolation";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::DimensionCap: return "DimensionCap";
    case ErrorKind::SizeCap: return "SizeCap";
  }
  return "Unknown";
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      throw Error(ErrorKind::SizeCap, "integer power overflows 64 bits");
    }
    result *= base;
  }
  return result;
}

void require_within_cap(std::uint64_t value, std::uint64_t cap, const char* what) {
  if (value > cap) {
    throw Error(ErrorKind::SizeCap, std::string(what) + " (" + std::to_string(value) +
                                        ") exceeds cap " + std::to_string(cap));
  }
}

}  // namespace vnet
