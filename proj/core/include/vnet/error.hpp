#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vnet {

enum class ErrorKind {
  InvalidArgument,
  DivisionByZero,
  MixedFieldLevels,
  NotPrime,
  NotIrreducible,
  DegreeViolation,
  AllZero,
  DimensionTooLarge,
  DimensionTooSmall,
  DegreeTooSmall,
  DimensionCap,
  SizeCap,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every library failure is reported through this type; `kind()` lets the
/// CLI map failures onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  bool is_cap() const noexcept {
    return kind_ == ErrorKind::SizeCap || kind_ == ErrorKind::DimensionCap;
  }

 private:
  ErrorKind kind_;
};

/// Enumeration limits shared by every module. All sizes are element counts.
struct Caps {
  std::uint64_t points = std::uint64_t{1} << 20;     // q^m points / D* grid cells
  std::uint64_t kernel = std::uint64_t{1} << 24;     // kernel elements enumerated
  std::uint64_t intervals = std::uint64_t{1} << 24;  // elementary intervals binned
};

/// Checked integer power; throws SizeCap on overflow of 64 bits.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

/// Throws SizeCap naming `what` when `value > cap`.
void require_within_cap(std::uint64_t value, std::uint64_t cap, const char* what);

}  // namespace vnet
