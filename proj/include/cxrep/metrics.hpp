#pragma once

#include <cstdint>

#include "cxrep/coords.hpp"

namespace cxrep {

/// Relative roundtrip error |original - decoded| / |original|. At a zero
/// modulus it falls back to the plain Euclidean distance, which is 0 when the
/// two values compare equal (so -0.0 and +0.0 agree). Argument order matters.
/// Throws DomainError on non-finite components.
double roundtrip_error(const Complex64& original, const Complex64& decoded);

/// Streaming max/mean aggregate. The sum is carried with a Neumaier
/// compensation term so merging shards in any grouping agrees to within an
/// ulp of the total.
class ErrorStats {
 public:
  ErrorStats() = default;

  void add(double error) noexcept;
  void merge(const ErrorStats& other) noexcept;

  [[nodiscard]] ErrorStats updated(double error) const noexcept {
    ErrorStats s = *this;
    s.add(error);
    return s;
  }
  [[nodiscard]] static ErrorStats merged(ErrorStats a, const ErrorStats& b) noexcept {
    a.merge(b);
    return a;
  }

  std::uint64_t count() const noexcept { return count_; }
  double max_error() const noexcept { return max_; }
  double sum_error() const noexcept { return sum_ + compensation_; }
  /// 0 for an empty aggregate.
  double mean_error() const noexcept {
    return count_ == 0 ? 0.0 : sum_error() / static_cast<double>(count_);
  }

  friend bool operator==(const ErrorStats&, const ErrorStats&) = default;

 private:
  void accumulate(double v) noexcept;

  std::uint64_t count_ = 0;
  double max_ = 0.0;
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace cxrep
