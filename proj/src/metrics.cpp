#include "cxrep/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "cxrep/errors.hpp"

namespace cxrep {

double roundtrip_error(const Complex64& original, const Complex64& decoded) {
  if (!std::isfinite(original.re) || !std::isfinite(original.im) ||
      !std::isfinite(decoded.re) || !std::isfinite(decoded.im)) {
    throw DomainError("roundtrip error needs finite components");
  }
  const double distance = modulus({original.re - decoded.re, original.im - decoded.im});
  const double r1 = modulus(original);
  if (r1 == 0.0) return distance;
  return distance / r1;
}

void ErrorStats::accumulate(double v) noexcept {
  // Neumaier's variant of Kahan summation.
  const double t = sum_ + v;
  if (std::fabs(sum_) >= std::fabs(v)) {
    compensation_ += (sum_ - t) + v;
  } else {
    compensation_ += (v - t) + sum_;
  }
  sum_ = t;
}

void ErrorStats::add(double error) noexcept {
  ++count_;
  max_ = std::max(max_, error);
  accumulate(error);
}

void ErrorStats::merge(const ErrorStats& other) noexcept {
  count_ += other.count_;
  max_ = std::max(max_, other.max_);
  accumulate(other.sum_);
  accumulate(other.compensation_);
}

}  // namespace cxrep
