#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cxrep/coords.hpp"
#include "cxrep/metrics.hpp"
#include "cxrep/representation.hpp"

namespace cxrep {

struct SweepConfig {
  std::uint64_t seed = 0;
  std::uint64_t sample_count = 1'000'000;
  /// Components are drawn uniformly from [-bound, +bound). The default is the
  /// 64-bit signed integer maximum, which rounds to 2^63 as a double.
  double component_bound = 9.223372036854775807e18;
  std::vector<Method> methods = {kAllMethods.begin(), kAllMethods.end()};
  unsigned shard_count = 1;

  /// Throws ConfigError on a zero sample or shard count, a non-positive or
  /// non-finite bound, or an empty method list.
  void validate() const;
};

/// Deterministic sample source. Sample i depends only on (seed, i): each
/// component comes from the SplitMix64 finalizer applied to a counter, so any
/// partition of the index range reproduces the same values.
class SampleGenerator {
 public:
  SampleGenerator(std::uint64_t seed, double component_bound) noexcept
      : seed_(seed), bound_(component_bound) {}

  Complex64 at(std::uint64_t index) const noexcept;

 private:
  double component(std::uint64_t counter) const noexcept;

  std::uint64_t seed_;
  double bound_;
};

/// SplitMix64 output for a given state (after the increment).
std::uint64_t splitmix64_mix(std::uint64_t z) noexcept;

/// Materializes the first cfg.sample_count samples.
std::vector<Complex64> generate(const SweepConfig& cfg);

/// Encode, decode and score every sample under every configured method.
/// Shards are contiguous index ranges run on their own threads.
std::map<Method, ErrorStats> run_sweep(const SweepConfig& cfg);

using TraceRecord = std::vector<std::pair<std::string, std::string>>;

/// Every intermediate value of the four pipelines for one input, in a fixed
/// order: original components, polar components, the four bit patterns as
/// naturals, the Cantor and Szudzik codes, the four bit strings, the two
/// interleaved codes, then decoded components and error per method.
/// Throws DomainError on non-finite input.
TraceRecord trace(const Complex64& c);

/// Shortest text that parses back to the same double: plain digits for
/// magnitudes in [1e-3, 1e7) and zero, scientific notation otherwise.
std::string format_double(double v);
/// Shortest roundtrip digits in scientific notation; zero renders as "0.0".
std::string format_scientific(double v);

enum class ReportFormat { Table, Csv };

std::string render_report(const std::map<Method, ErrorStats>& stats, ReportFormat format);
std::string render_trace(const TraceRecord& record);

}  // namespace cxrep
