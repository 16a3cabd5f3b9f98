#include "cxrep/experiment.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>
#include <thread>

#include "cxrep/errors.hpp"
#include "cxrep/float_bits.hpp"
#include "cxrep/pairing.hpp"

namespace cxrep {
namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// Row order of the paper-style reports: polar methods first.
constexpr std::array<Method, 4> kReportOrder = {Method::PolarCantor, Method::PolarSzudzik,
                                                Method::PolarInterleave,
                                                Method::CartesianInterleave};

void run_shard(const SweepConfig& cfg, std::uint64_t begin, std::uint64_t end,
               std::vector<ErrorStats>& out) {
  const SampleGenerator gen(cfg.seed, cfg.component_bound);
  out.assign(cfg.methods.size(), ErrorStats{});
  for (std::uint64_t i = begin; i < end; ++i) {
    const Complex64 c = gen.at(i);
    for (std::size_t k = 0; k < cfg.methods.size(); ++k) {
      const Complex64 back = decode(encode(c, cfg.methods[k]));
      out[k].add(roundtrip_error(c, back));
    }
  }
}

}  // namespace

void SweepConfig::validate() const {
  if (sample_count == 0) throw ConfigError("sample count must be at least 1");
  if (shard_count == 0) throw ConfigError("shard count must be at least 1");
  if (!(component_bound > 0.0) || !std::isfinite(component_bound)) {
    throw ConfigError("component bound must be positive and finite");
  }
  if (methods.empty()) throw ConfigError("at least one method is required");
}

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SampleGenerator::component(std::uint64_t counter) const noexcept {
  // Output number `counter` of a SplitMix64 stream seeded with seed_.
  const std::uint64_t u = splitmix64_mix(seed_ + (counter + 1) * kGoldenGamma);
  // 53 random bits give a uniform grid on [0, 1); 2*unit - 1 is exact.
  const double unit = static_cast<double>(u >> 11) * 0x1.0p-53;
  return (2.0 * unit - 1.0) * bound_;
}

Complex64 SampleGenerator::at(std::uint64_t index) const noexcept {
  return {component(2 * index), component(2 * index + 1)};
}

std::vector<Complex64> generate(const SweepConfig& cfg) {
  cfg.validate();
  const SampleGenerator gen(cfg.seed, cfg.component_bound);
  std::vector<Complex64> out;
  out.reserve(cfg.sample_count);
  for (std::uint64_t i = 0; i < cfg.sample_count; ++i) out.push_back(gen.at(i));
  return out;
}

std::map<Method, ErrorStats> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const std::uint64_t shards = std::min<std::uint64_t>(cfg.shard_count, cfg.sample_count);
  std::vector<std::vector<ErrorStats>> partial(shards);
  auto bounds = [&](std::uint64_t s) {
    // Multiplying first would overflow for huge sample counts.
    const std::uint64_t n = cfg.sample_count;
    return n / shards * s + std::min(s, n % shards);
  };

  if (shards == 1) {
    run_shard(cfg, 0, cfg.sample_count, partial[0]);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(shards);
    for (std::uint64_t s = 0; s < shards; ++s) {
      workers.emplace_back([&, s] { run_shard(cfg, bounds(s), bounds(s + 1), partial[s]); });
    }
  }

  std::map<Method, ErrorStats> result;
  for (std::size_t k = 0; k < cfg.methods.size(); ++k) {
    ErrorStats total;
    for (const auto& shard : partial) total.merge(shard[k]);
    result[cfg.methods[k]].merge(total);
  }
  return result;
}

std::string format_double(double v) {
  // Plain digits for moderate magnitudes, scientific elsewhere; both shortest.
  const double mag = std::fabs(v);
  const bool plain = mag == 0.0 || (mag >= 1e-3 && mag < 1e7) || !std::isfinite(v);
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 plain ? std::chars_format::fixed : std::chars_format::scientific);
  return {buf.data(), res.ptr};
}

std::string format_scientific(double v) {
  if (v == 0.0) return std::signbit(v) ? "-0.0" : "0.0";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific);
  return {buf.data(), res.ptr};
}

TraceRecord trace(const Complex64& c) {
  if (!std::isfinite(c.re) || !std::isfinite(c.im)) {
    throw DomainError("trace needs finite components");
  }
  const PolarPoint polar = to_polar(c);
  const Nat64 re_bits = to_bits(c.re);
  const Nat64 im_bits = to_bits(c.im);
  const Nat64 r_bits = to_bits(polar.r);
  const Nat64 phi_bits = to_bits(polar.phi);

  TraceRecord out;
  auto put = [&out](std::string label, std::string value) {
    out.emplace_back(std::move(label), std::move(value));
  };
  put("real", format_double(c.re));
  put("imag", format_double(c.im));
  put("modulus", format_double(polar.r));
  put("angle", format_double(polar.phi));
  put("real.bits", std::to_string(re_bits));
  put("imag.bits", std::to_string(im_bits));
  put("modulus.bits", std::to_string(r_bits));
  put("angle.bits", std::to_string(phi_bits));

  std::map<Method, Representation> reps;
  for (const Method m : kAllMethods) reps[m] = encode(c, m);
  put("polar-cantor", to_decimal(reps[Method::PolarCantor].value));
  put("polar-szudzik", to_decimal(reps[Method::PolarSzudzik].value));
  put("real.bitstring", to_bitstring(re_bits));
  put("imag.bitstring", to_bitstring(im_bits));
  put("modulus.bitstring", to_bitstring(r_bits));
  put("angle.bitstring", to_bitstring(phi_bits));
  put("polar-interleave", to_decimal(reps[Method::PolarInterleave].value));
  put("cartesian-interleave", to_decimal(reps[Method::CartesianInterleave].value));

  for (const Method m : kReportOrder) {
    const Representation& rep = reps[m];
    const std::string prefix{method_name(m)};
    NatPair parts;
    switch (m) {
      case Method::PolarCantor: parts = cantor_unpair(rep.value); break;
      case Method::PolarSzudzik: parts = szudzik_unpair(rep.value); break;
      default: parts = deinterleave(rep.value); break;
    }
    if (is_polar(m)) {
      put(prefix + ".modulus.bits", std::to_string(parts.first));
      put(prefix + ".angle.bits", std::to_string(parts.second));
      put(prefix + ".modulus", format_double(from_bits(parts.first)));
      put(prefix + ".angle", format_double(from_bits(parts.second)));
    } else {
      put(prefix + ".real.bitstring", to_bitstring(parts.first));
      put(prefix + ".imag.bitstring", to_bitstring(parts.second));
    }
    const Complex64 back = decode(rep);
    put(prefix + ".real", format_double(back.re));
    put(prefix + ".imag", format_double(back.im));
    put(prefix + ".error", format_scientific(roundtrip_error(c, back)));
  }
  return out;
}

std::string render_report(const std::map<Method, ErrorStats>& stats, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Csv) {
    out << "method,max_error,avg_error\n";
    for (const Method m : kReportOrder) {
      const auto it = stats.find(m);
      if (it == stats.end()) continue;
      out << method_name(m) << ',' << format_scientific(it->second.max_error()) << ','
          << format_scientific(it->second.mean_error()) << '\n';
    }
    return out.str();
  }
  auto row = [&out](std::string_view a, std::string_view b, std::string_view c) {
    out << a << std::string(22 - std::min<std::size_t>(a.size(), 21), ' ') << b
        << std::string(26 - std::min<std::size_t>(b.size(), 25), ' ') << c << '\n';
  };
  row("method", "max_error", "avg_error");
  for (const Method m : kReportOrder) {
    const auto it = stats.find(m);
    if (it == stats.end()) continue;
    row(method_name(m), format_scientific(it->second.max_error()),
        format_scientific(it->second.mean_error()));
  }
  return out.str();
}

std::string render_trace(const TraceRecord& record) {
  std::size_t width = 0;
  for (const auto& [label, value] : record) width = std::max(width, label.size());
  std::ostringstream out;
  for (const auto& [label, value] : record) {
    out << label << std::string(width - label.size() + 2, ' ') << value << '\n';
  }
  return out.str();
}

}  // namespace cxrep
