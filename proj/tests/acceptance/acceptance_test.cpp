// Acceptance suite: one PASS/FAIL line per criterion. Usage:
//   acceptance_test <path-to-cxrep-cli>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <unistd.h>

#include "cxrep/complex_literal.hpp"
#include "cxrep/csv_table.hpp"
#include "cxrep/experiment.hpp"
#include "cxrep/float_bits.hpp"
#include "cxrep/pairing.hpp"
#include "cxrep/representation.hpp"
#include "oracles.hpp"

using namespace cxrep;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSweepSeed = 20180101;

std::string g_cli;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct CommandResult {
  int status = -1;
  std::string output;
  double seconds = 0.0;
};

CommandResult run_command(const std::string& cmd) {
  CommandResult r;
  const auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  r.status = pclose(pipe);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

std::map<std::string, std::string> parse_trace(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string label, value;
    ls >> label >> value;
    out[label] = value;
  }
  return out;
}

std::map<std::string, std::pair<std::string, std::string>> parse_report_csv(const std::string& text) {
  std::map<std::string, std::pair<std::string, std::string>> out;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    const auto a = line.find(',');
    const auto b = line.find(',', a + 1);
    out[line.substr(0, a)] = {line.substr(a + 1, b - a - 1), line.substr(b + 1)};
  }
  return out;
}

std::uint64_t ulps(double a, double b) { return cxrep::testing::ulp_distance(a, b); }

// 1. Golden trace of the reference sample.
Outcome golden_trace() {
  Outcome o;
  const auto r = run_command(quote(g_cli) + " trace " +
                             quote("6.7771673222051697E18+3.6003875414142131E18i"));
  o.require(r.status == 0, "trace exited with failure");
  auto t = parse_trace(r.output);
  const std::map<std::string, std::string> exact = {
      {"real.bits", "4888520323532708650"},
      {"imag.bits", "4884430403359071803"},
      {"modulus.bits", "4889396296485818748"},
      {"angle.bits", "4602468698391823727"},
      {"polar-cantor", "45047750540491773913433549502792707777"},
      {"polar-szudzik", "23906196144089240399724999666785929979"},
      {"polar-interleave", "49679650227602418166657328428407275253"},
      {"cartesian-interleave", "63885745057879574985027357472836160973"},
      {"cartesian-interleave.error", "0.0"},
  };
  for (const auto& [label, want] : exact) {
    o.require(t[label] == want, label + " = " + t[label] + ", expected " + want);
  }
  for (const char* m : {"polar-cantor", "polar-szudzik", "polar-interleave"}) {
    const std::string label = std::string(m) + ".error";
    o.require(!t[label].empty() && std::stod(t[label]) == 6.671736816409259E-17,
              label + " = " + t[label]);
  }
  o.require(!t["modulus"].empty() && ulps(std::stod(t["modulus"]), 7.67416362618991E18) <= 1,
            "modulus off by more than 1 ulp");
  o.require(!t["angle"].empty() && ulps(std::stod(t["angle"]), 0.4883359535588942) <= 1,
            "angle off by more than 1 ulp");
  o.require(r.seconds < 1.0, "runtime " + std::to_string(r.seconds) + " s");
  if (o.ok) o.detail = "runtime " + std::to_string(r.seconds) + " s";
  return o;
}

// 2. Desk-scale sweep, 10^6 samples.
Outcome desk_sweep() {
  Outcome o;
  const auto r = run_command(quote(g_cli) + " verify --samples 1000000 --seed " +
                             std::to_string(kSweepSeed) + " --format csv");
  o.require(r.status == 0, "verify exited with failure");
  auto rows = parse_report_csv(r.output);
  o.require(rows.size() == 4, "expected four report rows");
  const auto cart = rows["cartesian-interleave"];
  o.require(cart.first == "0.0" && cart.second == "0.0", "cartesian row not exactly zero");
  const auto cantor = rows["polar-cantor"];
  o.require(rows["polar-szudzik"] == cantor && rows["polar-interleave"] == cantor,
            "polar rows differ");
  if (!cantor.first.empty()) {
    const double max = std::stod(cantor.first);
    const double mean = std::stod(cantor.second);
    o.require(max >= 1e-16 && max <= 5e-15, "polar max " + cantor.first + " outside [1e-16, 5e-15]");
    o.require(mean >= 5e-17 && mean <= 5e-16, "polar mean " + cantor.second + " outside [5e-17, 5e-16]");
    if (o.ok) o.detail = "polar max " + cantor.first + ", mean " + cantor.second;
  }
  o.require(r.seconds < 60.0, "runtime " + std::to_string(r.seconds) + " s");
  if (o.ok) o.detail += ", runtime " + std::to_string(r.seconds) + " s";
  return o;
}

// 3. Pairing roundtrips.
Outcome pairing_roundtrips() {
  Outcome o;
  std::uint64_t failures = 0;
  for (Nat64 p = 0; p < 512; ++p) {
    for (Nat64 q = 0; q < 512; ++q) {
      if (cantor_unpair(cantor_pair(p, q)) != NatPair(p, q)) ++failures;
      if (szudzik_unpair(szudzik_pair(p, q)) != NatPair(p, q)) ++failures;
    }
  }
  std::mt19937_64 rng(301);
  for (int i = 0; i < 100'000; ++i) {
    const Nat64 p = rng() >> 1;
    const Nat64 q = rng() >> 1;
    if (cantor_unpair(cantor_pair(p, q)) != NatPair(p, q)) ++failures;
    if (szudzik_unpair(szudzik_pair(p, q)) != NatPair(p, q)) ++failures;
  }
  for (int i = 0; i < 100'000; ++i) {
    const Nat64 a = rng();
    const Nat64 b = rng();
    if (deinterleave(interleave(a, b)) != NatPair(a, b)) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " roundtrip failures");
  if (o.ok) o.detail = "0 failures";
  return o;
}

// 4. Injectivity on [0, 256)^2.
Outcome injectivity() {
  Outcome o;
  struct Hash {
    std::size_t operator()(Nat128 v) const noexcept {
      return std::hash<std::uint64_t>{}(low64(v) ^ (high64(v) * 0x9E3779B97F4A7C15ULL));
    }
  };
  const std::array<std::pair<const char*, std::function<Nat128(Nat64, Nat64)>>, 3> fns = {{
      {"cantor", [](Nat64 p, Nat64 q) { return cantor_pair(p, q); }},
      {"szudzik", [](Nat64 p, Nat64 q) { return szudzik_pair(p, q); }},
      {"interleave", [](Nat64 p, Nat64 q) { return interleave(p, q); }},
  }};
  for (const auto& [name, fn] : fns) {
    std::unordered_set<Nat128, Hash> seen;
    for (Nat64 p = 0; p < 256; ++p) {
      for (Nat64 q = 0; q < 256; ++q) seen.insert(fn(p, q));
    }
    o.require(seen.size() == 65536, std::string(name) + ": " + std::to_string(seen.size()) + " distinct");
  }
  if (o.ok) o.detail = "65536 distinct per function";
  return o;
}

// 5. isqrt bracket check with exact arithmetic.
Outcome isqrt_oracle() {
  Outcome o;
  std::mt19937_64 rng(505);
  int failures = 0;
  for (int i = 0; i < 100'000; ++i) {
    const Nat128 n = make_nat128(rng() >> (rng() % 65 == 64 ? 63 : rng() % 64), rng());
    if (!cxrep::testing::brackets_sqrt(isqrt(n), n)) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " failures");
  if (o.ok) o.detail = "0 failures";
  return o;
}

// 6. Polar methods decode bit-identically.
Outcome polar_equivalence() {
  Outcome o;
  const SampleGenerator gen(606, SweepConfig{}.component_bound);
  int mismatches = 0;
  for (std::uint64_t i = 0; i < 10'000; ++i) {
    const Complex64 c = gen.at(i);
    const Complex64 a = decode(encode(c, Method::PolarCantor));
    const Complex64 b = decode(encode(c, Method::PolarSzudzik));
    const Complex64 d = decode(encode(c, Method::PolarInterleave));
    const bool same = to_bits(a.re) == to_bits(b.re) && to_bits(a.im) == to_bits(b.im) &&
                      to_bits(a.re) == to_bits(d.re) && to_bits(a.im) == to_bits(d.im);
    if (!same) ++mismatches;
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatching samples");
  if (o.ok) o.detail = "10000 samples identical";
  return o;
}

// 7. Shard invariance.
Outcome shard_invariance() {
  Outcome o;
  SweepConfig cfg;
  cfg.seed = kSweepSeed;
  cfg.sample_count = 1'000'000;
  cfg.shard_count = 1;
  const auto serial = run_sweep(cfg);
  cfg.shard_count = 8;
  const auto parallel = run_sweep(cfg);
  double worst = 0.0;
  for (const Method m : kAllMethods) {
    const auto& s = serial.at(m);
    const auto& p = parallel.at(m);
    o.require(s.count() == p.count(), std::string(method_name(m)) + " counts differ");
    o.require(s.max_error() == p.max_error(), std::string(method_name(m)) + " max differs");
    const double rel = s.mean_error() == 0.0 ? std::fabs(p.mean_error())
                                             : std::fabs(p.mean_error() - s.mean_error()) / s.mean_error();
    worst = std::max(worst, rel);
    o.require(rel <= 1e-12, std::string(method_name(m)) + " mean relative difference " + std::to_string(rel));
  }
  const std::string base = quote(g_cli) + " verify --samples 200000 --seed 7 --format csv --shards ";
  const auto one = run_command(base + "1");
  const auto eight = run_command(base + "8");
  o.require(one.status == 0 && eight.status == 0, "verify exited with failure");
  const auto r1 = parse_report_csv(one.output);
  const auto r8 = parse_report_csv(eight.output);
  for (const auto& [name, row] : r1) {
    o.require(r8.contains(name) && r8.at(name).first == row.first, "CLI max differs for " + name);
  }
  if (o.ok) {
    std::ostringstream d;
    d << "worst mean relative difference " << worst;
    o.detail = d.str();
  }
  return o;
}

// 8. CSV roundtrip through the CLI.
Outcome csv_roundtrip() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / ("cxrep_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path src = dir / "input.csv";
  const fs::path enc = dir / "encoded.csv";
  const fs::path dec = dir / "decoded.csv";

  std::mt19937_64 rng(808);
  std::vector<Complex64> values;
  std::vector<std::string> notes;
  {
    std::ofstream out(src, std::ios::binary);
    out << "id,signal,note\n";
    for (int i = 0; i < 1000; ++i) {
      double re, im;
      do re = from_bits(rng()); while (!std::isfinite(re));
      do im = from_bits(rng()); while (!std::isfinite(im));
      values.push_back({re, im});
      const std::string note = (i % 3 == 0) ? "\"row " + std::to_string(i) + ", \"\"quoted\"\"\""
                                            : "plain" + std::to_string(rng() % 1000);
      notes.push_back(note);
      out << i << ',' << format_complex(values.back()) << ',' << note << '\n';
    }
  }
  const std::string cli = quote(g_cli);
  const auto e = run_command(cli + " encode --method cartesian-interleave --input " + quote(src) +
                             " --output " + quote(enc) + " --column signal");
  const auto d = run_command(cli + " decode --method cartesian-interleave --input " + quote(enc) +
                             " --output " + quote(dec) + " --column signal");
  o.require(e.status == 0 && d.status == 0, "encode/decode exited with failure");

  std::ifstream in(dec, std::ios::binary);
  const CsvTable table = read_csv(in);
  o.require(table.header.size() == 3 && table.header[1].value == "signal", "header not restored");
  o.require(table.rows.size() == values.size(), "row count changed");
  int bad_cells = 0;
  int bad_passthrough = 0;
  for (std::size_t i = 0; i < table.rows.size() && i < values.size(); ++i) {
    const auto& row = table.rows[i];
    if (row.size() != 3) {
      ++bad_cells;
      continue;
    }
    const Complex64 back = parse_complex(row[1].value);
    if (to_bits(back.re) != to_bits(values[i].re) || to_bits(back.im) != to_bits(values[i].im) ||
        row[1].value != format_complex(values[i])) {
      ++bad_cells;
    }
    if (row[0].raw != std::to_string(i) || row[2].raw != notes[i]) ++bad_passthrough;
  }
  o.require(bad_cells == 0, std::to_string(bad_cells) + " complex cells changed");
  o.require(bad_passthrough == 0, std::to_string(bad_passthrough) + " pass-through fields changed");
  fs::remove_all(dir);
  if (o.ok) o.detail = "1000 rows bit-exact";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance_test <cxrep-cli>\n";
    return 2;
  }
  g_cli = argv[1];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 golden trace", golden_trace},
      {"2 desk-scale sweep", desk_sweep},
      {"3 pairing roundtrips", pairing_roundtrips},
      {"4 injectivity", injectivity},
      {"5 isqrt oracle", isqrt_oracle},
      {"6 polar equivalence", polar_equivalence},
      {"7 shard invariance", shard_invariance},
      {"8 csv roundtrip", csv_roundtrip},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& ex) {
      o.ok = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << " (" << o.detail << ")" << std::endl;
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
