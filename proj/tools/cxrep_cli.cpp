// cxrep: encode complex numbers as single naturals and measure roundtrip error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cxrep/complex_literal.hpp"
#include "cxrep/csv_table.hpp"
#include "cxrep/errors.hpp"
#include "cxrep/experiment.hpp"
#include "cxrep/pairing.hpp"
#include "cxrep/representation.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

cxrep::Method method_or_throw(const std::string& name) {
  const auto m = cxrep::parse_method(name);
  if (!m) throw UsageError("unknown method '" + name + "'");
  return *m;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

struct CsvArgs {
  std::string method;
  std::string input;
  std::string output;
  std::vector<std::string> columns;
  bool normalize = false;
};

void add_csv_options(CLI::App* cmd, CsvArgs& args) {
  cmd->add_option("--method", args.method, "Representation method")->required();
  cmd->add_option("--input", args.input, "Input CSV file")->required();
  cmd->add_option("--output", args.output, "Output CSV file")->required();
  cmd->add_option("--column", args.columns, "Column name or zero-based index (repeatable)")
      ->required();
  cmd->add_flag("--normalize", args.normalize, "Emit value / 10^37 as a double");
}

int run_csv(const CsvArgs& args, cxrep::Direction direction) {
  const cxrep::Method method = method_or_throw(args.method);
  if (direction == cxrep::Direction::Decode && args.normalize) {
    throw UsageError("--normalize is encode-only; normalized columns cannot be decoded");
  }
  std::vector<cxrep::ColumnSpec> specs;
  for (const auto& col : args.columns) {
    cxrep::ColumnSpec spec;
    spec.method = method;
    spec.normalize = args.normalize;
    const bool numeric = !col.empty() && col.find_first_not_of("0123456789") == std::string::npos;
    if (numeric) {
      spec.column = static_cast<std::size_t>(std::stoull(col));
    } else {
      spec.column = col;
    }
    specs.push_back(std::move(spec));
  }

  std::ifstream in(args.input, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input '" + args.input + "'");
  const cxrep::CsvTable table = cxrep::read_csv(in);
  const cxrep::CsvTable result = cxrep::transform_csv(table, specs, direction);

  std::ofstream out(args.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output '" + args.output + "'");
  cxrep::write_csv(out, result);
  if (!out) throw std::runtime_error("failed writing '" + args.output + "'");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Represent complex numbers as single natural numbers"};
  app.require_subcommand(1);

  CsvArgs encode_args;
  auto* encode_cmd = app.add_subcommand("encode", "Replace complex CSV columns with representation codes");
  add_csv_options(encode_cmd, encode_args);

  CsvArgs decode_args;
  auto* decode_cmd = app.add_subcommand("decode", "Restore complex CSV columns from representation codes");
  add_csv_options(decode_cmd, decode_args);

  std::string pair_function;
  std::vector<std::string> pair_operands;
  auto* pair_cmd = app.add_subcommand("pair", "Pair two 64-bit naturals");
  pair_cmd->add_option("--function", pair_function, "cantor, szudzik or interleave")->required();
  pair_cmd->add_option("operands", pair_operands, "p q")->expected(2)->required();

  std::string unpair_function;
  std::string unpair_value;
  auto* unpair_cmd = app.add_subcommand("unpair", "Split a paired value into its two naturals");
  unpair_cmd->add_option("--function", unpair_function, "cantor, szudzik or interleave")->required();
  unpair_cmd->add_option("value", unpair_value, "Paired value (decimal)")->required();

  cxrep::SweepConfig sweep;
  std::vector<std::string> sweep_methods;
  std::string sweep_format = "table";
  auto* verify_cmd = app.add_subcommand("verify", "Roundtrip error sweep over random complex numbers");
  verify_cmd->add_option("--samples", sweep.sample_count, "Number of complex samples")
      ->capture_default_str();
  verify_cmd->add_option("--seed", sweep.seed, "Generator seed")->capture_default_str();
  verify_cmd->add_option("--methods", sweep_methods, "Comma separated methods (default: all)");
  verify_cmd->add_option("--shards", sweep.shard_count, "Parallel shards")->capture_default_str();
  verify_cmd->add_option("--bound", sweep.component_bound, "Component range [-bound, bound)")
      ->capture_default_str();
  verify_cmd->add_option("--format", sweep_format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}))
      ->capture_default_str();

  std::string trace_literal;
  auto* trace_cmd = app.add_subcommand("trace", "List every intermediate value for one complex number");
  trace_cmd->add_option("complex", trace_literal, "Complex literal, e.g. 1.5-2.25i")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*encode_cmd) return run_csv(encode_args, cxrep::Direction::Encode);
    if (*decode_cmd) return run_csv(decode_args, cxrep::Direction::Decode);

    if (*pair_cmd) {
      const auto p = cxrep::parse_nat64(pair_operands.at(0));
      const auto q = cxrep::parse_nat64(pair_operands.at(1));
      cxrep::Nat128 v;
      if (pair_function == "cantor") {
        v = cxrep::cantor_pair(p, q);
      } else if (pair_function == "szudzik") {
        v = cxrep::szudzik_pair(p, q);
      } else if (pair_function == "interleave") {
        v = cxrep::interleave(p, q);
      } else {
        throw UsageError("unknown pairing function '" + pair_function + "'");
      }
      std::cout << cxrep::to_decimal(v) << '\n';
      return 0;
    }

    if (*unpair_cmd) {
      const cxrep::Nat128 v = cxrep::parse_nat128(unpair_value);
      cxrep::NatPair pq;
      if (unpair_function == "cantor") {
        pq = cxrep::cantor_unpair(v);
      } else if (unpair_function == "szudzik") {
        pq = cxrep::szudzik_unpair(v);
      } else if (unpair_function == "interleave") {
        pq = cxrep::deinterleave(v);
      } else {
        throw UsageError("unknown pairing function '" + unpair_function + "'");
      }
      std::cout << pq.first << ' ' << pq.second << '\n';
      return 0;
    }

    if (*verify_cmd) {
      if (!sweep_methods.empty()) {
        sweep.methods.clear();
        for (const auto& name : split_list(sweep_methods)) sweep.methods.push_back(method_or_throw(name));
      }
      try {
        sweep.validate();
      } catch (const cxrep::ConfigError& e) {
        throw UsageError(e.what());
      }
      const auto stats = cxrep::run_sweep(sweep);
      std::cout << cxrep::render_report(
          stats, sweep_format == "csv" ? cxrep::ReportFormat::Csv : cxrep::ReportFormat::Table);
      return 0;
    }

    if (*trace_cmd) {
      std::cout << cxrep::render_trace(cxrep::trace(cxrep::parse_complex(trace_literal)));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cxrep::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
