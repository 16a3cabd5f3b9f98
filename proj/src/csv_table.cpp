#include "cxrep/csv_table.hpp"

#include <istream>
#include <iterator>
#include <ostream>
#include <set>

#include "cxrep/complex_literal.hpp"
#include "cxrep/errors.hpp"
#include "cxrep/experiment.hpp"

namespace cxrep {
namespace {

bool needs_quotes(const std::string& v) {
  return v.find_first_of(",\"\r\n") != std::string::npos;
}

struct Resolved {
  std::size_t index;
  std::string output_name;
  Method method;
  bool normalize;
};

std::size_t find_header(const CsvRow& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i].value == name) return i;
  }
  return header.size();
}

Resolved resolve(const CsvRow& header, const ColumnSpec& spec, Direction direction) {
  std::size_t index = header.size();
  if (const auto* pos = std::get_if<std::size_t>(&spec.column)) {
    index = *pos;
  } else {
    const auto& name = std::get<std::string>(spec.column);
    index = find_header(header, name);
    if (index == header.size() && direction == Direction::Decode) {
      index = find_header(header, encoded_column_name(name, spec.method));
    }
  }
  if (index >= header.size()) {
    const std::string label = std::holds_alternative<std::string>(spec.column)
                                  ? std::get<std::string>(spec.column)
                                  : std::to_string(std::get<std::size_t>(spec.column));
    throw ConfigError("column '" + label + "' is not in the header");
  }
  std::string name = header[index].value;
  if (direction == Direction::Encode) {
    name = encoded_column_name(name, spec.method);
  } else {
    const std::string suffix = "__" + std::string(method_name(spec.method));
    if (name.size() > suffix.size() && name.ends_with(suffix)) name.resize(name.size() - suffix.size());
  }
  return {index, std::move(name), spec.method, spec.normalize};
}

std::string transform_cell(const std::string& cell, const Resolved& col, Direction direction) {
  if (direction == Direction::Encode) {
    const Representation rep = encode(parse_complex(cell), col.method);
    return col.normalize ? format_double(normalize(rep)) : to_decimal(rep.value);
  }
  return format_complex(decode({col.method, parse_nat128(cell)}));
}

}  // namespace

CsvField CsvField::from_value(std::string value) {
  CsvField f;
  if (needs_quotes(value)) {
    f.raw = "\"";
    for (const char ch : value) {
      if (ch == '"') f.raw += '"';
      f.raw += ch;
    }
    f.raw += '"';
  } else {
    f.raw = value;
  }
  f.value = std::move(value);
  return f;
}

CsvTable read_csv(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  CsvTable table;
  std::vector<CsvRow> records;
  CsvRow record;
  CsvField field;
  bool line_ending_seen = false;
  std::size_t i = 0;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field = CsvField{};
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(record));
    record.clear();
  };

  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '"' && field.raw.empty()) {
      std::size_t j = i + 1;
      for (;;) {
        if (j >= text.size()) throw ParseError("unterminated quoted CSV field", i);
        if (text[j] == '"') {
          if (j + 1 < text.size() && text[j + 1] == '"') {
            field.value += '"';
            j += 2;
            continue;
          }
          break;
        }
        field.value += text[j++];
      }
      field.raw.assign(text, i, j + 1 - i);
      i = j + 1;
      if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
        throw ParseError("unexpected character after quoted CSV field", i);
      }
      continue;
    }
    if (ch == ',') {
      end_field();
      ++i;
    } else if (ch == '\n' || (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n')) {
      const std::size_t len = ch == '\r' ? 2 : 1;
      if (!line_ending_seen) {
        table.line_ending = text.substr(i, len);
        line_ending_seen = true;
      }
      end_record();
      i += len;
    } else {
      field.value += ch;
      field.raw += ch;
      ++i;
    }
  }
  if (!field.raw.empty() || !record.empty()) end_record();

  if (records.empty()) throw ParseError("CSV input has no header row", 0);
  table.header = std::move(records.front());
  table.rows.assign(std::make_move_iterator(records.begin() + 1),
                    std::make_move_iterator(records.end()));
  return table;
}

void write_csv(std::ostream& out, const CsvTable& table) {
  auto write_row = [&](const CsvRow& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) out << ',';
      out << row[i].raw;
    }
    out << table.line_ending;
  };
  write_row(table.header);
  for (const auto& row : table.rows) write_row(row);
}

std::string encoded_column_name(const std::string& base, Method m) {
  return base + "__" + std::string(method_name(m));
}

CsvTable transform_csv(const CsvTable& input, const std::vector<ColumnSpec>& specs,
                       Direction direction) {
  std::vector<Resolved> columns;
  std::set<std::size_t> seen;
  for (const auto& spec : specs) {
    if (direction == Direction::Decode && spec.normalize) {
      throw ConfigError("normalized columns cannot be decoded");
    }
    columns.push_back(resolve(input.header, spec, direction));
    if (!seen.insert(columns.back().index).second) {
      throw ConfigError("column '" + input.header[columns.back().index].value +
                        "' is listed more than once");
    }
  }

  CsvTable out = input;
  for (const auto& col : columns) out.header[col.index] = CsvField::from_value(col.output_name);

  for (std::size_t r = 0; r < out.rows.size(); ++r) {
    CsvRow& row = out.rows[r];
    for (const auto& col : columns) {
      const std::string& column_name = input.header[col.index].value;
      if (col.index >= row.size()) {
        throw CsvError("row " + std::to_string(r + 1) + " has no field for column '" +
                           column_name + "'",
                       r + 1, column_name);
      }
      try {
        row[col.index] = CsvField::from_value(transform_cell(row[col.index].value, col, direction));
      } catch (const std::exception& e) {
        throw CsvError("row " + std::to_string(r + 1) + ", column '" + column_name + "': " + e.what(),
                       r + 1, column_name);
      }
    }
  }
  return out;
}

}  // namespace cxrep
