#include "fpsieve/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>

namespace fpsieve {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

/// Splits on blanks; comment handling is up to the caller.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool valid_token(std::string_view token) {
  return std::none_of(token.begin(), token.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return u < 0x20 || u == 0x7f || c == '(' || c == ')';
  });
}

std::uint32_t parse_uint(std::string_view field, std::size_t line_no, const char* what) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(field) + "'", line_no);
  }
  return v;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace

VerticalDatabase parse_basket(std::istream& in) {
  std::unordered_map<std::string, ItemId> ids;
  std::vector<std::string> names;
  std::vector<std::vector<ItemId>> transactions;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    std::vector<ItemId> txn;
    txn.reserve(fields.size());
    for (auto token : fields) {
      if (!valid_token(token)) throw ParseError("malformed item token '" + std::string(token) + "'", line_no);
      auto [it, inserted] = ids.try_emplace(std::string(token), static_cast<ItemId>(names.size()));
      if (inserted) names.emplace_back(token);
      txn.push_back(it->second);
    }
    std::sort(txn.begin(), txn.end());
    txn.erase(std::unique(txn.begin(), txn.end()), txn.end());
    transactions.push_back(std::move(txn));
  }
  if (in.bad()) throw Error("read failure");
  const std::size_t m = names.size();
  return build_vertical(transactions, m, std::move(names));
}

void write_basket(const VerticalDatabase& db, std::ostream& out) {
  std::string line;
  for (const auto& txn : db.to_horizontal()) {
    line.clear();
    for (std::size_t k = 0; k < txn.size(); ++k) {
      if (k > 0) line += ' ';
      line += db.names[txn[k]];
    }
    line += '\n';
    out << line;
  }
}

void RecordSchema::validate() const {
  if (stride < 2) throw Error("stride must be >= 2");
  for (std::size_t i = 0; i < arities.size(); ++i) {
    if (arities[i] < 1 || arities[i] >= stride) {
      throw Error("variable " + std::to_string(i + 1) + " arity " + std::to_string(arities[i]) +
                  " outside [1, " + std::to_string(stride - 1) + "]");
    }
  }
}

RecordSchema parse_schema(std::istream& in) {
  RecordSchema schema;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(strip_comment(line));
    if (fields.empty()) continue;
    if (fields[0] == "stride") {
      if (fields.size() != 2) throw ParseError("expected 'stride S'", line_no);
      schema.stride = parse_uint(fields[1], line_no, "stride");
      continue;
    }
    for (auto f : fields) schema.arities.push_back(parse_uint(f, line_no, "arity"));
  }
  try {
    schema.validate();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
  return schema;
}

VerticalDatabase parse_record(std::istream& in, const RecordSchema& schema) {
  schema.validate();
  const std::size_t m = schema.variable_count();
  std::unordered_map<std::uint32_t, ItemId> ids;
  std::vector<std::string> names;
  std::vector<std::uint32_t> variables;
  std::vector<std::vector<ItemId>> transactions;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() != m) {
      throw ParseError("expected " + std::to_string(m) + " fields, got " + std::to_string(fields.size()),
                       line_no);
    }
    std::vector<ItemId> txn;
    txn.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      const auto value = parse_uint(fields[i], line_no, "value");
      if (value < 1 || value > schema.arities[i]) {
        throw ParseError("value " + std::to_string(value) + " of variable " + std::to_string(i + 1) +
                             " outside [1, " + std::to_string(schema.arities[i]) + "]",
                         line_no);
      }
      const auto variable = static_cast<std::uint32_t>(i + 1);
      const auto code = encode_record_item(variable, value, schema.stride);
      auto [it, inserted] = ids.try_emplace(code, static_cast<ItemId>(names.size()));
      if (inserted) {
        names.push_back(std::to_string(code));
        variables.push_back(variable);
      }
      txn.push_back(it->second);
    }
    transactions.push_back(std::move(txn));
  }
  if (in.bad()) throw Error("read failure");
  const std::size_t items = names.size();
  auto db = build_vertical(transactions, items, std::move(names));
  db.variables = std::move(variables);
  return db;
}

std::string format_pattern(const PatternView& pattern, std::span<const std::string> names) {
  std::string line = std::to_string(pattern.support);
  line += '\t';
  std::size_t g = 0;
  for (std::size_t i = 0; i < pattern.items.size(); ++i) {
    if (i > 0) line += ' ';
    line += names[pattern.items[i]];
    for (; g < pattern.groups.size() && pattern.groups[g].anchor == i; ++g) {
      line += " (";
      const auto& items = pattern.groups[g].items;
      for (std::size_t k = 0; k < items.size(); ++k) {
        if (k > 0) line += ' ';
        line += names[items[k]];
      }
      line += ')';
    }
  }
  return line;
}

void write_patterns(std::span<const Pattern> patterns, std::span<const std::string> names,
                    std::ostream& out) {
  for (const auto& p : patterns) out << format_pattern(PatternView{p.items, p.support, p.groups}, names) << '\n';
}

void sort_by_support(std::vector<Pattern>& patterns) {
  std::stable_sort(patterns.begin(), patterns.end(),
                   [](const Pattern& a, const Pattern& b) { return a.support > b.support; });
}

void PatternWriter::consume(const PatternView& pattern) {
  line_ = format_pattern(pattern, names_);
  line_ += '\n';
  out_ << line_;
}

void write_stats(const MiningStats& stats, std::ostream& out) {
  out << "total_patterns=" << stats.total_patterns() << '\n';
  for (std::size_t k = 1; k < stats.patterns_per_length.size(); ++k) {
    out << "patterns_len_" << k << '=' << stats.patterns_per_length[k] << '\n';
  }
  out << "total_filtered=" << stats.total_filtered() << '\n';
  for (std::size_t k = 1; k < stats.filtered_per_length.size(); ++k) {
    out << "filtered_len_" << k << '=' << stats.filtered_per_length[k] << '\n';
  }
  for (std::size_t k = 1; k < stats.level_seconds.size(); ++k) {
    out << "level_seconds_" << k << '=' << stats.level_seconds[k] << '\n';
  }
  out << "contexts_built=" << stats.contexts_built << '\n';
  out << "grouped_elements=" << stats.grouped_elements << '\n';
  out << "exclusive_skips=" << stats.exclusive_skips << '\n';
  out << "root_bytes=" << stats.root_bytes << '\n';
  out << "peak_bytes=" << stats.peak_bytes << '\n';
  out << "total_seconds=" << stats.total_seconds << '\n';
}

}  // namespace fpsieve
