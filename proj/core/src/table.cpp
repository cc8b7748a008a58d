#include "dhall/table.hpp"

#include "dhall/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace dhall {

Rational parse_fraction(const std::string& text) {
  const std::size_t slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto integer = [&](const std::string& s, bool allow_sign) {
    const std::size_t first = allow_sign && !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == first || s.find_first_not_of("0123456789", first) != std::string::npos)
      throw ParseError("bad fraction '" + text + "'");
    return BigInt(s);
  };
  const BigInt d = integer(den, false);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(integer(num, true), d);
}

void ConstantTable::sort() {
  std::sort(records.begin(), records.end(), [](const TableRecord& a, const TableRecord& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  });
}

std::string ConstantTable::serialize() const {
  std::string out;
  for (const auto& [key, value] : header) out += "# " + key + ": " + value + "\n";
  for (const auto& r : records) out += r.x + "\t" + r.y + "\t" + r.z + "\t" + to_fraction_string(r.value) + "\n";
  return out;
}

ConstantTable ConstantTable::parse(const std::string& text, const std::string& source) {
  ConstantTable table;
  std::istringstream in(text);
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::size_t colon = line.find(": ");
      if (line.size() < 2 || line[1] != ' ' || colon == std::string::npos)
        throw ParseError(where + "malformed header line");
      table.header.emplace_back(line.substr(2, colon - 2), line.substr(colon + 2));
      continue;
    }
    std::vector<std::string> fields;
    std::istringstream cells(line);
    for (std::string cell; std::getline(cells, cell, '\t');) fields.push_back(cell);
    if (fields.size() != 4) throw ParseError(where + "expected 4 tab-separated fields");
    try {
      table.records.push_back({fields[0], fields[1], fields[2], parse_fraction(fields[3])});
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
  }
  return table;
}

void write_table(const std::filesystem::path& path, const ConstantTable& table) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << table.serialize();
  if (!out.flush()) throw std::runtime_error(path.string() + ": write failed");
}

ConstantTable read_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path.string() + ": cannot open for reading");
  std::ostringstream text;
  text << in.rdbuf();
  return ConstantTable::parse(text.str(), path.string());
}

std::optional<ConstantTable> load_cached_table(const std::filesystem::path& path,
                                               const std::vector<std::pair<std::string, std::string>>& header) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  try {
    ConstantTable t = read_table(path);
    if (t.header == header) return t;
  } catch (const ParseError&) {
  }
  return std::nullopt;
}

}  // namespace dhall
