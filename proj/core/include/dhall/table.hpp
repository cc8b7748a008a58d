#pragma once

#include "dhall/numbers.hpp"

#include <compare>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace dhall {

struct TableRecord {
  std::string x, y, z;
  Rational value;

  friend bool operator==(const TableRecord&, const TableRecord&) = default;
};

// A list of structure constants g_{x,y}^z. Serialized as "#"-prefixed
// "key: value" header lines followed by tab-separated records
//   x <TAB> y <TAB> z <TAB> a/b
// sorted lexicographically by (x, y, z).
struct ConstantTable {
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<TableRecord> records;

  void sort();
  std::string serialize() const;
  static ConstantTable parse(const std::string& text, const std::string& source = "<string>");
};

// Throws std::runtime_error naming the path on I/O failure.
void write_table(const std::filesystem::path& path, const ConstantTable& table);
ConstantTable read_table(const std::filesystem::path& path);

// The table stored at `path` when it exists and carries exactly `header`.
std::optional<ConstantTable> load_cached_table(const std::filesystem::path& path,
                                               const std::vector<std::pair<std::string, std::string>>& header);

}  // namespace dhall
