#pragma once

#include "dhall/field_matrix.hpp"
#include "dhall/quiver.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dhall {

// A quiver and a characteristic, as read from a JSON file such as
//   {"name": "A2", "vertices": 2, "arrows": [[1, 2]], "p": 2}
// Vertices are 1-based in the file and 0-based here.
struct QuiverConfig {
  std::string name;
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  std::uint32_t p = 2;

  Quiver quiver() const;
  PrimeField field() const;
};

// Parses and validates; errors (ParseError) name the source and the key.
QuiverConfig parse_config(std::string_view json_text, const std::string& source = "<string>");
QuiverConfig load_config(const std::filesystem::path& path);

// Linearly oriented A_n, and D_n / E_6..E_8 with arrows pointing away from
// the first vertex of each arm; names like "A3", "D4", "E6".
QuiverConfig builtin_config(std::string_view name, std::uint32_t p = 2);

// A built-in name if `spec` is one, otherwise a config file path.
QuiverConfig resolve_config(const std::string& spec);

}  // namespace dhall
