#include "dhall/config.hpp"

#include "dhall/errors.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace dhall {

Quiver QuiverConfig::quiver() const {
  std::vector<Arrow> out;
  for (const auto& [s, t] : arrows) out.push_back({s, t});
  return Quiver(vertices, std::move(out));
}

PrimeField QuiverConfig::field() const { return PrimeField(p); }

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& what) {
  throw ParseError(source + ": " + where + ": " + what);
}

std::uint64_t positive_integer(const nlohmann::json& v, const std::string& source, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() <= 0) fail(source, where, "expected a positive integer");
  return v.get<std::uint64_t>();
}

}  // namespace

QuiverConfig parse_config(std::string_view json_text, const std::string& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  if (!doc.is_object()) fail(source, "top level", "expected an object");

  QuiverConfig cfg;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) fail(source, "key 'name'", "expected a string");
    cfg.name = it->get<std::string>();
  }
  if (!doc.contains("vertices")) fail(source, "key 'vertices'", "missing");
  cfg.vertices = positive_integer(doc["vertices"], source, "key 'vertices'");
  if (auto it = doc.find("p"); it != doc.end()) {
    cfg.p = static_cast<std::uint32_t>(positive_integer(*it, source, "key 'p'"));
    if (!is_prime(cfg.p)) fail(source, "key 'p'", std::to_string(cfg.p) + " is not prime");
  }
  if (auto it = doc.find("arrows"); it != doc.end()) {
    if (!it->is_array()) fail(source, "key 'arrows'", "expected a list of [source, target] pairs");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto& a = (*it)[i];
      const std::string where = "key 'arrows'[" + std::to_string(i) + "]";
      if (!a.is_array() || a.size() != 2) fail(source, where, "expected [source, target]");
      const auto s = positive_integer(a[0], source, where), t = positive_integer(a[1], source, where);
      if (s > cfg.vertices || t > cfg.vertices) fail(source, where, "vertex out of range 1.." + std::to_string(cfg.vertices));
      cfg.arrows.emplace_back(s - 1, t - 1);
    }
  }
  for (const auto& [key, value] : doc.items())
    if (key != "name" && key != "vertices" && key != "arrows" && key != "p") fail(source, "key '" + key + "'", "unknown key");

  try {
    const Quiver q = cfg.quiver();
    if (!q.is_finite_type()) fail(source, "key 'arrows'", "quiver is not of finite representation type");
  } catch (const std::invalid_argument& e) {
    fail(source, "key 'arrows'", e.what());
  }
  if (cfg.name.empty()) cfg.name = cfg.quiver().dynkin_type();
  return cfg;
}

QuiverConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open config file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.string());
}

QuiverConfig builtin_config(std::string_view name, std::uint32_t p) {
  if (name.size() < 2) throw ParseError("unknown quiver '" + std::string(name) + "'");
  std::size_t n = 0;
  const char* end = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(name.data() + 1, end, n);
  if (ec != std::errc{} || ptr != end || n == 0) throw ParseError("unknown quiver '" + std::string(name) + "'");

  QuiverConfig cfg;
  cfg.name = std::string(name);
  cfg.vertices = n;
  cfg.p = p;
  auto path = [&](std::size_t from, std::size_t to) {
    for (std::size_t v = from; v < to; ++v) cfg.arrows.emplace_back(v, v + 1);
  };
  switch (name.front()) {
    case 'A':
      path(0, n - 1);
      break;
    case 'D':
      // 0 -> 1 -> ... -> n-2, plus n-3 -> n-1
      if (n < 4) throw ParseError("D_n needs n >= 4");
      path(0, n - 2);
      cfg.arrows.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      // 0 -> 1 -> ... -> n-2 with the branch 2 -> n-1
      if (n < 6 || n > 8) throw ParseError("E_n needs 6 <= n <= 8");
      path(0, n - 2);
      cfg.arrows.emplace_back(2, n - 1);
      break;
    default:
      throw ParseError("unknown quiver '" + std::string(name) + "'");
  }
  if (!is_prime(p)) throw ParseError(std::to_string(p) + " is not prime");
  return cfg;
}

QuiverConfig resolve_config(const std::string& spec) {
  if (!spec.empty() && (spec.front() == 'A' || spec.front() == 'D' || spec.front() == 'E') &&
      spec.find_first_not_of("0123456789", 1) == std::string::npos)
    return builtin_config(spec);
  return load_config(spec);
}

}  // namespace dhall
