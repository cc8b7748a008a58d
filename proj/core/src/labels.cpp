#include "dhall/labels.hpp"

#include "dhall/errors.hpp"

#include <charconv>
#include <vector>

namespace dhall {

namespace {

std::vector<std::string_view> split_terms(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t plus = text.find('+', start);
    out.push_back(text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return out;
}

int parse_int(std::string_view digits, std::string_view term) {
  int value = 0;
  const char* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (digits.empty() || ec != std::errc{} || ptr != end)
    throw ParseError("bad integer '" + std::string(digits) + "' in term '" + std::string(term) + "'");
  return value;
}

// "name" or "name^mult"
IsoClass parse_summand(const Heart& heart, std::string_view term) {
  if (term.empty()) throw ParseError("empty term in label");
  const std::size_t caret = term.find('^');
  const std::string name(term.substr(0, caret));
  int mult = 1;
  if (caret != std::string_view::npos) {
    mult = parse_int(term.substr(caret + 1), term);
    if (mult <= 0) throw ParseError("multiplicity must be positive in term '" + std::string(term) + "'");
  }
  return IsoClass::single(heart.label_of_name(name), mult);
}

std::string summand(const Heart& heart, std::size_t label, int mult) {
  std::string s = heart.name(label);
  if (mult != 1) s += "^" + std::to_string(mult);
  return s;
}

}  // namespace

std::string format_iso(const Heart& heart, const IsoClass& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [label, mult] : x.parts) {
    if (!out.empty()) out += '+';
    out += summand(heart, label, mult);
  }
  return out;
}

std::string format_graded(const Heart& heart, const GradedObject& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (auto it = x.parts.rbegin(); it != x.parts.rend(); ++it)
    for (const auto& [label, mult] : it->second.parts) {
      if (!out.empty()) out += '+';
      out += summand(heart, label, mult) + "[" + std::to_string(it->first) + "]";
    }
  return out;
}

IsoClass parse_iso(const Heart& heart, std::string_view text) {
  if (text == "0") return {};
  IsoClass out;
  for (std::string_view term : split_terms(text)) out = out + parse_summand(heart, term);
  return out;
}

GradedObject parse_graded(const Heart& heart, std::string_view text) {
  if (text == "0") return {};
  GradedObject out;
  for (std::string_view term : split_terms(text)) {
    int degree = 0;
    std::string_view body = term;
    if (const std::size_t open = term.find('['); open != std::string_view::npos) {
      if (term.back() != ']') throw ParseError("unterminated degree in term '" + std::string(term) + "'");
      degree = parse_int(term.substr(open + 1, term.size() - open - 2), term);
      body = term.substr(0, open);
    }
    out = out + GradedObject::in_degree(parse_summand(heart, body), degree);
  }
  return out;
}

}  // namespace dhall
