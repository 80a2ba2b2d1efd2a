#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qmod/errors.hpp"
#include "qmod/local_quiver.hpp"
#include "qmod/poly.hpp"
#include "qmod/quiver.hpp"
#include "qmod/rational_function.hpp"

namespace qmod {

/// Contents of a quiver file.
///
///     # comment
///     vertex a
///     vertex b
///     arrow a b alpha     (the arrow name is optional)
///     d 2 2
///     n 2 2
///     theta 1/2 0
///     part 1 1 0          (multiplicity, then a summand dimension vector)
struct QuiverFile {
  Quiver quiver;
  std::optional<DimensionVector> d;
  std::optional<DimensionVector> n;
  std::optional<Stability> theta;
  PolystableType xi;

  /// Theta, or the trivial stability when the file has no theta line.
  Stability stability() const { return theta ? *theta : Stability::trivial(quiver.vertex_count()); }
};

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline int parse_count(const Token& t, std::size_t line) {
  static const std::regex pattern("\\+?[0-9]+");
  if (!std::regex_match(t.text, pattern) || t.text.size() > 9)
    throw ParseError(line, t.column, "expected a non-negative integer, got '" + t.text + "'");
  return std::stoi(t.text);
}

inline Rational parse_rational(const Token& t, std::size_t line) {
  static const std::regex pattern("[+-]?[0-9]+(/[0-9]+)?");
  if (!std::regex_match(t.text, pattern)) throw ParseError(line, t.column, "expected a rational, got '" + t.text + "'");
  std::string text = t.text[0] == '+' ? t.text.substr(1) : t.text;
  Rational r(text);
  if (r.get_den() == 0) throw ParseError(line, t.column, "zero denominator");
  r.canonicalize();
  return r;
}

}  // namespace detail

inline QuiverFile parse_quiver(std::istream& in) {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  std::vector<std::string> names;
  QuiverFile out;
  std::optional<std::vector<int>> d;
  std::optional<std::vector<int>> n;
  std::optional<std::vector<Rational>> theta;
  bool vectors_started = false;

  auto find = [&](const detail::Token& t, std::size_t line) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == t.text) return i;
    throw ParseError(line, t.column, "unknown vertex '" + t.text + "'");
  };

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto tokens = detail::tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& key = tokens[0].text;
    const std::size_t end_column = raw.size() + 1;
    if (key == "vertex") {
      if (vectors_started) throw ParseError(line, 1, "vertex declared after a vector line");
      if (tokens.size() != 2) throw ParseError(line, tokens.size() < 2 ? end_column : tokens[2].column,
                                               "expected 'vertex <name>'");
      for (const auto& v : vertices)
        if (v == tokens[1].text) throw ParseError(line, tokens[1].column, "duplicate vertex '" + v + "'");
      vertices.push_back(tokens[1].text);
    } else if (key == "arrow") {
      if (tokens.size() < 3 || tokens.size() > 4)
        throw ParseError(line, tokens.size() < 3 ? end_column : tokens[4].column,
                         "expected 'arrow <source> <target> [name]'");
      arrows.emplace_back(find(tokens[1], line), find(tokens[2], line));
      names.push_back(tokens.size() == 4 ? tokens[3].text : std::string());
    } else if (key == "d" || key == "n" || key == "part") {
      vectors_started = true;
      const std::size_t first = key == "part" ? 2 : 1;
      if (tokens.size() != vertices.size() + first)
        throw ParseError(line, tokens.size() > vertices.size() + first ? tokens[vertices.size() + first].column
                                                                       : end_column,
                         "expected " + std::to_string(vertices.size()) + " entries after '" + key + "'" +
                             (key == "part" ? " and the multiplicity" : ""));
      std::vector<int> v;
      for (std::size_t k = first; k < tokens.size(); ++k) v.push_back(detail::parse_count(tokens[k], line));
      if (key == "part") {
        const int z = detail::parse_count(tokens[1], line);
        if (z == 0) throw ParseError(line, tokens[1].column, "multiplicity must be positive");
        out.xi.multiplicities.push_back(z);
        out.xi.parts.emplace_back(std::move(v));
      } else {
        auto& slot = key == "d" ? d : n;
        if (slot) throw ParseError(line, 1, "duplicate '" + key + "' line");
        slot = std::move(v);
      }
    } else if (key == "theta") {
      vectors_started = true;
      if (theta) throw ParseError(line, 1, "duplicate 'theta' line");
      if (tokens.size() != vertices.size() + 1)
        throw ParseError(line, tokens.size() > vertices.size() + 1 ? tokens[vertices.size() + 1].column : end_column,
                         "expected " + std::to_string(vertices.size()) + " entries after 'theta'");
      std::vector<Rational> w;
      for (std::size_t k = 1; k < tokens.size(); ++k) w.push_back(detail::parse_rational(tokens[k], line));
      theta = std::move(w);
    } else {
      throw ParseError(line, tokens[0].column, "unknown keyword '" + key + "'");
    }
  }
  if (vertices.empty()) throw ParseError(line + 1, 1, "no vertices declared");
  out.quiver = Quiver(std::move(vertices), arrows, std::move(names));
  if (d) out.d = DimensionVector(std::move(*d));
  if (n) out.n = DimensionVector(std::move(*n));
  if (theta) out.theta = Stability(std::move(*theta));
  return out;
}

inline QuiverFile parse_quiver(const std::string& text) {
  std::istringstream in(text);
  return parse_quiver(in);
}

inline std::string format_vector(const DimensionVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

/// Writes a quiver file that parse_quiver reads back to the same data.
inline std::string format_quiver(const Quiver& q, const std::optional<DimensionVector>& d,
                                 const std::optional<DimensionVector>& n, const std::optional<Stability>& theta) {
  std::string out;
  for (const auto& v : q.vertex_names()) out += "vertex " + v + "\n";
  for (const auto& a : q.arrows())
    out += "arrow " + q.vertex_name(a.source) + " " + q.vertex_name(a.target) + " " + a.name + "\n";
  if (d) out += "d " + format_vector(*d) + "\n";
  if (n) out += "n " + format_vector(*n) + "\n";
  if (theta) {
    out += "theta";
    for (const auto& w : theta->weights()) out += " " + w.get_str();
    out += "\n";
  }
  return out;
}

}  // namespace qmod
