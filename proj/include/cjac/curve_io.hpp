#pragma once

// Curve files. Two formats, chosen by the first non-blank character:
//
//   JSON   {"vertices": [{"name": "C1", "genus": 1}, ...], "edges": [["C1", "C2"], ...]}
//
//   lines  # comment
//          vertex C1 1
//          vertex C2 0
//          edge C1 C2 3      (optional multiplicity; "edge C1 C1" is a self-node)
//
// Vertex order and edge order follow the file.

#include "cjac/error.hpp"
#include "cjac/graph.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cjac {

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

inline DualGraph curve_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte is 1-based and points just past the offending character
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(what, line, column);
  }
  auto fail = [](const std::string& what) { throw InvalidInput("curve file: " + what); };
  if (!doc.is_object()) fail("top level must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) fail("missing array \"vertices\"");

  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    const auto& v = doc["vertices"][i];
    const std::string at = "vertices[" + std::to_string(i) + "]";
    if (!v.is_object()) fail(at + " must be an object");
    if (!v.contains("name") || !v["name"].is_string()) fail(at + ".name must be a string");
    if (!v.contains("genus") || !v["genus"].is_number_integer()) fail(at + ".genus must be an integer");
    vertices.push_back({v["name"].get<std::string>(), v["genus"].get<int>()});
  }

  std::vector<std::pair<std::string, std::string>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) fail("\"edges\" must be an array");
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
      const auto& e = doc["edges"][i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        fail("edges[" + std::to_string(i) + "] must be a pair of vertex names");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return DualGraph::from_names(std::move(vertices), edges);
}

struct Token {
  std::string_view text;
  std::size_t column;
};

inline std::vector<Token> split_words(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline int parse_int(const Token& t, std::size_t line, const char* what) {
  int value = 0;
  const char* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw ParseError(std::string("expected ") + what, line, t.column);
  return value;
}

inline DualGraph curve_from_lines(std::string_view text) {
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) continue;

    const auto& kw = words[0];
    if (kw.text == "vertex") {
      if (words.size() != 3) throw ParseError("expected: vertex NAME GENUS", line_no, kw.column);
      vertices.push_back({std::string(words[1].text), parse_int(words[2], line_no, "integer genus")});
    } else if (kw.text == "edge") {
      if (words.size() != 3 && words.size() != 4)
        throw ParseError("expected: edge NAME NAME [MULTIPLICITY]", line_no, kw.column);
      const int mult = words.size() == 4 ? parse_int(words[3], line_no, "integer multiplicity") : 1;
      if (mult < 1) throw ParseError("multiplicity must be positive", line_no, words[3].column);
      for (int k = 0; k < mult; ++k) edges.emplace_back(std::string(words[1].text), std::string(words[2].text));
    } else {
      throw ParseError("unknown keyword '" + std::string(kw.text) + "'", line_no, kw.column);
    }
  }
  return DualGraph::from_names(std::move(vertices), edges);
}

}  // namespace detail

inline DualGraph parse_curve(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return detail::curve_from_json(text);
  return detail::curve_from_lines(text);
}

/// Reads a curve file; "-" reads standard input.
inline DualGraph read_curve(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open curve file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return parse_curve(text);
}

inline nlohmann::json curve_to_json(const DualGraph& g) {
  nlohmann::json vertices = nlohmann::json::array(), edges = nlohmann::json::array();
  for (const auto& v : g.vertices()) vertices.push_back({{"name", v.name}, {"genus", v.genus}});
  for (const auto& e : g.edges()) edges.push_back({g.vertex(e.u).name, g.vertex(e.v).name});
  return {{"vertices", vertices}, {"edges", edges}};
}

}  // namespace cjac
