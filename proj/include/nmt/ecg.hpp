#pragma once

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nmt/colored_graph.hpp"

namespace nmt {

// .ecg: line 1 is "ecg <n> <k>"; every later line that is neither blank nor a
// '#' comment is "<u> <v> <c>" with 0 <= u < v < n and 1 <= c <= k. Tokens
// are decimal integers separated by whitespace.

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline long long to_int(std::string_view tok, int line, const char* field) {
  long long value = 0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || end != tok.data() + tok.size() || value < 0)
    throw ParseError(line, std::string("bad ") + field + " '" + std::string(tok) + "'");
  return value;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

}  // namespace detail

inline ColoredGraph parse_ecg(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing 'ecg <n> <k>' header");
  const auto head = detail::tokens(lines[0]);
  if (head.size() != 3 || head[0] != "ecg") throw ParseError(1, "expected 'ecg <n> <k>' header");
  const auto n = detail::to_int(head[1], 1, "vertex count");
  const auto k = detail::to_int(head[2], 1, "colour count");
  if (k < 1 || k > kMaxColors) throw ParseError(1, "colour count must lie in 1.." + std::to_string(kMaxColors));
  if (n > 1 << 16) throw ParseError(1, "vertex count too large");

  ColoredGraph g(static_cast<int>(n), static_cast<int>(k));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line = static_cast<int>(i) + 1;
    const auto tok = detail::tokens(lines[i]);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (tok.size() != 3) throw ParseError(line, "expected '<u> <v> <c>'");
    const auto u = detail::to_int(tok[0], line, "vertex");
    const auto v = detail::to_int(tok[1], line, "vertex");
    const auto c = detail::to_int(tok[2], line, "colour");
    if (u >= v) throw ParseError(line, "need u < v");
    if (v >= n) throw ParseError(line, "vertex out of range");
    if (c < 1 || c > k) throw ParseError(line, "colour out of range");
    if (g.color(static_cast<Vertex>(u), static_cast<Vertex>(v)) != kAbsent) throw ParseError(line, "duplicate pair");
    g.set(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Color>(c));
  }
  return g;
}

inline std::string emit_ecg(const ColoredGraph& g) {
  std::ostringstream out;
  out << "ecg " << g.n() << ' ' << g.k() << '\n';
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (Color c = g.color(u, v); c != kAbsent) out << u << ' ' << v << ' ' << c << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// graph6 (uncoloured). Imported edges take colour 1.
// ---------------------------------------------------------------------------

inline ColoredGraph parse_graph6(std::string_view text, int k = 2) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  auto bad = [](const std::string& why) { return ParseError(1, "graph6: " + why); };
  for (char ch : text)
    if (ch < 63 || ch > 126) throw bad("character out of range");
  if (text.empty()) throw bad("empty input");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw bad("truncated order");
    n = ((text[1] - 63L) << 12) | ((text[2] - 63L) << 6) | (text[3] - 63L);
    pos = 4;
  } else {
    throw bad("orders above 258047 are not supported");
  }

  const auto bits = static_cast<std::size_t>(choose2(n));
  if (text.size() - pos != (bits + 5) / 6) throw bad("length does not match order");
  ColoredGraph g(static_cast<int>(n), k);
  std::size_t bit = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++bit) {
      const int chunk = text[pos + bit / 6] - 63;
      if (chunk & (1 << (5 - bit % 6))) g.set(u, v, 1);
    }
  return g;
}

// Colours are dropped.
inline std::string emit_graph6(const ColoredGraph& g) {
  std::string out;
  const long n = g.n();
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int chunk = 0, used = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = used = 0;
      }
    }
  if (used) out.push_back(static_cast<char>((chunk << (6 - used)) + 63));
  return out;
}

}  // namespace nmt
