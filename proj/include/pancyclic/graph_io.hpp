#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "pancyclic/certificate.hpp"
#include "pancyclic/graph.hpp"

namespace pancyclic {

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Int>
bool parse_int(std::string_view s, Int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace detail

// Text format: a header line "n m", then m lines "u v" with 0 <= u < v < n.
// Endpoints given as "v u" are accepted and normalized. Blank lines after the
// last edge are ignored.
inline Graph read_graph(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size()) lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.empty()) throw ParseError(1, "missing header \"n m\"");
  auto header = detail::split_fields(lines[0]);
  std::int64_t n = 0, m = 0;
  if (header.size() != 2 || !detail::parse_int(header[0], n) || !detail::parse_int(header[1], m) ||
      n < 0 || m < 0)
    throw ParseError(1, "malformed header, expected \"n m\"");

  struct Entry {
    Vertex u, v;
    std::size_t line;
  };
  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(m));
  std::size_t read = 0;
  std::size_t line_no = 1;
  for (; line_no < lines.size() && read < static_cast<std::size_t>(m); ++line_no) {
    auto f = detail::split_fields(lines[line_no]);
    std::int64_t u = 0, v = 0;
    if (f.size() != 2 || !detail::parse_int(f[0], u) || !detail::parse_int(f[1], v))
      throw ParseError(line_no + 1, "malformed edge line, expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(line_no + 1, "vertex id out of range [0, " + std::to_string(n) + ")");
    if (u == v) throw ParseError(line_no + 1, "loop at vertex " + std::to_string(u));
    entries.push_back({static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v)),
                       line_no + 1});
    ++read;
  }
  if (read < static_cast<std::size_t>(m))
    throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(read));
  for (; line_no < lines.size(); ++line_no)
    if (!detail::split_fields(lines[line_no]).empty())
      throw ParseError(line_no + 1, "unexpected content after the last edge");

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.u, a.v, a.line) < std::tie(b.u, b.v, b.line);
  });
  std::size_t dup_line = 0;
  const Entry* dup = nullptr;
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].u == entries[i - 1].u && entries[i].v == entries[i - 1].v &&
        (dup == nullptr || entries[i].line < dup_line)) {
      dup = &entries[i];
      dup_line = entries[i].line;
    }
  if (dup != nullptr)
    throw ParseError(dup_line, "duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));

  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const auto& e : entries) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return Graph::from_adjacency(std::move(adj));
}

// Canonical text form: edges sorted lexicographically, newline-terminated.
inline std::string write_graph(const Graph& g) {
  std::string out;
  out.reserve(16 + g.size() * 12);
  out += std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  char buf[32];
  for (const auto& [u, v] : g.edges()) {
    int len = std::snprintf(buf, sizeof buf, "%d %d\n", u, v);
    out.append(buf, static_cast<std::size_t>(len));
  }
  return out;
}

// FNV-1a over the canonical text form, as 16 lowercase hex digits.
inline std::string graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : write_graph(g)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Cycle files hold whitespace-separated vertex ids in cycle order.
inline Cycle read_cycle(std::string_view text) {
  Cycle c;
  std::size_t line_no = 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    for (auto f : detail::split_fields(line)) {
      Vertex v = 0;
      if (!detail::parse_int(f, v) || v < 0) throw ParseError(line_no, "bad vertex id in cycle");
      c.verts.push_back(v);
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
    ++line_no;
  }
  return c;
}

inline std::string write_cycle(const Cycle& c) {
  std::string out;
  for (std::size_t i = 0; i < c.verts.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(c.verts[i]);
  }
  out += '\n';
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

}  // namespace pancyclic
