#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pancyclic/certificate.hpp"
#include "pancyclic/graph_io.hpp"

namespace pancyclic {

inline constexpr const char* kVersion = "1.0.0";

struct Hypothesis {
  std::size_t n = 0;
  int k = 0;
  std::size_t min_degree = 0;
  std::string theorem;

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

struct Certificate {
  Cycle cycle;
  std::string provenance;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Cycle-length certificates over a target range [lo, hi]. Oracle spectra also
// record proven absences and budget aborts (with search-node counts).
struct SpectrumReport {
  Hypothesis hypothesis;
  std::string graph_hash;
  std::optional<std::uint64_t> seed;
  std::size_t lo = 3;
  std::size_t hi = 0;
  std::map<std::size_t, Certificate> certificates;
  std::map<std::size_t, std::uint64_t> absent;
  std::map<std::size_t, std::uint64_t> aborted;

  // First certificate for a length wins.
  bool add(Cycle c, std::string provenance) {
    std::size_t len = c.length();
    if (certificates.count(len)) return false;
    certificates.emplace(len, Certificate{std::move(c), std::move(provenance)});
    return true;
  }

  std::vector<std::size_t> gaps() const {
    std::vector<std::size_t> out;
    for (std::size_t l = lo; l <= hi; ++l)
      if (!certificates.count(l)) out.push_back(l);
    return out;
  }

  bool complete() const { return gaps().empty(); }

  friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

// Re-checks every certificate against `g`: the cycle must verify and its length
// must equal its key. Returns (length, failure) for each bad entry.
inline std::vector<std::pair<std::size_t, std::string>> check_report(const Graph& g,
                                                                     const SpectrumReport& r) {
  std::vector<std::pair<std::size_t, std::string>> bad;
  for (const auto& [len, cert] : r.certificates) {
    if (cert.cycle.length() != len) {
      bad.emplace_back(len, "certificate has length " + std::to_string(cert.cycle.length()));
      continue;
    }
    if (auto v = verify_cycle(g, cert.cycle); !v) bad.emplace_back(len, v.failure);
  }
  return bad;
}

enum class ReportFormat { text, machine };

namespace detail {

inline std::string join_ids(const std::vector<Vertex>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace detail

// Text layout:
//   # pancyclic spectrum report
//   version <v>
//   theorem <id>
//   n <n>
//   k <k>
//   min-degree <delta>
//   seed <s>|none
//   graph-hash <hex>
//   range <lo> <hi>
//   length <l>: v0 v1 ... provenance=<tag>     (one per certificate)
//   absent <l> nodes=<count>
//   aborted <l> nodes=<count>
//   gaps: <l> <l> ...
inline std::string write_report_text(const SpectrumReport& r) {
  std::ostringstream out;
  out << "# pancyclic spectrum report\n";
  out << "version " << kVersion << "\n";
  out << "theorem " << r.hypothesis.theorem << "\n";
  out << "n " << r.hypothesis.n << "\n";
  out << "k " << r.hypothesis.k << "\n";
  out << "min-degree " << r.hypothesis.min_degree << "\n";
  out << "seed " << (r.seed ? std::to_string(*r.seed) : std::string("none")) << "\n";
  out << "graph-hash " << r.graph_hash << "\n";
  out << "range " << r.lo << " " << r.hi << "\n";
  for (const auto& [len, cert] : r.certificates)
    out << "length " << len << ": " << detail::join_ids(cert.cycle.verts)
        << " provenance=" << cert.provenance << "\n";
  for (const auto& [len, nodes] : r.absent) out << "absent " << len << " nodes=" << nodes << "\n";
  for (const auto& [len, nodes] : r.aborted) out << "aborted " << len << " nodes=" << nodes << "\n";
  out << "gaps:";
  for (auto l : r.gaps()) out << " " << l;
  out << "\n";
  return out.str();
}

// Machine form: one JSON object with keys format, version, theorem, n, k,
// min_degree, seed (null when none), graph_hash, range [lo, hi],
// certificates [{length, cycle, provenance}], absent [{length, nodes}],
// aborted [{length, nodes}], gaps.
inline nlohmann::ordered_json report_to_json(const SpectrumReport& r) {
  nlohmann::ordered_json j;
  j["format"] = "pancyclic-report";
  j["version"] = kVersion;
  j["theorem"] = r.hypothesis.theorem;
  j["n"] = r.hypothesis.n;
  j["k"] = r.hypothesis.k;
  j["min_degree"] = r.hypothesis.min_degree;
  j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
  j["graph_hash"] = r.graph_hash;
  j["range"] = {r.lo, r.hi};
  auto certs = nlohmann::ordered_json::array();
  for (const auto& [len, cert] : r.certificates)
    certs.push_back({{"length", len}, {"cycle", cert.cycle.verts}, {"provenance", cert.provenance}});
  j["certificates"] = std::move(certs);
  auto absent = nlohmann::ordered_json::array();
  for (const auto& [len, nodes] : r.absent) absent.push_back({{"length", len}, {"nodes", nodes}});
  j["absent"] = std::move(absent);
  auto aborted = nlohmann::ordered_json::array();
  for (const auto& [len, nodes] : r.aborted) aborted.push_back({{"length", len}, {"nodes", nodes}});
  j["aborted"] = std::move(aborted);
  j["gaps"] = r.gaps();
  return j;
}

inline std::string write_report(const SpectrumReport& r, ReportFormat f) {
  if (f == ReportFormat::machine) return report_to_json(r).dump(1) + "\n";
  return write_report_text(r);
}

namespace detail {

inline SpectrumReport report_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("invalid report JSON: ") + e.what());
  }
  try {
    SpectrumReport r;
    r.hypothesis.theorem = j.at("theorem").get<std::string>();
    r.hypothesis.n = j.at("n").get<std::size_t>();
    r.hypothesis.k = j.at("k").get<int>();
    r.hypothesis.min_degree = j.at("min_degree").get<std::size_t>();
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    r.graph_hash = j.at("graph_hash").get<std::string>();
    r.lo = j.at("range").at(0).get<std::size_t>();
    r.hi = j.at("range").at(1).get<std::size_t>();
    for (const auto& c : j.at("certificates"))
      r.certificates[c.at("length").get<std::size_t>()] =
          Certificate{Cycle{c.at("cycle").get<std::vector<Vertex>>()}, c.at("provenance").get<std::string>()};
    for (const auto& a : j.at("absent")) r.absent[a.at("length").get<std::size_t>()] = a.at("nodes").get<std::uint64_t>();
    for (const auto& a : j.at("aborted"))
      r.aborted[a.at("length").get<std::size_t>()] = a.at("nodes").get<std::uint64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("report JSON missing or mistyped field: ") + e.what());
  }
}

inline SpectrumReport report_from_text(std::string_view text) {
  SpectrumReport r;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    if (!parse_int(s, v)) throw ParseError(line_no, "expected a number, got '" + std::string(s) + "'");
    return v;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto f = split_fields(line);
    if (f.empty()) continue;
    const std::string_view key = f[0];
    if (key == "version") continue;
    if (key == "theorem" && f.size() == 2) {
      r.hypothesis.theorem = std::string(f[1]);
    } else if (key == "n" && f.size() == 2) {
      r.hypothesis.n = number(f[1]);
    } else if (key == "k" && f.size() == 2) {
      r.hypothesis.k = static_cast<int>(number(f[1]));
    } else if (key == "min-degree" && f.size() == 2) {
      r.hypothesis.min_degree = number(f[1]);
    } else if (key == "seed" && f.size() == 2) {
      if (f[1] != "none") r.seed = number(f[1]);
    } else if (key == "graph-hash" && f.size() == 2) {
      r.graph_hash = std::string(f[1]);
    } else if (key == "range" && f.size() == 3) {
      r.lo = number(f[1]);
      r.hi = number(f[2]);
    } else if (key == "length" && f.size() >= 3) {
      std::string_view len = f[1];
      if (len.empty() || len.back() != ':') throw ParseError(line_no, "expected 'length <l>:'");
      len.remove_suffix(1);
      Certificate cert;
      std::size_t i = 2;
      for (; i < f.size() && f[i].substr(0, 11) != "provenance="; ++i) {
        Vertex v = 0;
        if (!parse_int(f[i], v)) throw ParseError(line_no, "bad vertex id '" + std::string(f[i]) + "'");
        cert.cycle.verts.push_back(v);
      }
      if (i + 1 != f.size()) throw ParseError(line_no, "certificate line must end with provenance=<tag>");
      cert.provenance = std::string(f[i].substr(11));
      r.certificates[number(len)] = std::move(cert);
    } else if ((key == "absent" || key == "aborted") && f.size() == 3 && f[2].substr(0, 6) == "nodes=") {
      auto& target = key == "absent" ? r.absent : r.aborted;
      target[number(f[1])] = number(f[2].substr(6));
    } else if (key == "gaps:") {
      continue;
    } else {
      throw ParseError(line_no, "unrecognized report line");
    }
  }
  return r;
}

}  // namespace detail

// Accepts either format (machine form starts with '{').
inline SpectrumReport read_report(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return detail::report_from_json(text);
  return detail::report_from_text(text);
}

}  // namespace pancyclic
