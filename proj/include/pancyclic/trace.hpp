#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pancyclic/graph.hpp"

namespace pancyclic {

// Ordered log of what a pipeline chose: partitions, special vertices, vertex
// sets, jumps and per-stage outcomes. Together with the input graph, the
// header (theorem, k, seed) is enough to rerun the pipeline exactly.
struct PipelineTrace {
  struct Stage {
    std::string name;
    nlohmann::ordered_json data;
  };

  std::string theorem;
  int k = 0;
  std::optional<std::uint64_t> seed;
  std::vector<Stage> stages;

  nlohmann::ordered_json& add(std::string name) {
    stages.push_back({std::move(name), nlohmann::ordered_json::object()});
    return stages.back().data;
  }

  const Stage* find(std::string_view name) const {
    for (const auto& s : stages)
      if (s.name == name) return &s;
    return nullptr;
  }

  // Every vertex id stored anywhere in the trace, for range checks.
  std::vector<Vertex> mentioned_vertices() const {
    std::vector<Vertex> out;
    auto walk = [&](auto&& self, const nlohmann::ordered_json& j, bool ids) -> void {
      if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
          const std::string& key = it.key();
          bool vertex_key = key.starts_with("set:") || key.starts_with("vertex:");
          self(self, it.value(), vertex_key);
        }
      } else if (j.is_array()) {
        for (const auto& e : j) self(self, e, ids);
      } else if (ids && j.is_number_integer()) {
        out.push_back(j.get<Vertex>());
      }
    };
    for (const auto& s : stages) walk(walk, s.data, false);
    return out;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["theorem"] = theorem;
    j["k"] = k;
    j["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
    j["stages"] = nlohmann::ordered_json::array();
    for (const auto& s : stages) j["stages"].push_back({{"stage", s.name}, {"data", s.data}});
    return j;
  }

  std::string dump() const { return to_json().dump(1) + "\n"; }

  static PipelineTrace from_json(std::string_view text) {
    auto j = nlohmann::ordered_json::parse(text);
    PipelineTrace t;
    t.theorem = j.at("theorem").get<std::string>();
    t.k = j.at("k").get<int>();
    if (!j.at("seed").is_null()) t.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& s : j.at("stages")) t.stages.push_back({s.at("stage").get<std::string>(), s.at("data")});
    return t;
  }

  friend bool operator==(const PipelineTrace& a, const PipelineTrace& b) { return a.dump() == b.dump(); }
};

}  // namespace pancyclic
