#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "pancyclic/generators.hpp"
#include "pancyclic/theorems.hpp"

namespace pancyclic {
namespace {

std::vector<Vertex> range(Vertex lo, Vertex hi) {
  std::vector<Vertex> v(static_cast<std::size_t>(hi - lo));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

void add_clique(std::vector<Edge>& e, Vertex lo, Vertex hi) {
  for (Vertex u = lo; u < hi; ++u)
    for (Vertex v = u + 1; v < hi; ++v) e.push_back({u, v});
}

void expect_all_verify(const Graph& g, const std::map<std::size_t, Cycle>& cycles) {
  for (const auto& [len, c] : cycles) {
    EXPECT_EQ(c.length(), len);
    EXPECT_TRUE(verify_cycle(g, c)) << "length " << len;
  }
}

void expect_full(const Graph& g, const SpectrumReport& r) {
  EXPECT_TRUE(r.complete()) << "gaps: " << r.gaps().size();
  EXPECT_TRUE(check_report(g, r).empty());
}

void expect_ids_in_range(const PipelineTrace& t, std::size_t n) {
  for (Vertex v : t.mentioned_vertices()) {
    EXPECT_GE(v, 0);
    EXPECT_LT(static_cast<std::size_t>(v), n);
  }
}

// --- short cycles ------------------------------------------------------------

TEST(ShortCycleSpectrum, ComplementOfLargeCycle) {
  auto g = generate_power_complement(1001, 1);
  RandomSource rng(7);
  auto r = short_cycle_spectrum(g, 2, rng);
  EXPECT_EQ(r.report.lo, 3u);
  EXPECT_EQ(r.report.hi, 12u);
  expect_full(g, r.report);
  EXPECT_EQ(r.trace.theorem, "short-cycles");
  EXPECT_NE(r.trace.find("first-layering"), nullptr);
  expect_ids_in_range(r.trace, g.order());
}

TEST(ShortCycleSpectrum, SquareComplementWithKThree) {
  auto g = generate_power_complement(1000, 2);
  RandomSource rng(7);
  auto r = short_cycle_spectrum(g, 3, rng);
  EXPECT_EQ(r.report.hi, 12u);
  expect_full(g, r.report);
}

TEST(ShortCycleSpectrum, ForcedSecondLevelStillCovers) {
  auto g = generate_power_complement(1001, 1);
  RandomSource rng(7);
  ShortCycleOptions opts;
  opts.force_second_level = true;
  auto r = short_cycle_spectrum(g, 2, rng, opts);
  expect_full(g, r.report);
  ASSERT_NE(r.trace.find("second-layering"), nullptr);
  expect_ids_in_range(r.trace, g.order());
}

TEST(ShortCycleSpectrum, LowDegreeIsRejected) {
  RandomSource rng(1);
  EXPECT_THROW(short_cycle_spectrum(generate_power_complement(400, 1), 2, rng), PreconditionError);
  ShortCycleOptions relaxed;
  relaxed.relaxed = true;
  EXPECT_THROW(short_cycle_spectrum(complete_graph(600), 2, rng), PreconditionError);
  EXPECT_NO_THROW(short_cycle_spectrum(complete_graph(600), 2, rng, relaxed));
}

// --- large n -------------------------------------------------------------------

TEST(PancyclicLargeN, ComplementOfLargeCycleIsPancyclic) {
  auto g = generate_power_complement(2501, 1);
  auto c = known_hamilton_cycle_power_complement(2501, 1);
  RandomSource rng(3);
  auto r = pancyclic_large_n(g, c, 2, rng);
  EXPECT_EQ(r.report.hi, 2501u);
  expect_full(g, r.report);
  for (const char* stage : {"shrink", "bridge", "delete-one-vertex", "short-core", "result"})
    EXPECT_NE(r.trace.find(stage), nullptr) << stage;
  expect_ids_in_range(r.trace, g.order());
}

TEST(PancyclicLargeN, SmallGraphIsRejected) {
  auto g = complete_graph(100);
  Cycle c{range(0, 100)};
  RandomSource rng(1);
  EXPECT_THROW(pancyclic_large_n(g, c, 2, rng), PreconditionError);
  EXPECT_THROW(pancyclic_large_n(g, c, 1, rng), PreconditionError);
}

// --- minimum degree ------------------------------------------------------------

TEST(PancyclicMinDegree, SquareComplementTakesTheGeneralBranch) {
  auto g = generate_power_complement(2000, 2);
  auto c = known_hamilton_cycle_power_complement(2000, 2);
  RandomSource rng(11);
  auto r = pancyclic_min_degree(g, c, 3, rng);
  expect_full(g, r.report);
  const auto* d = r.trace.find("dispatch");
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->data["branch"], "k>=3");
  EXPECT_NE(r.trace.find("long-cycles"), nullptr);
  EXPECT_NE(r.trace.find("minimality"), nullptr);
  EXPECT_TRUE(r.trace.find("case-a") || r.trace.find("case-b"));
  expect_ids_in_range(r.trace, g.order());
}

TEST(PancyclicMinDegree, LargeOrderDelegates) {
  auto g = generate_power_complement(2501, 1);
  auto c = known_hamilton_cycle_power_complement(2501, 1);
  RandomSource rng(5);
  auto r = pancyclic_min_degree(g, c, 2, rng);
  expect_full(g, r.report);
  EXPECT_EQ(r.report.hypothesis.theorem, "pan-mindeg");
  ASSERT_FALSE(r.trace.stages.empty());
  EXPECT_EQ(r.trace.stages.front().name, "dispatch");
  EXPECT_EQ(r.trace.stages.front().data["branch"], "large-n");
}

TEST(PancyclicMinDegree, LowDegreeIsRejected) {
  auto g = generate_power_complement(1001, 1);
  auto c = known_hamilton_cycle_power_complement(1001, 1);
  RandomSource rng(1);
  EXPECT_THROW(pancyclic_min_degree(g, c, 2, rng), PreconditionError);
}

TEST(PancyclicMinDegree, BrokenHamiltonCycleIsRejected) {
  auto g = generate_power_complement(2000, 2);
  auto c = known_hamilton_cycle_power_complement(2000, 2);
  c.verts[1] = c.verts[0];
  RandomSource rng(1);
  EXPECT_THROW(pancyclic_min_degree(g, c, 3, rng), PreconditionError);
}

// --- determinism and replay -----------------------------------------------------

TEST(Determinism, SameSeedSameReportAndTrace) {
  auto g = generate_power_complement(1001, 1);
  RandomSource a(21), b(21);
  auto r1 = short_cycle_spectrum(g, 2, a);
  auto r2 = short_cycle_spectrum(g, 2, b);
  EXPECT_EQ(write_report(r1.report, ReportFormat::text), write_report(r2.report, ReportFormat::text));
  EXPECT_EQ(r1.trace.dump(), r2.trace.dump());
}

TEST(Determinism, ReplayReproducesTheRun) {
  auto g = generate_power_complement(2000, 2);
  auto c = known_hamilton_cycle_power_complement(2000, 2);
  RandomSource rng(12);
  auto first = pancyclic_min_degree(g, c, 3, rng);
  auto again = replay(g, c, PipelineTrace::from_json(first.trace.dump()));
  EXPECT_EQ(first.report, again.report);
  EXPECT_EQ(first.trace.dump(), again.trace.dump());
}

TEST(Determinism, ReplayOfShortCyclesKeepsOptions) {
  auto g = generate_power_complement(1001, 1);
  RandomSource rng(4);
  ShortCycleOptions opts;
  opts.force_second_level = true;
  opts.max_length = 9;
  auto first = short_cycle_spectrum(g, 2, rng, opts);
  auto again = replay(g, std::nullopt, first.trace);
  EXPECT_EQ(again.report.hi, 9u);
  EXPECT_EQ(first.trace.dump(), again.trace.dump());
}

TEST(Determinism, ReplayNeedsAHamiltonCycle) {
  PipelineTrace t;
  t.theorem = "pan-n";
  t.k = 2;
  t.seed = 1;
  EXPECT_THROW(replay(complete_graph(5), std::nullopt, t), InputError);
  t.seed.reset();
  EXPECT_THROW(replay(complete_graph(5), std::nullopt, t), InputError);
}

// --- stuck absorption ------------------------------------------------------------
//
// Shared layout for k = 2: G'' is K40 on 0..39 with c_second = 0, 1, ..., 39,
// S is K20 on 40..59 and y0 = 60 closes c_prime through 0.

struct CaseB {
  Graph g;
  Cycle c_prime;
  Cycle c_second;
  std::vector<Vertex> s_set;
  std::vector<Vertex> d_set;
};

Cycle second_cycle() { return Cycle{range(0, 40)}; }

// Each S vertex 40 + i sees G'' vertices i and i + 20; 39-40 closes c_prime.
CaseB direct_fixture() {
  std::vector<Edge> e;
  add_clique(e, 0, 40);
  add_clique(e, 40, 60);
  for (Vertex i = 0; i < 20; ++i) {
    e.push_back({i, 40 + i});
    e.push_back({i + 20, 40 + i});
  }
  e.push_back({39, 40});
  e.push_back({59, 60});
  e.push_back({0, 60});
  return {Graph::from_edges(61, e), Cycle{range(0, 61)}, second_cycle(), range(40, 60), {}};
}

// Only x = 40 sees G'', through 20 and 39, so no terminal y has a second
// anchor and c_prime runs 0..39, 40..59, 60.
std::vector<Edge> one_anchor_edges() {
  std::vector<Edge> e;
  add_clique(e, 0, 40);
  add_clique(e, 40, 60);
  e.push_back({20, 40});
  e.push_back({39, 40});
  e.push_back({59, 60});
  e.push_back({0, 60});
  return e;
}

Cycle one_anchor_prime() { return Cycle{range(0, 61)}; }

CaseB walk_fixture() {
  auto e = one_anchor_edges();
  add_clique(e, 61, 91);
  for (Vertex s = 40; s < 60; ++s) e.push_back({s, 61});
  e.push_back({5, 62});
  e.push_back({25, 62});
  return {Graph::from_edges(91, e), one_anchor_prime(), second_cycle(), range(40, 60), range(61, 91)};
}

CaseB core_fixture() {
  auto e = one_anchor_edges();
  add_clique(e, 61, 106);
  for (Vertex j = 0; j < 45; ++j) {
    e.push_back({(2 * j) % 61, 61 + j});
    e.push_back({(2 * j + 1) % 61, 61 + j});
  }
  for (Vertex s = 40; s < 60; ++s) e.push_back({s, 61});
  return {Graph::from_edges(106, e), one_anchor_prime(), second_cycle(), range(40, 60), range(61, 106)};
}

TEST(StuckAbsorption, FixturesAreWellFormed) {
  for (const auto& f : {direct_fixture(), walk_fixture(), core_fixture()}) {
    EXPECT_TRUE(verify_cycle(f.g, f.c_prime));
    EXPECT_TRUE(verify_cycle(f.g, f.c_second));
  }
}

TEST(StuckAbsorption, TerminalWithTwoAnchorsClosesDirectly) {
  auto f = direct_fixture();
  PipelineTrace t;
  auto r = intermediate_after_absorption(f.g, f.c_prime, f.c_second, f.s_set, f.d_set, 2, t);
  EXPECT_EQ(r.subcase, "direct");
  ASSERT_FALSE(r.cycles.empty());
  EXPECT_EQ(r.cycles.rbegin()->first, 20u);
  expect_all_verify(f.g, r.cycles);
  const auto* s = t.find("case-b");
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->data["vertex:x"], 40);
  EXPECT_EQ(s->data["vertex:a"], 0);
  expect_ids_in_range(t, f.g.order());
}

TEST(StuckAbsorption, SparseOutsideWalksToASecondAnchor) {
  auto f = walk_fixture();
  PipelineTrace t;
  auto r = intermediate_after_absorption(f.g, f.c_prime, f.c_second, f.s_set, f.d_set, 2, t);
  EXPECT_EQ(r.subcase, "walk");
  ASSERT_FALSE(r.cycles.empty());
  expect_all_verify(f.g, r.cycles);
  const auto& d = t.find("case-b")->data;
  EXPECT_EQ(d["vertex:y'"], 61);
  EXPECT_EQ(d["vertex:z"], 62);
  EXPECT_EQ(d["z-depth"], 1);
  EXPECT_EQ(d["vertex:b"], 5);
}

TEST(StuckAbsorption, DenseOutsideBridgesThroughItsCore) {
  auto f = core_fixture();
  PipelineTrace t;
  auto r = intermediate_after_absorption(f.g, f.c_prime, f.c_second, f.s_set, f.d_set, 2, t);
  EXPECT_EQ(r.subcase, "core");
  ASSERT_FALSE(r.cycles.empty());
  expect_all_verify(f.g, r.cycles);
  EXPECT_EQ(t.find("case-b")->data["set:Z'"].size(), 45u);
}

TEST(StuckAbsorption, IsolatedStuckSetIsAViolation) {
  std::vector<Edge> e;
  add_clique(e, 0, 40);
  add_clique(e, 40, 60);
  auto g = Graph::from_edges(60, e);
  PipelineTrace t;
  EXPECT_THROW(intermediate_after_absorption(g, second_cycle(), second_cycle(), range(40, 60), {}, 2, t),
               HypothesisViolation);
}

}  // namespace
}  // namespace pancyclic
