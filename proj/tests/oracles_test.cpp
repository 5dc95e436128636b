#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "brute.hpp"
#include "pancyclic/generators.hpp"
#include "pancyclic/oracles.hpp"

namespace pancyclic {
namespace {

// 500 graphs on 1..9 vertices with edge densities from 1/6 to 5/6.
std::vector<Graph> small_corpus() {
  std::vector<Graph> out;
  RandomSource rng(2024);
  for (int i = 0; i < 500; ++i) {
    std::size_t n = 1 + rng.below(9);
    std::uint64_t num = 1 + rng.below(5);
    out.push_back(random_graph(n, num, 6, rng));
  }
  return out;
}

const std::vector<Graph>& corpus() {
  static const auto c = small_corpus();
  return c;
}

TEST(IndependenceNumber, Examples) {
  EXPECT_EQ(independence_number(cycle_graph(5)).value, 2u);
  EXPECT_EQ(independence_number(petersen_graph()).value, 4u);
  EXPECT_EQ(brute::alpha(petersen_graph()), 4);
  auto r = independence_number(generate_extremal(3));
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r.value, 3u);
  EXPECT_TRUE(brute::is_independent(generate_extremal(3), r.witness));
}

TEST(IndependenceNumber, MatchesEnumerationOnCorpus) {
  for (const auto& g : corpus()) {
    auto r = independence_number(g);
    ASSERT_TRUE(r.exact());
    EXPECT_EQ(static_cast<int>(r.value), brute::alpha(g));
    EXPECT_EQ(r.witness.size(), r.value);
    EXPECT_TRUE(brute::is_independent(g, r.witness));
  }
}

TEST(IndependenceNumber, BudgetAbortKeepsBounds) {
  auto g = generate_power_complement(60, 4);
  OracleBudget b;
  b.node_limit = 3;
  auto r = independence_number(g, b);
  EXPECT_FALSE(r.exact());
  EXPECT_EQ(r.status, SearchStatus::aborted);
  EXPECT_LE(r.value, 5u);
  EXPECT_GE(r.upper_bound, 5u);
  auto again = independence_number(g, b);
  EXPECT_EQ(again.nodes, r.nodes);
  EXPECT_EQ(again.value, r.value);
}

TEST(VertexConnectivity, Examples) {
  EXPECT_EQ(vertex_connectivity(complete_bipartite(3, 3)), 3u);
  EXPECT_EQ(vertex_connectivity(cycle_graph(5)), 2u);
  EXPECT_EQ(vertex_connectivity(complete_graph(6)), 5u);
  EXPECT_EQ(vertex_connectivity(path_graph(4)), 1u);
  EXPECT_EQ(vertex_connectivity(Graph(3)), 0u);
}

TEST(VertexConnectivity, ExtremalGraphIsTwoConnected) {
  auto g = generate_extremal(3);
  EXPECT_EQ(brute::kappa(g), 2);
  EXPECT_EQ(vertex_connectivity(g), 2u);
}

TEST(VertexConnectivity, MatchesDeletionBruteForceOnCorpus) {
  for (const auto& g : corpus()) EXPECT_EQ(static_cast<int>(vertex_connectivity(g)), brute::kappa(g));
}

TEST(FindCycle, Examples) {
  auto k5 = find_cycle_of_length(complete_graph(5), 4);
  ASSERT_EQ(k5.status, SearchStatus::found);
  EXPECT_EQ(k5.cycle->length(), 4u);
  EXPECT_TRUE(verify_cycle(complete_graph(5), *k5.cycle));

  auto ext = find_cycle_of_length(generate_extremal(3), 5);
  EXPECT_EQ(ext.status, SearchStatus::absent);
  EXPECT_GT(ext.nodes, 0u);

  auto p5 = find_cycle_of_length(petersen_graph(), 5);
  ASSERT_EQ(p5.status, SearchStatus::found);
  EXPECT_TRUE(brute::is_cycle(petersen_graph(), p5.cycle->verts));
  EXPECT_EQ(find_cycle_of_length(petersen_graph(), 7).status, SearchStatus::absent);
}

TEST(FindCycle, MatchesNaiveEnumeratorOnCorpus) {
  for (const auto& g : corpus()) {
    auto truth = brute::cycle_lengths(g);
    for (std::size_t len = 3; len <= g.order(); ++len) {
      auto r = find_cycle_of_length(g, len);
      ASSERT_NE(r.status, SearchStatus::aborted);
      EXPECT_EQ(r.status == SearchStatus::found, truth.count(len) == 1) << "length " << len;
      if (r.cycle) {
        EXPECT_EQ(r.cycle->length(), len);
        EXPECT_TRUE(brute::is_cycle(g, r.cycle->verts));
      }
    }
  }
}

TEST(FindCycle, MeetInMiddleMatchesDfs) {
  CycleSearchOptions mitm;
  mitm.force_meet_in_middle = true;
  for (std::size_t i = 0; i < corpus().size(); i += 5) {
    const auto& g = corpus()[i];
    auto truth = brute::cycle_lengths(g);
    for (std::size_t len = 3; len <= g.order(); ++len) {
      auto r = find_cycle_of_length(g, len, {}, mitm);
      EXPECT_EQ(r.status == SearchStatus::found, truth.count(len) == 1);
      if (r.cycle) EXPECT_TRUE(brute::is_cycle(g, r.cycle->verts));
    }
  }
  auto ext = find_cycle_of_length(generate_extremal(3), 5, {}, mitm);
  EXPECT_EQ(ext.status, SearchStatus::absent);
  EXPECT_TRUE(ext.used_meet_in_middle);
}

TEST(FindCycle, BudgetAbortIsDeterministic) {
  OracleBudget b;
  b.node_limit = 10;
  auto g = generate_extremal(4);
  auto r1 = find_cycle_of_length(g, 7, b);
  auto r2 = find_cycle_of_length(g, 7, b);
  EXPECT_EQ(r1.status, SearchStatus::aborted);
  EXPECT_EQ(r1.nodes, r2.nodes);
  EXPECT_FALSE(r1.cycle);
}

TEST(FindCycle, RejectsBadLength) {
  EXPECT_THROW(find_cycle_of_length(complete_graph(4), 2), InputError);
  EXPECT_THROW(find_cycle_of_length(complete_graph(4), 5), InputError);
}

TEST(HamiltonCycle, Examples) {
  auto c6 = find_hamilton_cycle(cycle_graph(6));
  ASSERT_EQ(c6.status, SearchStatus::found);
  EXPECT_TRUE(verify_cycle(cycle_graph(6), *c6.cycle));

  auto ext = find_hamilton_cycle(generate_extremal(3));
  ASSERT_EQ(ext.status, SearchStatus::found);
  EXPECT_EQ(ext.cycle->length(), 12u);
  EXPECT_TRUE(brute::is_cycle(generate_extremal(3), ext.cycle->verts));

  EXPECT_EQ(find_hamilton_cycle(star_graph(3)).status, SearchStatus::absent);
  EXPECT_EQ(find_hamilton_cycle(petersen_graph()).status, SearchStatus::absent);
}

TEST(HamiltonCycle, AgreesWithEnumeratorOnCorpus) {
  for (const auto& g : corpus()) {
    if (g.order() < 3) continue;
    auto r = find_hamilton_cycle(g);
    EXPECT_EQ(r.status == SearchStatus::found, brute::cycle_lengths(g).count(g.order()) == 1);
  }
}

TEST(CycleSpectrum, Examples) {
  auto k5 = cycle_spectrum(complete_graph(5), 3, 5);
  EXPECT_TRUE(k5.complete());
  EXPECT_TRUE(check_report(complete_graph(5), k5).empty());

  auto ext = cycle_spectrum(generate_extremal(3), 3, 12);
  EXPECT_EQ(ext.gaps(), std::vector<std::size_t>{5});
  EXPECT_EQ(ext.absent.size(), 1u);
  EXPECT_TRUE(ext.absent.count(5));
  EXPECT_TRUE(ext.aborted.empty());

  auto c5 = cycle_spectrum(cycle_graph(5), 3, 5);
  EXPECT_EQ(c5.gaps(), (std::vector<std::size_t>{3, 4}));
  EXPECT_TRUE(c5.certificates.count(5));
}

TEST(CycleSpectrum, RecordsAbortsInsteadOfThrowing) {
  OracleBudget b;
  b.node_limit = 2;
  auto r = cycle_spectrum(generate_extremal(4), 7, 9, b);
  EXPECT_FALSE(r.aborted.empty());
  for (const auto& [len, nodes] : r.aborted) EXPECT_FALSE(r.certificates.count(len));
}

}  // namespace
}  // namespace pancyclic
