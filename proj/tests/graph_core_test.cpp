#include <gtest/gtest.h>

#include <numeric>
#include <string>
#include <vector>

#include "brute.hpp"
#include "pancyclic/certificate.hpp"
#include "pancyclic/generators.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/graph_io.hpp"
#include "pancyclic/random.hpp"
#include "pancyclic/report.hpp"

namespace pancyclic {
namespace {

std::vector<Vertex> ids(std::initializer_list<Vertex> v) { return v; }

TEST(InducedSubgraph, CompleteRestrictsToComplete) {
  auto sub = induced_subgraph(complete_graph(4), ids({0, 1, 2}));
  EXPECT_EQ(sub.graph, complete_graph(3));
}

TEST(InducedSubgraph, IdentityOnAllVertices) {
  auto c5 = cycle_graph(5);
  auto sub = induced_subgraph(c5, all_vertices(c5));
  EXPECT_EQ(sub.graph, c5);
}

TEST(InducedSubgraph, PetersenOuterRingIsFiveCycle) {
  auto sub = induced_subgraph(petersen_graph(), ids({0, 1, 2, 3, 4}));
  EXPECT_EQ(sub.graph.size(), 5u);
  EXPECT_EQ(sub.graph.min_degree(), 2u);
  EXPECT_EQ(sub.graph.max_degree(), 2u);
  EXPECT_EQ(brute::cycle_lengths(sub.graph), (std::set<std::size_t>{5}));
}

TEST(InducedSubgraph, MapsIdsBothWays) {
  auto g = cycle_graph(8);
  auto sub = induced_subgraph(g, ids({6, 2, 3}));
  EXPECT_EQ(sub.to_original, ids({2, 3, 6}));
  EXPECT_EQ(sub.local(6), 2);
  EXPECT_EQ(sub.local(5), -1);
  EXPECT_TRUE(sub.graph.has_edge(0, 1));
  EXPECT_EQ(sub.graph.size(), 1u);
}

TEST(InducedSubgraph, RejectsOutOfRange) {
  EXPECT_THROW(induced_subgraph(cycle_graph(4), ids({0, 4})), InputError);
}

TEST(InducedSubgraph, DegreesNeverGrow) {
  RandomSource rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(12, 1, 2, rng);
    std::vector<Vertex> s;
    for (Vertex v = 0; v < 12; ++v)
      if (rng.coin()) s.push_back(v);
    auto sub = induced_subgraph(g, s);
    for (std::size_t i = 0; i < s.size(); ++i)
      EXPECT_LE(sub.graph.degree(static_cast<Vertex>(i)), g.degree(sub.original(static_cast<Vertex>(i))));
  }
}

TEST(Complement, FiveCycleIsSelfComplementary) {
  auto c = complement(cycle_graph(5));
  EXPECT_EQ(c.size(), 5u);
  EXPECT_EQ(c.min_degree(), 2u);
  EXPECT_EQ(c.max_degree(), 2u);
}

TEST(Complement, CompleteGraphBecomesEmpty) { EXPECT_EQ(complement(complete_graph(6)).size(), 0u); }

TEST(Complement, SevenCycleHasMinDegreeFour) { EXPECT_EQ(complement(cycle_graph(7)).min_degree(), 4u); }

TEST(Complement, IsAnInvolution) {
  RandomSource rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_graph(15, 1, 3, rng);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(Extremal, ShapeForSmallK) {
  for (int k : {3, 4, 5}) {
    auto g = generate_extremal(k);
    EXPECT_EQ(g.order(), static_cast<std::size_t>(k * (2 * k - 2)));
    EXPECT_EQ(g.min_degree(), static_cast<std::size_t>(2 * k - 3));
  }
}

TEST(Extremal, MatchingUsesLowestFreeVertices) {
  auto g = generate_extremal(3);
  EXPECT_TRUE(g.has_edge(0, 4));
  EXPECT_TRUE(g.has_edge(5, 8));
  EXPECT_TRUE(g.has_edge(1, 9));
  EXPECT_EQ(g.size(), 3u * 6u + 3u);
}

TEST(Extremal, IndependenceNumberThreeByEnumeration) { EXPECT_EQ(brute::alpha(generate_extremal(3)), 3); }

TEST(Extremal, NoFiveCycleByEnumeration) {
  auto lengths = brute::cycle_lengths(generate_extremal(3));
  EXPECT_FALSE(lengths.count(5));
  for (std::size_t l = 3; l <= 12; ++l)
    if (l != 5) EXPECT_TRUE(lengths.count(l)) << l;
}

TEST(Extremal, RejectsSmallK) { EXPECT_THROW(generate_extremal(2), InputError); }

TEST(PowerComplement, SevenOneIsComplementOfSevenCycle) {
  auto g = generate_power_complement(7, 1);
  EXPECT_EQ(g, complement(cycle_graph(7)));
  EXPECT_EQ(g.min_degree(), 4u);
}

TEST(PowerComplement, IndependenceNumberMatchesEnumeration) {
  for (std::size_t p = 0; p <= 4; ++p)
    for (std::size_t n = 2 * p + 2; n <= 20; ++n)
      EXPECT_EQ(brute::alpha(generate_power_complement(n, p)), static_cast<int>(p + 1)) << n << "," << p;
}

TEST(PowerComplement, LargeDegree) { EXPECT_EQ(generate_power_complement(1001, 1).min_degree(), 998u); }

TEST(PowerComplement, RejectsTooSmall) { EXPECT_THROW(generate_power_complement(5, 2), InputError); }

TEST(KnownHamiltonCycle, StrideTwoOnSeven) {
  auto c = known_hamilton_cycle_power_complement(7, 1);
  EXPECT_EQ(c.verts, ids({0, 2, 4, 6, 1, 3, 5}));
  EXPECT_TRUE(verify_cycle(generate_power_complement(7, 1), c));
}

TEST(KnownHamiltonCycle, AcceptanceSizesVerify) {
  for (auto [n, p] : {std::pair<std::size_t, std::size_t>{2501, 1}, {2000, 2}}) {
    auto c = known_hamilton_cycle_power_complement(n, p);
    EXPECT_EQ(c.length(), n);
    EXPECT_TRUE(verify_cycle(generate_power_complement(n, p), c));
  }
  EXPECT_EQ(known_hamilton_cycle_power_complement(2000, 2).verts[1], 3);
}

TEST(KnownHamiltonCycle, RejectsSharedFactor) {
  EXPECT_THROW(known_hamilton_cycle_power_complement(10, 1), InputError);
}

TEST(VerifyCycle, Examples) {
  EXPECT_TRUE(verify_cycle(complete_graph(4), Cycle{{0, 1, 2}}));
  auto bad = verify_cycle(cycle_graph(5), Cycle{{0, 1, 2}});
  EXPECT_FALSE(bad);
  EXPECT_FALSE(bad.failure.empty());
  EXPECT_FALSE(verify_cycle(complete_graph(4), Cycle{{0, 1, 1}}));
  EXPECT_FALSE(verify_cycle(complete_graph(4), Cycle{{0, 1, 7}}));
  EXPECT_FALSE(verify_cycle(complete_graph(4), Cycle{{0, 1}}));
}

TEST(VerifyPath, Examples) {
  EXPECT_TRUE(verify_path(path_graph(3), Path{{0, 1, 2}}));
  EXPECT_TRUE(verify_path(cycle_graph(5), Path{{0, 1, 2, 3}}));
  EXPECT_FALSE(verify_path(Graph(3), Path{{0, 1}}));
}

TEST(VerifyCycle, AgreesWithNaiveCheckOnRandomSequences) {
  RandomSource rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    auto g = random_graph(7, 2, 3, rng);
    std::vector<Vertex> seq(3 + rng.below(5));
    for (auto& v : seq) v = static_cast<Vertex>(rng.below(8)) - (rng.one_in(20) ? 1 : 0);
    bool in_range = std::all_of(seq.begin(), seq.end(), [](Vertex v) { return v >= 0 && v < 7; });
    bool expect = in_range && brute::is_cycle(g, seq);
    EXPECT_EQ(static_cast<bool>(verify_cycle(g, Cycle{seq})), expect);
  }
}

TEST(GraphText, ReadsPath) {
  auto g = read_graph("3 2\n0 1\n1 2\n");
  EXPECT_EQ(g, path_graph(3));
}

TEST(GraphText, WritesCanonicalForm) {
  auto g = read_graph("3 2\n1 2\n0 1\n");
  EXPECT_EQ(write_graph(g), "3 2\n0 1\n1 2\n");
}

TEST(GraphText, RoundTripsRandomGraphs) {
  RandomSource rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_graph(20, 1, 4, rng);
    EXPECT_EQ(read_graph(write_graph(g)), g);
  }
}

int parse_error_line(const std::string& text) {
  try {
    read_graph(text);
  } catch (const ParseError& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

TEST(GraphText, ParseErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("2 1\n0 0\n"), 2);
  EXPECT_EQ(parse_error_line("3 2\n0 1\n0 1\n"), 3);
  EXPECT_EQ(parse_error_line("3 1\n0 3\n"), 2);
  EXPECT_EQ(parse_error_line("x y\n"), 1);
  EXPECT_EQ(parse_error_line("3 2\n0 1\n"), 3);
}

TEST(Report, TextAndMachineFormsRoundTrip) {
  auto g = complete_graph(5);
  SpectrumReport r;
  r.hypothesis = {5, 2, 4, "oracle"};
  r.graph_hash = graph_hash(g);
  r.seed = 42;
  r.lo = 3;
  r.hi = 5;
  r.add(Cycle{{0, 1, 2}}, "a");
  r.add(Cycle{{0, 1, 2, 3, 4}}, "b");
  r.absent[4] = 12;
  for (auto f : {ReportFormat::text, ReportFormat::machine}) {
    auto back = read_report(write_report(r, f));
    EXPECT_EQ(back, r);
  }
  EXPECT_EQ(r.gaps(), std::vector<std::size_t>{4});
}

TEST(Report, CheckFindsCorruptedCertificate) {
  auto g = cycle_graph(5);
  SpectrumReport r;
  r.add(Cycle{{0, 1, 2, 3, 4}}, "x");
  EXPECT_TRUE(check_report(g, r).empty());
  r.certificates[5].cycle.verts[2] = 3;
  EXPECT_EQ(check_report(g, r).size(), 1u);
}

TEST(Report, FirstCertificateWins) {
  SpectrumReport r;
  EXPECT_TRUE(r.add(Cycle{{0, 1, 2}}, "first"));
  EXPECT_FALSE(r.add(Cycle{{1, 2, 3}}, "second"));
  EXPECT_EQ(r.certificates.at(3).provenance, "first");
}

TEST(RandomSource, SameSeedSameStream) {
  RandomSource a(123), b(123), c(124);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    auto x = a.next();
    EXPECT_EQ(x, b.next());
    differs |= x != c.next();
  }
  EXPECT_TRUE(differs);
}

TEST(RandomSource, TenThousandthOutputMatchesTheStandard) {
  // The standard fixes the 10000th output of a default-seeded mt19937_64.
  RandomSource r(5489);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = r.next();
  EXPECT_EQ(x, 9981545732273789042ull);
}

TEST(RandomSource, BelowStaysInRange) {
  RandomSource r(8);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[r.below(7)];
  for (int h : hits) EXPECT_GT(h, 800);
}

}  // namespace
}  // namespace pancyclic
