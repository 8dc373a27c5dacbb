#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "fixtures.hpp"
#include "isokit/errors.hpp"
#include "isokit/io.hpp"
#include "isokit/permute.hpp"
#include "isokit/reduce.hpp"
#include "isokit/solve/graph.hpp"
#include "oracle.hpp"

using namespace isokit;
using namespace isokit::reduce;

namespace {

Permutation perm(std::vector<std::uint32_t> p) { return Permutation(std::move(p)); }

// Triangle count by brute force over vertex triples.
std::size_t triangles(const Graph& g) {
  std::size_t count = 0;
  const auto a = g.adjacency_matrix();
  for (std::size_t x = 0; x < g.vertex_count(); ++x)
    for (std::size_t y = x + 1; y < g.vertex_count(); ++y)
      for (std::size_t z = y + 1; z < g.vertex_count(); ++z) count += a[x][y] && a[y][z] && a[x][z];
  return count;
}

bool connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto adj = g.adjacency();
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (auto w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.vertex_count();
}

}  // namespace

TEST(GiToIi, PathOnThreeVertices) {
  const Graph g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n");
  const auto red = gi_to_ii({g, g});
  EXPECT_EQ(red.instance.s.domain_size(), 2U);
  EXPECT_EQ(oracle::rows(red.instance.s), (oracle::Rows{"10", "11", "01"}));
  EXPECT_EQ(red.left.position({1, 2}), 1U);
  EXPECT_EQ(vertex_item(g, red.left, 1).to_string(), "11");
}

TEST(GiToIi, EdgelessGraphCollapsesToEmptyItem) {
  const Graph g(3, {});
  const auto red = gi_to_ii({g, g});
  EXPECT_EQ(red.instance.s.size(), 1U);
  EXPECT_EQ(red.instance.s.domain_size(), 0U);
}

TEST(GiToIi, Triangle) {
  const Graph k3 = parse_graph("p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  EXPECT_EQ(oracle::rows(gi_to_ii({k3, k3}).instance.s), (oracle::Rows{"110", "101", "011"}));
}

TEST(GiToIi, SingleEdgeWitnesses) {
  const Graph e = parse_graph("p edge 2 1\ne 1 2\n");
  const GiInstance inst{e, e};
  const auto red = gi_to_ii(inst);
  EXPECT_EQ(translate_witness_gi_to_ii(VertexBijection{perm({0, 1})}, inst, red).map, perm({0}));
  // Both endpoints share the item {e1}, so back-translation is refused.
  EXPECT_THROW(translate_witness_ii_to_gi(DomainBijection{perm({0})}, inst, red), UnsupportedDegenerate);
}

TEST(GiToIi, RigidPairHasOneWitnessOnEachSide) {
  const GiInstance inst{parse_graph(fixtures::kRigidG), parse_graph(fixtures::kRigidH)};
  const auto red = gi_to_ii(inst);
  const auto graph_witnesses = oracle::gi_witnesses(inst.g, inst.h);
  const auto item_witnesses = oracle::ii_witnesses(red.instance.s, red.instance.t);
  ASSERT_EQ(graph_witnesses.size(), 1U);
  ASSERT_EQ(item_witnesses.size(), 1U);
  EXPECT_EQ(graph_witnesses[0], (std::vector<std::uint32_t>{1, 3, 5, 0, 4, 2}));

  const VertexBijection i{perm(graph_witnesses[0])};
  const auto j = translate_witness_gi_to_ii(i, inst, red);
  EXPECT_EQ(j.map, perm(item_witnesses[0]));
  EXPECT_EQ(translate_witness_ii_to_gi(j, inst, red), i);
}

TEST(GiToIi, TwoWitnessesCorrespondPairwise) {
  const GiInstance inst{parse_graph(fixtures::kTwinG), parse_graph(fixtures::kTwinH)};
  const auto red = gi_to_ii(inst);
  const auto graph_witnesses = oracle::gi_witnesses(inst.g, inst.h);
  const auto item_witnesses = oracle::ii_witnesses(red.instance.s, red.instance.t);
  ASSERT_EQ(graph_witnesses.size(), 2U);
  ASSERT_EQ(item_witnesses.size(), 2U);
  std::set<std::vector<std::uint32_t>> translated;
  for (const auto& w : graph_witnesses) {
    const VertexBijection i{perm(w)};
    const auto j = translate_witness_gi_to_ii(i, inst, red);
    EXPECT_TRUE(solve::verify_ii_witness(red.instance, j));
    EXPECT_EQ(translate_witness_ii_to_gi(j, inst, red), i);
    translated.insert({j.map.map().begin(), j.map.map().end()});
  }
  EXPECT_EQ(translated, std::set<std::vector<std::uint32_t>>(item_witnesses.begin(), item_witnesses.end()));
}

TEST(GiToIi, RejectsNonWitness) {
  const GiInstance inst{parse_graph(fixtures::kRigidG), parse_graph(fixtures::kRigidH)};
  const auto red = gi_to_ii(inst);
  EXPECT_THROW(translate_witness_gi_to_ii(VertexBijection{Permutation::identity(6)}, inst, red), InvalidWitness);
  EXPECT_THROW(translate_witness_ii_to_gi(DomainBijection{Permutation::identity(8)}, inst, red), InvalidWitness);
}

TEST(GiToIi, PlantedConnectedPairs) {
  std::mt19937_64 rng(3);
  int done = 0;
  while (done < 50) {
    const Graph g = oracle::random_graph(6, 0.5, rng);
    if (!connected(g)) continue;
    const Graph h = oracle::relabeled(g, oracle::random_permutation(6, rng));
    const GiInstance inst{g, h};
    const auto red = gi_to_ii(inst);
    const auto j = solve::ii_decide(red.instance);
    ASSERT_TRUE(j);
    const auto sigma = translate_witness_ii_to_gi(*j, inst, red);
    EXPECT_TRUE(solve::verify_gi_witness(inst, sigma));
    ++done;
  }
}

TEST(IiToHgi, ColumnsBecomeHyperedges) {
  const Itemset s = parse_itemset(fixtures::kFourColumnItemset);
  const Hypergraph h = itemset_to_hypergraph(s);
  ASSERT_EQ(h.vertex_count(), 3U);
  ASSERT_EQ(h.edge_count(), 4U);
  EXPECT_EQ(h.hyperedge(0), (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(h.hyperedge(1), (std::vector<VertexId>{0, 2}));
}

TEST(IiToHgi, EmptyItemsetAndUnitItems) {
  const Hypergraph empty = itemset_to_hypergraph(parse_itemset("0 3\n"));
  EXPECT_EQ(empty.vertex_count(), 0U);
  EXPECT_EQ(empty.edge_count(), 3U);
  for (const auto& e : empty.hyperedges()) EXPECT_TRUE(e.empty());
  const Hypergraph unit = itemset_to_hypergraph(parse_itemset("2 2\n10\n01\n"));
  EXPECT_EQ(unit.hyperedge(0), (std::vector<VertexId>{0}));
  EXPECT_EQ(unit.hyperedge(1), (std::vector<VertexId>{1}));
}

TEST(IiToHgi, UniqueWitnessOnBothSides) {
  const IiInstance inst{parse_itemset(fixtures::kUniqueS), parse_itemset(fixtures::kUniqueT)};
  const auto red = ii_to_hgi(inst);
  const auto item_witnesses = oracle::ii_witnesses(inst.s, inst.t);
  const auto hyper_witnesses = oracle::hgi_witnesses(red.instance.g, red.instance.h);
  ASSERT_EQ(item_witnesses.size(), 1U);
  ASSERT_EQ(hyper_witnesses.size(), 1U);
  EXPECT_EQ(item_witnesses[0], (std::vector<std::uint32_t>{3, 0, 1, 2}));
  const DomainBijection j{perm(item_witnesses[0])};
  const auto i = translate_witness_ii_to_hgi(j, inst);
  EXPECT_EQ(i.map, perm(hyper_witnesses[0]));
  EXPECT_EQ(translate_witness_hgi_to_ii(i, inst), j);
}

TEST(IiToHgi, DuplicateColumnsShareOneHypergraphWitness) {
  const IiInstance inst{parse_itemset(fixtures::kDuplicateColumnS), parse_itemset(fixtures::kDuplicateColumnT)};
  const auto red = ii_to_hgi(inst);
  const auto item_witnesses = oracle::ii_witnesses(inst.s, inst.t);
  const auto hyper_witnesses = oracle::hgi_witnesses(red.instance.g, red.instance.h);
  ASSERT_EQ(item_witnesses.size(), 2U);
  ASSERT_EQ(hyper_witnesses.size(), 1U);
  for (const auto& w : item_witnesses)
    EXPECT_EQ(translate_witness_ii_to_hgi(DomainBijection{perm(w)}, inst).map, perm(hyper_witnesses[0]));
  const auto gamma = translate_witness_hgi_to_ii(VertexBijection{perm(hyper_witnesses[0])}, inst);
  EXPECT_TRUE(solve::verify_ii_witness(inst, gamma));
  // First unused duplicate hyperedge in index order.
  EXPECT_EQ(gamma.map, perm(item_witnesses[0]));
}

TEST(IiToHgi, IdentityBothWays) {
  const Itemset s = parse_itemset(fixtures::kFourColumnItemset);
  const IiInstance inst{s, s};
  EXPECT_EQ(translate_witness_ii_to_hgi(DomainBijection{Permutation::identity(4)}, inst).map,
            Permutation::identity(3));
  EXPECT_EQ(translate_witness_hgi_to_ii(VertexBijection{Permutation::identity(3)}, inst).map,
            Permutation::identity(4));
  EXPECT_THROW(translate_witness_hgi_to_ii(VertexBijection{perm({1, 0, 2})}, inst), InvalidWitness);
}

TEST(IiToHgi, SizeAccounting) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 7;
    const IiInstance inst{oracle::random_itemset(n, 8, rng), oracle::random_itemset(n, 8, rng)};
    const auto red = ii_to_hgi(inst);
    EXPECT_EQ(red.instance.g.vertex_count(), inst.s.size());
    EXPECT_EQ(red.instance.g.edge_count(), inst.s.domain_size());
    EXPECT_EQ(red.instance.h.vertex_count(), inst.t.size());
    EXPECT_EQ(red.instance.h.edge_count(), inst.t.domain_size());
  }
}

TEST(HgiToGi, SingleHyperedgeGadget) {
  std::vector<NodeInfo> roles;
  const Graph g = gadget_graph(Hypergraph(3, {{0, 1, 2}}), &roles);
  EXPECT_EQ(g, parse_graph("p edge 6 6\ne 1 4\ne 2 4\ne 3 4\ne 4 5\ne 4 6\ne 5 6\n"));
  EXPECT_EQ(triangles(g), 1U);
  EXPECT_EQ(roles[3], (NodeInfo{NodeRole::kHyperedge, 0}));
  EXPECT_EQ(roles[5], (NodeInfo{NodeRole::kGadget, 0}));
}

TEST(HgiToGi, NoHyperedgesAndEmptyDuplicates) {
  const Graph plain = gadget_graph(Hypergraph(4, {}));
  EXPECT_EQ(plain.vertex_count(), 4U);
  EXPECT_EQ(plain.edge_count(), 0U);
  const Graph doubled = gadget_graph(Hypergraph(2, {{}, {}}));
  EXPECT_EQ(doubled.vertex_count(), 8U);
  EXPECT_EQ(doubled.edge_count(), 6U);
  EXPECT_EQ(triangles(doubled), 2U);
}

TEST(HgiToGi, WitnessRestriction) {
  const IiInstance items{parse_itemset(fixtures::kUniqueS), parse_itemset(fixtures::kUniqueT)};
  const HgiInstance inst = ii_to_hgi(items).instance;
  const auto red = hgi_to_gi(inst);
  const VertexBijection expected{perm(oracle::hgi_witnesses(inst.g, inst.h).at(0))};
  const auto lifted = translate_witness_hgi_to_gi(expected, inst, red);
  EXPECT_TRUE(solve::verify_gi_witness(red.instance, lifted));
  const auto found = solve::gi_decide(red.instance);
  ASSERT_TRUE(found);
  EXPECT_EQ(translate_witness_gi_to_hgi(*found, inst, red), expected);

  const HgiInstance same{inst.g, inst.g};
  const auto same_red = hgi_to_gi(same);
  const VertexBijection id{Permutation::identity(same_red.instance.g.vertex_count())};
  EXPECT_EQ(translate_witness_gi_to_hgi(id, same, same_red).map, Permutation::identity(inst.g.vertex_count()));
}

TEST(HgiToGi, PlantedHypergraphs) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Hypergraph g = oracle::random_hypergraph(5, 1 + rng() % 4, rng);
    const auto p = oracle::random_permutation(5, rng);
    const HgiInstance inst{g, oracle::relabeled(g, p)};
    const auto red = hgi_to_gi(inst);
    const auto i = solve::gi_decide(red.instance);
    ASSERT_TRUE(i);
    EXPECT_TRUE(solve::verify_hgi_witness(inst, translate_witness_gi_to_hgi(*i, inst, red)));
    EXPECT_TRUE(solve::verify_gi_witness(red.instance,
                                         translate_witness_hgi_to_gi(VertexBijection{perm(p)}, inst, red)));
  }
}

TEST(HgiToGi, VertexToGadgetIsRejected) {
  const HgiInstance inst{Hypergraph(1, {{0}}), Hypergraph(1, {{0}})};
  const auto red = hgi_to_gi(inst);
  EXPECT_THROW(translate_witness_gi_to_hgi(VertexBijection{perm({1, 0, 2, 3})}, inst, red), InvalidWitness);
}

TEST(Properties, DecisionPreservationSmall) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const Graph h = (rng() & 1U) ? oracle::relabeled(g, oracle::random_permutation(n, rng))
                                 : oracle::random_graph(n, 0.5, rng);
    if (g.edge_count() != h.edge_count()) continue;
    const auto red = gi_to_ii({g, h});
    EXPECT_EQ(oracle::gi_witnesses(g, h).empty(), !oracle::ii(red.instance.s, red.instance.t));

    const IiInstance items{oracle::random_itemset(n, 5, rng), oracle::random_itemset(n, 5, rng)};
    const auto hred = ii_to_hgi(items);
    EXPECT_EQ(oracle::ii(items.s, items.t), !oracle::hgi_witnesses(hred.instance.g, hred.instance.h).empty());
  }
}

TEST(Properties, ReductionsArePolynomial) {
  std::mt19937_64 rng(1);
  const Graph g = oracle::random_graph(40, 0.5, rng);  // about 400 edges, 16000 bits
  const auto start = std::chrono::steady_clock::now();
  const auto f = gi_to_ii({g, g});
  const auto gg = ii_to_hgi(f.instance);
  const auto h = hgi_to_gi(gg.instance);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(seconds, 1.0);
  EXPECT_EQ(h.instance.g.vertex_count(), 40 + 3 * g.edge_count());
}

TEST(Index, RoundTripsAndCrossChecks) {
  const GiInstance gi{parse_graph(fixtures::kTwinG), parse_graph(fixtures::kTwinH)};
  const auto a = parse_index(serialize_index(gi));
  EXPECT_EQ(a.kind, ReductionKind::kGiToIi);
  EXPECT_EQ(std::get<GiInstance>(a.source).g, gi.g);
  EXPECT_EQ(serialize_index(std::get<GiInstance>(a.source)), serialize_index(gi));

  const IiInstance ii{parse_itemset(fixtures::kUniqueS), parse_itemset(fixtures::kUniqueT)};
  EXPECT_EQ(std::get<IiInstance>(parse_index(serialize_index(ii)).source).t, ii.t);
  const HgiInstance hgi = ii_to_hgi(ii).instance;
  EXPECT_EQ(std::get<HgiInstance>(parse_index(serialize_index(hgi)).source).h, hgi.h);

  EXPECT_THROW(parse_index("not an index\n"), ParseError);
  const Graph path = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n");
  std::string text = serialize_index(GiInstance{path, path});
  const auto pos = text.find("element 1 edge 1 2");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 18, "element 1 edge 2 3");
  EXPECT_THROW(parse_index(text), ParseError);
}
