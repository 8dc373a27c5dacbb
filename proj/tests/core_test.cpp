#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "isokit/errors.hpp"
#include "isokit/io.hpp"
#include "isokit/permute.hpp"
#include "oracle.hpp"

using namespace isokit;

namespace {

DomainBijection bij(std::vector<std::uint32_t> p) { return DomainBijection{Permutation(std::move(p))}; }
VertexBijection vbij(std::vector<std::uint32_t> p) { return VertexBijection{Permutation(std::move(p))}; }

std::vector<std::string> row_strings(const Itemset& s) {
  std::vector<std::string> out;
  for (const auto& item : s.items()) out.push_back(item.to_string());
  return out;
}

}  // namespace

TEST(Bits, StringRoundTripAndOrder) {
  const Bits a = Bits::from_string("1100");
  EXPECT_EQ(a.to_string(), "1100");
  EXPECT_EQ(a.count(), 2U);
  EXPECT_TRUE(a.test(0));
  EXPECT_FALSE(a.test(3));
  // The last element is the most significant position.
  EXPECT_LT(Bits::from_string("1100"), Bits::from_string("1010"));
  EXPECT_LT(Bits::from_string("1010"), Bits::from_string("1101"));
  EXPECT_LT(Bits::from_string("111"), Bits::from_string("0000"));
}

TEST(Bits, WideVectors) {
  Bits a(130), b(130);
  a.set(129);
  b.set(0);
  EXPECT_LT(b, a);
  EXPECT_EQ(a.find_first(), 129U);
  EXPECT_FALSE(a.is_subset_of(b));
  a |= b;
  EXPECT_TRUE(b.is_subset_of(a));
  EXPECT_EQ(a.count(), 2U);
  EXPECT_EQ(a.complement().count(), 128U);
}

TEST(Types, ItemsetRejectsDuplicatesUnlessMerging) {
  std::vector<Item> items{Bits::from_string("10"), Bits::from_string("10")};
  EXPECT_THROW(Itemset(Domain(2), items), StructuralError);
  EXPECT_EQ(Itemset(Domain(2), items, Duplicates::kMerge).size(), 1U);
  EXPECT_THROW(Itemset(Domain(3), {Bits::from_string("10")}), StructuralError);
}

TEST(Types, DomainLabels) {
  EXPECT_THROW(Domain(2, {"a", "a"}), StructuralError);
  EXPECT_THROW(Domain(2, {"a"}), StructuralError);
  EXPECT_EQ(Domain(2, {"a", "b"}), Domain(2));
}

TEST(Types, GraphValidation) {
  EXPECT_THROW(Graph(3, {{1, 1}}), StructuralError);
  EXPECT_THROW(Graph(3, {{0, 3}}), StructuralError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), StructuralError);
  const Graph g(3, {{2, 1}, {0, 1}});
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{1, 2}));
  EXPECT_TRUE(g.has_edge(2, 1));
}

TEST(Types, DatasetOrdersByCardinality) {
  const Itemset big = parse_itemset("3 2\n10\n01\n11\n");
  const Itemset small = parse_itemset("1 2\n11\n");
  const Dataset d({big, small});
  ASSERT_EQ(d.size(), 2U);
  EXPECT_EQ(d[0], small);
  EXPECT_EQ(d[1], big);
  EXPECT_THROW(Dataset({small, parse_itemset("1 3\n111\n")}), StructuralError);
}

TEST(Types, PermutationAlgebra) {
  const Permutation p({2, 0, 1});
  EXPECT_EQ(p.inverse().compose(p), Permutation::identity(3));
  EXPECT_EQ(p.compose(p)(0), 1U);
  EXPECT_THROW(Permutation({0, 0}), StructuralError);
}

TEST(ApplyItemset, SwappingFirstAndLastColumn) {
  const Itemset s = parse_itemset(fixtures::kFourColumnItemset);
  const Itemset t = apply_bijection_itemset(s, bij({3, 1, 2, 0}));
  std::set<std::string> expected;
  for (const auto& r : row_strings(s)) expected.insert(std::string{r[3], r[1], r[2], r[0]});
  EXPECT_EQ(oracle::rows(t), expected);
  EXPECT_EQ(t.size(), s.size());
}

TEST(ApplyItemset, Identity) {
  const Itemset s = parse_itemset(fixtures::kFourColumnItemset);
  EXPECT_EQ(apply_bijection_itemset(s, bij({0, 1, 2, 3})), s);
}

TEST(ApplyItemset, SwapFirstTwoElements) {
  const Itemset s = parse_itemset("2 3\n110\n101\n");
  const Itemset t = apply_bijection_itemset(s, bij({1, 0, 2}));
  EXPECT_EQ(oracle::rows(t), (oracle::Rows{"110", "011"}));
  EXPECT_THROW(apply_bijection_itemset(s, bij({1, 0})), StructuralError);
}

TEST(ApplyGraph, SwapRowsThenColumns) {
  const Graph g = parse_graph(fixtures::kPaw);
  const Graph h = apply_bijection_graph(g, vbij({3, 1, 2, 0}));
  auto a = g.adjacency_matrix();
  std::swap(a[0], a[3]);
  for (auto& row : a) std::swap(row[0], row[3]);
  EXPECT_EQ(h.adjacency_matrix(), a);
}

TEST(ApplyGraph, IdentityAndPathReversal) {
  const Graph g = parse_graph(fixtures::kPaw);
  EXPECT_EQ(apply_bijection_graph(g, vbij({0, 1, 2, 3})), g);
  const Graph path = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n");
  EXPECT_EQ(apply_bijection_graph(path, vbij({2, 1, 0})), path);
  EXPECT_THROW(apply_bijection_graph(path, vbij({1, 0})), StructuralError);
}

TEST(ApplyGraph, ColorsTravelWithVertices) {
  const Graph g(3, {{0, 1}}, {5, 6, 7});
  const Graph h = apply_bijection_graph(g, vbij({2, 0, 1}));
  EXPECT_EQ(*h.colors(), (std::vector<std::uint32_t>{6, 7, 5}));
  EXPECT_TRUE(h.has_edge(2, 0));
}

TEST(Cardinality, Multiset) {
  EXPECT_EQ(item_cardinality_multiset(parse_itemset("2 3\n110\n001\n")), (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(item_cardinality_multiset(parse_itemset("0 3\n")).empty());
  EXPECT_EQ(item_cardinality_multiset(parse_itemset("1 4\n1111\n")), (std::vector<std::size_t>{4}));
  EXPECT_EQ(item_cardinality_histogram(parse_itemset("2 3\n110\n001\n")), (std::vector<std::size_t>{0, 1, 1, 0}));
}

TEST(Properties, PermutationActions) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const Itemset s = oracle::random_itemset(n, 10, rng);
    const auto p1 = oracle::random_permutation(n, rng);
    const auto p2 = oracle::random_permutation(n, rng);
    const DomainBijection j1{Permutation(p1)}, j2{Permutation(p2)};
    const Itemset once = apply_bijection_itemset(s, j1);
    EXPECT_EQ(once.size(), s.size());
    EXPECT_EQ(item_cardinality_multiset(once), item_cardinality_multiset(s));
    EXPECT_EQ(oracle::rows(once), oracle::move_rows(oracle::rows(s), p1));
    EXPECT_EQ(apply_bijection_itemset(once, DomainBijection{j1.map.inverse()}), s);
    EXPECT_EQ(apply_bijection_itemset(once, j2),
              apply_bijection_itemset(s, DomainBijection{j2.map.compose(j1.map)}));

    const Graph g = oracle::random_graph(n, 0.5, rng);
    const Graph h = apply_bijection_graph(g, VertexBijection{Permutation(p1)});
    EXPECT_EQ(h, oracle::relabeled(g, p1));
    auto dg = g.degrees(), dh = h.degrees();
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    EXPECT_EQ(dg, dh);
    EXPECT_EQ(g.edge_count(), h.edge_count());
  }
}

TEST(Io, ItemsetFormat) {
  const Itemset s = parse_itemset("2 3\n110\n011\n");
  EXPECT_EQ(s.size(), 2U);
  EXPECT_EQ(s.domain_size(), 3U);
  EXPECT_EQ(serialize_itemset(s), "2 3\n110\n011\n");
  EXPECT_EQ(parse_itemset("# note\n2 3\n\n011\n# more\n110\n"), s);
  EXPECT_EQ(parse_itemset("2 3\r\n110\r\n011\r\n"), s);
}

TEST(Io, GraphAndHypergraphFormats) {
  const Graph g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n");
  EXPECT_EQ(g, Graph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(serialize_graph(g), "p edge 3 2\ne 1 2\ne 2 3\n");
  const Hypergraph h = parse_hypergraph("p hyper 3 3\n3 1 2 3\n0\n0\n");
  EXPECT_EQ(h.edge_count(), 3U);
  EXPECT_TRUE(h.hyperedge(1).empty());
  EXPECT_EQ(parse_hypergraph(serialize_hypergraph(h)), h);
}

TEST(Io, NetworkDatasetPermutationFormats) {
  const auto net = parse_network("3 2\n1 1 2\n1 2 3\n");
  EXPECT_EQ(net.depth(), 2U);
  EXPECT_EQ(net.size(), 2U);
  EXPECT_EQ(serialize_network(net), "3 2\n1 1 2\n1 2 3\n");
  const Dataset d = parse_dataset("2\n1 2\n11\n\n2 2\n10\n01\n");
  EXPECT_EQ(d.size(), 2U);
  EXPECT_EQ(parse_dataset(serialize_dataset(d)), d);
  const auto p = parse_permutation("2 3 1\n");
  EXPECT_EQ(p, Permutation({1, 2, 0}));
  EXPECT_EQ(serialize_permutation(p), "2 3 1\n");
}

namespace {

void expect_parse_error(const std::function<void()>& f, ParseErrorKind kind, std::size_t line) {
  try {
    f();
    ADD_FAILURE() << "no parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
    EXPECT_EQ(e.line(), line) << e.what();
  }
}

}  // namespace

TEST(Io, DistinctErrorsNameTheLine) {
  expect_parse_error([] { parse_itemset("x 3\n"); }, ParseErrorKind::kMalformedHeader, 1);
  expect_parse_error([] { parse_itemset("2 3\n110\n11\n"); }, ParseErrorKind::kRowLength, 3);
  expect_parse_error([] { parse_itemset("2 3\n110\n110\n"); }, ParseErrorKind::kDuplicateRow, 3);
  expect_parse_error([] { parse_itemset("2 3\n110\n1a0\n"); }, ParseErrorKind::kMalformedLine, 3);
  expect_parse_error([] { parse_graph("p edge 3 1\ne 1 4\n"); }, ParseErrorKind::kOutOfRange, 2);
  expect_parse_error([] { parse_graph("p edge 3 2\ne 1 2\n"); }, ParseErrorKind::kCountMismatch, 2);
  expect_parse_error([] { parse_hypergraph("p hyper 2 1\n2 1 3\n"); }, ParseErrorKind::kOutOfRange, 2);
  expect_parse_error([] { parse_network("3 1\n2 1 2 2 3\n"); }, ParseErrorKind::kInvalidStructure, 2);
}

TEST(Io, RoundTripsOnRandomObjects) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const Itemset s = oracle::random_itemset(n, 12, rng);
    EXPECT_EQ(parse_itemset(serialize_itemset(s)), s);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    EXPECT_EQ(parse_graph(serialize_graph(g)), g);
    const Hypergraph h = oracle::random_hypergraph(n, rng() % 5, rng);
    EXPECT_EQ(parse_hypergraph(serialize_hypergraph(h)), h);
  }
}
