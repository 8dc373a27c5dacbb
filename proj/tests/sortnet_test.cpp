#include <gtest/gtest.h>

#include <random>

#include "isokit/errors.hpp"
#include "isokit/io.hpp"
#include "isokit/permute.hpp"
#include "isokit/solve/itemset.hpp"
#include "isokit/sortnet.hpp"
#include "oracle.hpp"

using namespace isokit;
using namespace isokit::sortnet;

namespace {

ComparatorNetwork net(const char* text) { return parse_network(text); }

// Straight string simulation, channel c is character c.
std::string run(const ComparatorNetwork& n, std::string x) {
  for (const auto& layer : n.layers())
    for (auto [lo, hi] : layer)
      if (x[lo] > x[hi]) std::swap(x[lo], x[hi]);
  return x;
}

oracle::Rows naive_outputs(const ComparatorNetwork& n) {
  oracle::Rows out;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n.channels()); ++w)
    out.insert(run(n, Bits::from_word(n.channels(), w).to_string()));
  return out;
}

ComparatorNetwork random_network(std::size_t n, std::size_t depth, std::mt19937_64& rng) {
  const auto all = matchings(n);
  std::vector<Layer> layers;
  for (std::size_t d = 0; d < depth; ++d) layers.push_back(all[rng() % all.size()]);
  return ComparatorNetwork(n, std::move(layers));
}

const char* kOptimalFour = "4 3\n2 1 2 3 4\n2 1 3 2 4\n1 2 3\n";

}  // namespace

TEST(Eval, Examples) {
  EXPECT_EQ(eval(net("2 1\n1 1 2\n"), Bits::from_string("10")).to_string(), "01");
  EXPECT_EQ(eval(net("3 2\n1 1 2\n1 2 3\n"), Bits::from_string("110")).to_string(), "101");
  EXPECT_EQ(oracle::rows(output_itemset(net("2 1\n1 1 2\n"))), (oracle::Rows{"00", "01", "11"}));
  EXPECT_EQ(eval_values(net(kOptimalFour), {4, -1, 3, 0}), (std::vector<std::int64_t>{-1, 0, 3, 4}));
}

TEST(Eval, MatchesStringSimulation) {
  std::mt19937_64 rng(90);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = random_network(1 + rng() % 7, rng() % 5, rng);
    EXPECT_EQ(oracle::rows(output_itemset(n)), naive_outputs(n));
    const std::uint64_t w = rng() & ((std::uint64_t{1} << n.channels()) - 1);
    EXPECT_EQ(eval_word(n, w), eval(n, Bits::from_word(n.channels(), w)).word(0));
  }
}

TEST(Sorts, Examples) {
  EXPECT_TRUE(sorts(net("2 1\n1 1 2\n")));
  EXPECT_FALSE(sorts(net("3 1\n1 1 2\n")));
  EXPECT_TRUE(sorts(net(kOptimalFour)));
  EXPECT_FALSE(sorts(net("4 2\n2 1 2 3 4\n2 1 3 2 4\n")));
  EXPECT_TRUE(sorts(ComparatorNetwork(1)));
  EXPECT_EQ(output_itemset(net(kOptimalFour)).size(), 5U);
  EXPECT_THROW(output_itemset(ComparatorNetwork(21)), GuardExceeded);
}

TEST(Sorts, ZeroOnePrincipleOnIntegers) {
  std::mt19937_64 rng(91);
  const auto n = net(kOptimalFour);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::int64_t> x(4);
    for (auto& v : x) v = static_cast<std::int64_t>(rng() % 7) - 3;
    auto y = eval_values(n, x);
    EXPECT_TRUE(std::is_sorted(y.begin(), y.end()));
  }
}

TEST(Outputs, SortedVectorsAreFixedPoints) {
  std::mt19937_64 rng(92);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t c = 1 + rng() % 8;
    const auto n = random_network(c, rng() % 4, rng);
    const auto outputs = output_itemset(n);
    for (std::size_t k = 0; k <= c; ++k) {
      Bits sorted(c);
      for (std::size_t i = c - k; i < c; ++i) sorted.set(i);
      EXPECT_EQ(eval(n, sorted), sorted);
      EXPECT_TRUE(outputs.contains(sorted));
    }
  }
}

TEST(Outputs, Monotone) {
  std::mt19937_64 rng(93);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t c = 2 + rng() % 7;
    const auto n = random_network(c, 1 + rng() % 4, rng);
    const std::uint64_t mask = (std::uint64_t{1} << c) - 1;
    const std::uint64_t y = rng() & mask, x = y & rng();
    const std::uint64_t fx = eval_word(n, x), fy = eval_word(n, y);
    EXPECT_EQ(fx & ~fy, 0U);
  }
}

TEST(Outputs, RelabelingPermutesOutputs) {
  std::mt19937_64 rng(94);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t c = 2 + rng() % 6;
    const auto n = random_network(c, 1 + rng() % 4, rng);
    const Permutation pi(oracle::random_permutation(c, rng));
    EXPECT_EQ(output_itemset(relabel(n, pi)), apply_bijection_itemset(output_itemset(n), DomainBijection{pi}));
  }
}

TEST(Prefixes, Counts) {
  EXPECT_EQ(matchings(2).size(), 2U);
  EXPECT_EQ(matchings(3).size(), 4U);
  EXPECT_EQ(matchings(4).size(), 10U);
  EXPECT_EQ(matchings(6).size(), 76U);
  EXPECT_TRUE(matchings(4).front().empty());
  EXPECT_EQ(enumerate_prefixes(2, 1).size(), 2U);
  EXPECT_EQ(enumerate_prefixes(3, 1).size(), 4U);
  EXPECT_EQ(enumerate_prefixes(4, 1).size(), 10U);
  EXPECT_EQ(enumerate_prefixes(3, 2).size(), 16U);
  EXPECT_EQ(enumerate_prefixes(3, 2)[1], net("3 2\n0\n1 1 2\n"));
  EXPECT_THROW(enumerate_prefixes(9, 1), GuardExceeded);
  EXPECT_THROW(enumerate_prefixes(3, 4), GuardExceeded);
}

TEST(Prefixes, PruneKeepsMinimalClasses) {
  const auto all = enumerate_prefixes(3, 1);
  const auto r = prune_prefixes(all);
  ASSERT_EQ(r.representatives.size(), 1U);
  EXPECT_EQ(r.representatives[0], net("3 1\n1 1 2\n"));
  EXPECT_EQ(r.source_index, std::vector<std::size_t>{1});

  const auto two = enumerate_prefixes(4, 2);
  const auto p = prune_prefixes(two);
  for (std::size_t k = 0; k < p.representatives.size(); ++k) {
    EXPECT_EQ(two[p.source_index[k]], p.representatives[k]);
    EXPECT_EQ(solve::canonical_form(output_itemset(p.representatives[k])).matrix, p.minimized.retained[k]);
  }
  for (const auto& n : two) {
    bool covered = false;
    for (const auto& rep : p.representatives)
      covered = covered || oracle::si(output_itemset(rep), output_itemset(n));
    EXPECT_TRUE(covered);
  }
}

TEST(DepthSearch, TwoChannels) {
  const auto r = depth_search(2, 4);
  ASSERT_EQ(r.depth, 1U);
  EXPECT_EQ(*r.witness, net("2 1\n1 1 2\n"));
  EXPECT_EQ(depth_search(1, 4).depth, 0U);
}

TEST(DepthSearch, KnownOptimalDepths) {
  const std::size_t expected[] = {0, 0, 1, 3, 3, 5, 5};
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r = depth_search(n, 6);
    ASSERT_EQ(r.depth, expected[n]) << n;
    EXPECT_TRUE(sorts(*r.witness));
    EXPECT_EQ(r.witness->depth(), expected[n]);
    EXPECT_EQ(r.levels.size(), expected[n]);
    EXPECT_FALSE(depth_search(n, expected[n] - 1).depth);
  }
}

TEST(DepthSearch, PruningIsSound) {
  for (std::size_t n = 2; n <= 4; ++n) {
    DepthSearchOptions full;
    full.prune = false;
    const auto a = depth_search(n, 4, full);
    const auto b = depth_search(n, 4);
    EXPECT_EQ(a.depth, b.depth);
    EXPECT_TRUE(sorts(*a.witness));
    for (std::size_t k = 0; k + 1 < b.levels.size(); ++k)
      EXPECT_LE(b.levels[k].frontier, a.levels[k].frontier);
  }
}

TEST(DepthSearch, WorkerCountDoesNotMatter) {
  DepthSearchOptions opts;
  opts.jobs = 4;
  const auto a = depth_search(5, 5);
  const auto b = depth_search(5, 5, opts);
  EXPECT_EQ(a.depth, b.depth);
  EXPECT_EQ(a.witness, b.witness);
  ASSERT_EQ(a.levels.size(), b.levels.size());
  for (std::size_t k = 0; k < a.levels.size(); ++k) EXPECT_EQ(a.levels[k].frontier, b.levels[k].frontier);
}
