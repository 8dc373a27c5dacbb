#ifndef ISOKIT_SORTNET_HPP
#define ISOKIT_SORTNET_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "isokit/solve/minimize.hpp"
#include "isokit/types.hpp"

namespace isokit::sortnet {

// Channel c of a binary input or output is bit c of the Bits value, so the
// sorted vector 0^k 1^(n-k) has its ones on the highest channels.

inline constexpr std::size_t kDefaultOutputCap = 20;

Bits eval(const ComparatorNetwork& net, const Bits& x);
std::uint64_t eval_word(const ComparatorNetwork& net, std::uint64_t x);
std::vector<std::int64_t> eval_values(const ComparatorNetwork& net, std::vector<std::int64_t> x);

// Distinct outputs over all 2^n binary inputs. Throws GuardExceeded above
// `cap` channels.
Itemset output_itemset(const ComparatorNetwork& net, std::size_t cap = kDefaultOutputCap);
bool sorts(const ComparatorNetwork& net, std::size_t cap = kDefaultOutputCap);

// A comparator whose minimum may land on either channel. Channel relabeling
// of a standard network produces these.
struct DirectedComparator {
  std::uint32_t min_to;
  std::uint32_t max_to;
};

struct GeneralizedNetwork {
  std::size_t channels = 0;
  std::vector<std::vector<DirectedComparator>> layers;
};

// Comparator (lo, hi) becomes (pi(lo) gets min, pi(hi) gets max).
GeneralizedNetwork relabel(const ComparatorNetwork& net, const Permutation& pi);
Itemset output_itemset(const GeneralizedNetwork& net, std::size_t cap = kDefaultOutputCap);

// Every matching of the complete graph on n channels, the empty one
// included, ordered by size and then by the sorted comparator list.
std::vector<Layer> matchings(std::size_t n);

struct PrefixGuard {
  std::size_t max_channels = 8;
  std::size_t max_layers = 3;
};

// All k-layer networks whose layers are (possibly empty) matchings, in
// lexicographic order of their layer indices into matchings(n).
std::vector<ComparatorNetwork> enumerate_prefixes(std::size_t n, std::size_t k, const PrefixGuard& guard = {});

struct PruneResult {
  std::vector<ComparatorNetwork> representatives;  // enumeration-first prefix per retained class
  std::vector<std::size_t> source_index;           // position of each representative in the input
  solve::MinimizeResult minimized;
};

PruneResult prune_prefixes(std::span<const ComparatorNetwork> prefixes, const solve::MinimizeOptions& options = {});

struct DepthSearchOptions {
  bool prune = true;
  std::size_t jobs = 1;
  std::size_t max_channels = 6;
};

struct LevelReport {
  std::size_t depth = 0;
  std::size_t candidates = 0;       // networks of this depth generated
  std::size_t distinct_outputs = 0;  // distinct output itemsets among them
  std::size_t frontier = 0;         // networks carried to the next depth
};

struct DepthSearchResult {
  std::optional<std::size_t> depth;  // empty when nothing sorts within max_depth
  std::optional<ComparatorNetwork> witness;
  std::vector<LevelReport> levels;
  solve::SearchStats stats;
};

// Iterative deepening over non-empty layers. With pruning, only ⪯-minimal
// class representatives are extended. The witness is the first sorting
// network in generation order at the least depth.
DepthSearchResult depth_search(std::size_t n, std::size_t max_depth, const DepthSearchOptions& options = {});

}  // namespace isokit::sortnet

#endif  // ISOKIT_SORTNET_HPP
