#ifndef ISOKIT_SOLVE_REFINE_HPP
#define ISOKIT_SOLVE_REFINE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "isokit/types.hpp"

namespace isokit::solve {

struct SearchStats {
  std::uint64_t nodes_explored = 0;
  std::uint64_t prunes_by_cardinality = 0;
  std::uint64_t prunes_by_refinement = 0;
  double elapsed_seconds = 0.0;

  void merge(const SearchStats& other);
  // One "key=value" pair per line.
  std::string to_report() const;
};

// Undirected vertex-colored graph used as the common search substrate.
// Vertices marked `branch` are preferred when the search has to individualize;
// the itemset solver marks domain columns so it branches over column
// assignments only.
struct ColoredGraph {
  std::vector<std::vector<std::uint32_t>> adj;
  std::vector<std::uint64_t> colors;
  std::vector<bool> branch;

  std::size_t size() const { return adj.size(); }
  static ColoredGraph from_graph(const Graph& g);
};

// Result of refining two graphs jointly to the coarsest equitable partition
// below their initial colorings. Cells are identified by color id and are
// directly comparable between the two sides.
struct RefinementPartition {
  std::vector<std::uint32_t> left;
  std::vector<std::uint32_t> right;
  std::size_t cell_count = 0;
  bool compatible = false;  // every cell holds equally many vertices on both sides
};

RefinementPartition refine_jointly(const ColoredGraph& a, const ColoredGraph& b);

// Individualization-refinement search for color-preserving isomorphisms
// a -> b. The visitor receives each isomorphism found and returns true to
// keep searching. Every isomorphism is reported exactly once.
void for_each_isomorphism(const ColoredGraph& a, const ColoredGraph& b,
                          const std::function<bool(const Permutation&)>& visit, SearchStats* stats = nullptr);

std::optional<Permutation> find_isomorphism(const ColoredGraph& a, const ColoredGraph& b,
                                            SearchStats* stats = nullptr);

}  // namespace isokit::solve

#endif  // ISOKIT_SOLVE_REFINE_HPP
