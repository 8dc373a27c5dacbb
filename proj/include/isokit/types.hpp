#ifndef ISOKIT_TYPES_HPP
#define ISOKIT_TYPES_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isokit/bits.hpp"

namespace isokit {

// All indices are 0-based in memory. File formats use 1-based indices and the
// io layer converts at the boundary.

class Domain {
 public:
  Domain() = default;
  explicit Domain(std::size_t size) : size_(size) {}
  Domain(std::size_t size, std::vector<std::string> labels);

  std::size_t size() const { return size_; }
  const std::optional<std::vector<std::string>>& labels() const { return labels_; }

  // Labels are display-only; two domains of equal size are interchangeable.
  friend bool operator==(const Domain& a, const Domain& b) { return a.size_ == b.size_; }

 private:
  std::size_t size_ = 0;
  std::optional<std::vector<std::string>> labels_;
};

// An item is a subset of the domain: bit i is set iff d_{i+1} is a member.
using Item = Bits;

enum class Duplicates { kReject, kMerge };

// Duplicate-free set of items over one domain. Items are held sorted
// ascending (see Bits ordering), so equal itemsets have equal item lists.
class Itemset {
 public:
  Itemset() = default;
  explicit Itemset(Domain domain) : domain_(std::move(domain)) {}
  Itemset(Domain domain, std::vector<Item> items, Duplicates dup = Duplicates::kReject);

  const Domain& domain() const { return domain_; }
  std::size_t domain_size() const { return domain_.size(); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::span<const Item> items() const { return items_; }
  const Item& operator[](std::size_t i) const { return items_[i]; }

  bool contains(const Item& item) const;
  // Plain set inclusion, no relabeling.
  bool is_subset_of(const Itemset& other) const;

  // Column view: bit r of column(c) is set iff item r contains d_{c+1}.
  Bits column(std::size_t c) const;

  friend bool operator==(const Itemset& a, const Itemset& b) {
    return a.domain_size() == b.domain_size() && a.items_ == b.items_;
  }
  // Domain size, then item count, then item lists lexicographically.
  friend std::strong_ordering operator<=>(const Itemset& a, const Itemset& b);

 private:
  Domain domain_;
  std::vector<Item> items_;
};

struct ItemsetHash {
  std::size_t operator()(const Itemset& s) const;
};

// Itemsets over one shared domain, ordered by cardinality ascending with
// ties broken by Itemset ordering.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::vector<Itemset> itemsets);

  std::size_t size() const { return itemsets_.size(); }
  bool empty() const { return itemsets_.empty(); }
  std::span<const Itemset> itemsets() const { return itemsets_; }
  const Itemset& operator[](std::size_t i) const { return itemsets_[i]; }
  // Domain size shared by all entries; 0 for an empty dataset.
  std::size_t domain_size() const { return itemsets_.empty() ? 0 : itemsets_.front().domain_size(); }

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::vector<Itemset> itemsets_;
};

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;  // normalized: first < second

// Simple undirected graph with optional vertex colors.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t vertex_count, std::vector<Edge> edges);
  Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::uint32_t> colors);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  // Sorted ascending.
  std::span<const Edge> edges() const { return edges_; }
  const std::optional<std::vector<std::uint32_t>>& colors() const { return colors_; }

  bool has_edge(VertexId u, VertexId v) const;
  std::vector<std::size_t> degrees() const;
  std::vector<std::vector<VertexId>> adjacency() const;
  // Row-major vertex_count x vertex_count 0/1 matrix.
  std::vector<std::vector<std::uint8_t>> adjacency_matrix() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::optional<std::vector<std::uint32_t>> colors_;
};

// Hyperedges are kept in the given order and with multiplicity; each one is
// a sorted, duplicate-free vertex list and may be empty.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::size_t vertex_count, std::vector<std::vector<VertexId>> hyperedges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return hyperedges_.size(); }
  std::span<const std::vector<VertexId>> hyperedges() const { return hyperedges_; }
  const std::vector<VertexId>& hyperedge(std::size_t k) const { return hyperedges_[k]; }

  // Hyperedges sorted, i.e. the multiset view used for isomorphism.
  std::vector<std::vector<VertexId>> sorted_hyperedges() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<VertexId>> hyperedges_;
};

// A bijection of {0..n-1}: image(i) is where i goes.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> map);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return map_.size(); }
  std::uint32_t operator()(std::size_t i) const { return map_[i]; }
  std::span<const std::uint32_t> map() const { return map_; }

  Permutation inverse() const;
  // (after.compose(before))(i) == after(before(i)).
  Permutation compose(const Permutation& before) const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> map_;
};

// Witness for itemset problems: maps domain element d_{i+1} to d'_{J(i)+1}.
struct DomainBijection {
  Permutation map;
  friend bool operator==(const DomainBijection&, const DomainBijection&) = default;
};

// Witness for graph and hypergraph problems; also used for item matchings.
struct VertexBijection {
  Permutation map;
  friend bool operator==(const VertexBijection&, const VertexBijection&) = default;
};

struct Comparator {
  std::uint32_t lo;  // 0-based channel receiving the minimum
  std::uint32_t hi;  // 0-based channel receiving the maximum, lo < hi
  friend bool operator==(const Comparator&, const Comparator&) = default;
  friend auto operator<=>(const Comparator&, const Comparator&) = default;
};

using Layer = std::vector<Comparator>;

// Comparators grouped into layers; channels within a layer are disjoint.
class ComparatorNetwork {
 public:
  ComparatorNetwork() = default;
  explicit ComparatorNetwork(std::size_t channels) : channels_(channels) {}
  ComparatorNetwork(std::size_t channels, std::vector<Layer> layers);

  std::size_t channels() const { return channels_; }
  std::size_t depth() const { return layers_.size(); }
  std::size_t size() const;
  std::span<const Layer> layers() const { return layers_; }

  // Returns a copy with one more layer appended; the layer is validated.
  ComparatorNetwork with_layer(Layer layer) const;

  friend bool operator==(const ComparatorNetwork&, const ComparatorNetwork&) = default;

 private:
  std::size_t channels_ = 0;
  std::vector<Layer> layers_;
};

}  // namespace isokit

#endif  // ISOKIT_TYPES_HPP
