#include "isokit/types.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "isokit/errors.hpp"

namespace isokit {

Domain::Domain(std::size_t size, std::vector<std::string> labels) : size_(size) {
  if (labels.size() != size)
    throw StructuralError("domain labels: expected " + std::to_string(size) + " labels, got " +
                          std::to_string(labels.size()));
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw StructuralError("domain labels must be distinct");
  labels_ = std::move(labels);
}

Itemset::Itemset(Domain domain, std::vector<Item> items, Duplicates dup)
    : domain_(std::move(domain)), items_(std::move(items)) {
  for (const auto& item : items_) {
    if (item.size() != domain_.size())
      throw StructuralError("item of length " + std::to_string(item.size()) +
                            " in itemset over domain of size " + std::to_string(domain_.size()));
  }
  std::sort(items_.begin(), items_.end());
  auto last = std::unique(items_.begin(), items_.end());
  if (last != items_.end()) {
    if (dup == Duplicates::kReject) throw StructuralError("itemset contains duplicate items");
    items_.erase(last, items_.end());
  }
}

bool Itemset::contains(const Item& item) const {
  return std::binary_search(items_.begin(), items_.end(), item);
}

bool Itemset::is_subset_of(const Itemset& other) const {
  if (domain_size() != other.domain_size() || size() > other.size()) return false;
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

Bits Itemset::column(std::size_t c) const {
  Bits col(items_.size());
  for (std::size_t r = 0; r < items_.size(); ++r)
    if (items_[r].test(c)) col.set(r);
  return col;
}

std::strong_ordering operator<=>(const Itemset& a, const Itemset& b) {
  if (auto c = a.domain_size() <=> b.domain_size(); c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (auto c = a.items_[i] <=> b.items_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t ItemsetHash::operator()(const Itemset& s) const {
  std::size_t h = s.domain_size() * 0x100000001b3ULL;
  for (const auto& item : s.items()) h ^= item.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Dataset::Dataset(std::vector<Itemset> itemsets) : itemsets_(std::move(itemsets)) {
  for (const auto& s : itemsets_) {
    if (s.domain_size() != itemsets_.front().domain_size())
      throw StructuralError("dataset mixes itemsets over different domains");
  }
  std::stable_sort(itemsets_.begin(), itemsets_.end(), [](const Itemset& a, const Itemset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

namespace {

Edge normalized(Edge e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  return e;
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.first == e.second)
      throw StructuralError("self-loop on vertex " + std::to_string(e.first + 1));
    if (e.first >= vertex_count_ || e.second >= vertex_count_)
      throw StructuralError("edge endpoint out of range");
    e = normalized(e);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw StructuralError("parallel edges are not allowed");
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::uint32_t> colors)
    : Graph(vertex_count, std::move(edges)) {
  if (colors.size() != vertex_count_) throw StructuralError("one color per vertex required");
  colors_ = std::move(colors);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  return std::binary_search(edges_.begin(), edges_.end(), normalized({u, v}));
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(vertex_count_, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<std::vector<VertexId>> Graph::adjacency() const {
  std::vector<std::vector<VertexId>> adj(vertex_count_);
  for (auto [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<std::vector<std::uint8_t>> Graph::adjacency_matrix() const {
  std::vector<std::vector<std::uint8_t>> m(vertex_count_, std::vector<std::uint8_t>(vertex_count_, 0));
  for (auto [u, v] : edges_) m[u][v] = m[v][u] = 1;
  return m;
}

Hypergraph::Hypergraph(std::size_t vertex_count, std::vector<std::vector<VertexId>> hyperedges)
    : vertex_count_(vertex_count), hyperedges_(std::move(hyperedges)) {
  for (auto& e : hyperedges_) {
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw StructuralError("hyperedge lists a vertex twice");
    if (!e.empty() && e.back() >= vertex_count_) throw StructuralError("hyperedge vertex out of range");
  }
}

std::vector<std::vector<VertexId>> Hypergraph::sorted_hyperedges() const {
  auto edges = hyperedges_;
  std::sort(edges.begin(), edges.end());
  return edges;
}

Permutation::Permutation(std::vector<std::uint32_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (auto v : map_) {
    if (v >= map_.size() || seen[v]) throw StructuralError("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0U);
  return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& before) const {
  if (before.size() != size()) throw StructuralError("composing permutations of different sizes");
  std::vector<std::uint32_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = map_[before.map_[i]];
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != i) return false;
  return true;
}

ComparatorNetwork::ComparatorNetwork(std::size_t channels, std::vector<Layer> layers) : channels_(channels) {
  for (auto& layer : layers) *this = with_layer(std::move(layer));
}

std::size_t ComparatorNetwork::size() const {
  std::size_t n = 0;
  for (const auto& l : layers_) n += l.size();
  return n;
}

ComparatorNetwork ComparatorNetwork::with_layer(Layer layer) const {
  std::vector<bool> used(channels_, false);
  for (const auto& c : layer) {
    if (c.lo >= c.hi) throw StructuralError("comparator needs lo < hi");
    if (c.hi >= channels_) throw StructuralError("comparator channel out of range");
    if (used[c.lo] || used[c.hi]) throw StructuralError("layer uses a channel twice");
    used[c.lo] = used[c.hi] = true;
  }
  std::sort(layer.begin(), layer.end());
  ComparatorNetwork out = *this;
  out.layers_.push_back(std::move(layer));
  return out;
}

}  // namespace isokit
