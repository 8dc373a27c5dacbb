#include "isokit/permute.hpp"

#include <algorithm>
#include <string>

#include "isokit/errors.hpp"

namespace isokit {

Item apply_bijection_item(const Item& item, const DomainBijection& j) {
  if (item.size() != j.map.size())
    throw StructuralError("bijection over " + std::to_string(j.map.size()) +
                          " elements applied to item of length " + std::to_string(item.size()));
  Item out(item.size());
  for (std::size_t b = item.find_first(); b != Bits::npos; b = item.find_next(b)) out.set(j.map(b));
  return out;
}

Itemset apply_bijection_itemset(const Itemset& s, const DomainBijection& j) {
  if (s.domain_size() != j.map.size())
    throw StructuralError("bijection size " + std::to_string(j.map.size()) +
                          " does not match domain size " + std::to_string(s.domain_size()));
  std::vector<Item> items;
  items.reserve(s.size());
  for (const auto& item : s.items()) items.push_back(apply_bijection_item(item, j));
  return Itemset(s.domain(), std::move(items));
}

Graph apply_bijection_graph(const Graph& g, const VertexBijection& i) {
  if (g.vertex_count() != i.map.size())
    throw StructuralError("vertex bijection size does not match graph order");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.emplace_back(i.map(u), i.map(v));
  if (!g.colors()) return Graph(g.vertex_count(), std::move(edges));
  std::vector<std::uint32_t> colors(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) colors[i.map(v)] = (*g.colors())[v];
  return Graph(g.vertex_count(), std::move(edges), std::move(colors));
}

Hypergraph apply_bijection_hypergraph(const Hypergraph& h, const VertexBijection& i) {
  if (h.vertex_count() != i.map.size())
    throw StructuralError("vertex bijection size does not match hypergraph order");
  std::vector<std::vector<VertexId>> edges;
  edges.reserve(h.edge_count());
  for (const auto& e : h.hyperedges()) {
    std::vector<VertexId> mapped;
    mapped.reserve(e.size());
    for (auto v : e) mapped.push_back(i.map(v));
    edges.push_back(std::move(mapped));
  }
  return Hypergraph(h.vertex_count(), std::move(edges));
}

std::vector<std::size_t> item_cardinality_multiset(const Itemset& s) {
  std::vector<std::size_t> out;
  out.reserve(s.size());
  for (const auto& item : s.items()) out.push_back(item.count());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> item_cardinality_histogram(const Itemset& s) {
  std::vector<std::size_t> hist(s.domain_size() + 1, 0);
  for (const auto& item : s.items()) ++hist[item.count()];
  return hist;
}

}  // namespace isokit
