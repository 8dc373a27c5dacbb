#ifndef ISOKIT_PERMUTE_HPP
#define ISOKIT_PERMUTE_HPP

#include <cstddef>
#include <vector>

#include "isokit/types.hpp"

namespace isokit {

// Moves bit i of the item to position j(i).
Item apply_bijection_item(const Item& item, const DomainBijection& j);

// J(S): every item's columns permuted by j, rows re-sorted.
Itemset apply_bijection_itemset(const Itemset& s, const DomainBijection& j);

// Relabels vertex v as i(v); equivalent to permuting rows and then columns of
// the adjacency matrix. Colors travel with their vertices.
Graph apply_bijection_graph(const Graph& g, const VertexBijection& i);

// Relabels vertices inside every hyperedge; hyperedge order is kept.
Hypergraph apply_bijection_hypergraph(const Hypergraph& h, const VertexBijection& i);

// Popcount of every item, sorted ascending.
std::vector<std::size_t> item_cardinality_multiset(const Itemset& s);

// histogram[k] = number of items of cardinality k, k in [0, domain size].
std::vector<std::size_t> item_cardinality_histogram(const Itemset& s);

}  // namespace isokit

#endif  // ISOKIT_PERMUTE_HPP
