#ifndef ISOKIT_REDUCE_HPP
#define ISOKIT_REDUCE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "isokit/instances.hpp"
#include "isokit/types.hpp"

namespace isokit::reduce {

// ---------------------------------------------------------------------------
// Graph -> itemset. Every edge of a graph becomes a domain element and every
// vertex becomes the item of its incident edges.

// Positions of a graph's edges in the reduced domain: element k is edges()[k]
// (the graph's sorted edge order).
class EdgeIndex {
 public:
  EdgeIndex() = default;
  explicit EdgeIndex(const Graph& g);

  std::size_t size() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t k) const { return edges_[k]; }
  std::optional<std::size_t> position(Edge e) const;

 private:
  std::vector<Edge> edges_;
};

struct GiToIi {
  IiInstance instance;
  EdgeIndex left;
  EdgeIndex right;
};

// Isolated vertices all become the empty item and the two endpoints of an
// isolated edge share one item; such coincidences collapse in the itemset.
GiToIi gi_to_ii(const GiInstance& inst);

// The item S_u of vertex u before any collapse.
Item vertex_item(const Graph& g, const EdgeIndex& index, VertexId u);

// J maps edge (v,w) of G to edge (I(v), I(w)) of H. Throws InvalidWitness when
// I sends an edge to a non-edge.
DomainBijection translate_witness_gi_to_ii(const VertexBijection& i, const GiInstance& inst, const GiToIi& red);

// σ with J(S_g) = T_σ(g). Throws UnsupportedDegenerate when vertices
// collapsed (solve the graphs directly instead) and InvalidWitness when no
// consistent σ exists.
VertexBijection translate_witness_ii_to_gi(const DomainBijection& j, const GiInstance& inst, const GiToIi& red);

// ---------------------------------------------------------------------------
// Itemset -> hypergraph. Vertex g is item g (Itemset order) and hyperedge s
// holds the items containing element s. Hyperedges keep multiplicity, so
// |V| = |S| and |E| = |D_S| always.

Hypergraph itemset_to_hypergraph(const Itemset& s);

struct IiToHgi {
  HgiInstance instance;
};

IiToHgi ii_to_hgi(const IiInstance& inst);

VertexBijection translate_witness_ii_to_hgi(const DomainBijection& j, const IiInstance& inst);

// γ with s -> t iff I(E_s) = E_t. Among identical hyperedges the first unused
// one in index order is taken.
DomainBijection translate_witness_hgi_to_ii(const VertexBijection& i, const IiInstance& inst);

// ---------------------------------------------------------------------------
// Hypergraph -> graph. Node layout for a hypergraph with v vertices and m
// hyperedges: vertex nodes [0, v), hyperedge nodes [v, v+m), then two gadget
// nodes per hyperedge closing a triangle with its hyperedge node. Only
// hyperedge and gadget nodes lie on triangles.

enum class NodeRole { kVertex, kHyperedge, kGadget };

struct NodeInfo {
  NodeRole role;
  std::uint32_t index;  // vertex id, hyperedge id, or owning hyperedge id
  friend bool operator==(const NodeInfo&, const NodeInfo&) = default;
};

Graph gadget_graph(const Hypergraph& h, std::vector<NodeInfo>* roles = nullptr);

struct HgiToGi {
  GiInstance instance;
  std::vector<NodeInfo> left_roles;
  std::vector<NodeInfo> right_roles;
};

HgiToGi hgi_to_gi(const HgiInstance& inst);

// Restriction to vertex nodes.
VertexBijection translate_witness_gi_to_hgi(const VertexBijection& i, const HgiInstance& inst, const HgiToGi& red);
// Extends a hypergraph witness to hyperedge and gadget nodes.
VertexBijection translate_witness_hgi_to_gi(const VertexBijection& i, const HgiInstance& inst, const HgiToGi& red);

// ---------------------------------------------------------------------------
// Sidecar index (.idx): the source instance plus the correspondence table of
// a reduction. Enough to translate witnesses without the original files.

enum class ReductionKind { kGiToIi, kIiToHgi, kHgiToGi };

std::string_view to_string(ReductionKind kind);

struct ReductionIndex {
  ReductionKind kind;
  std::variant<GiInstance, IiInstance, HgiInstance> source;
};

std::string serialize_index(const GiInstance& source);
std::string serialize_index(const IiInstance& source);
std::string serialize_index(const HgiInstance& source);

// Throws ParseError; correspondence lines are checked against a recomputed
// reduction.
ReductionIndex parse_index(std::string_view text);

}  // namespace isokit::reduce

#endif  // ISOKIT_REDUCE_HPP
