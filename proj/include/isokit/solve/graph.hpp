#ifndef ISOKIT_SOLVE_GRAPH_HPP
#define ISOKIT_SOLVE_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "isokit/instances.hpp"
#include "isokit/solve/itemset.hpp"
#include "isokit/solve/refine.hpp"

namespace isokit::solve {

// Graph isomorphism by color refinement and individualization. Vertex colors
// are respected when present (an uncolored graph counts as all color 0).
std::optional<VertexBijection> gi_decide(const GiInstance& inst, SearchStats* stats = nullptr);
std::vector<VertexBijection> gi_enumerate(const GiInstance& inst, SearchStats* stats = nullptr);

// Reference decider: extends partial vertex maps one vertex at a time and
// drops a partial map as soon as it breaks adjacency, degree or color.
// Throws GuardExceeded above `guard` vertices.
std::optional<VertexBijection> gi_decide_bruteforce(const GiInstance& inst, std::size_t guard = kDefaultGuard);

// (v,w) ∈ E_G iff (I(v), I(w)) ∈ E_H, colors preserved.
bool verify_gi_witness(const GiInstance& inst, const VertexBijection& i);

enum class HgiRoute {
  kIncidence,  // colored vertex/hyperedge incidence graph searched directly
  kItemset,    // transpose to an itemset (items = vertices) and run ii_decide
  kGadget,     // plain-graph triangle gadget encoding, then gi_decide
};

std::optional<VertexBijection> hgi_decide(const HgiInstance& inst, HgiRoute route = HgiRoute::kIncidence,
                                          SearchStats* stats = nullptr);

// Tries every vertex permutation; hyperedges compared as multisets.
std::optional<VertexBijection> hgi_decide_bruteforce(const HgiInstance& inst, std::size_t guard = kDefaultGuard);
std::vector<VertexBijection> hgi_enumerate_bruteforce(const HgiInstance& inst, std::size_t guard = kDefaultGuard);

// A ∈ E_G iff I(A) ∈ E_H, counting multiplicity.
bool verify_hgi_witness(const HgiInstance& inst, const VertexBijection& i);

}  // namespace isokit::solve

#endif  // ISOKIT_SOLVE_GRAPH_HPP
