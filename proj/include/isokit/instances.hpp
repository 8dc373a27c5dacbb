#ifndef ISOKIT_INSTANCES_HPP
#define ISOKIT_INSTANCES_HPP

#include "isokit/types.hpp"

namespace isokit {

// Graph isomorphism input. Unequal orders are allowed; deciders answer no.
struct GiInstance {
  Graph g;
  Graph h;
};

// Itemset isomorphism input; the two domains may differ.
struct IiInstance {
  Itemset s;
  Itemset t;
};

struct HgiInstance {
  Hypergraph g;
  Hypergraph h;
};

}  // namespace isokit

#endif  // ISOKIT_INSTANCES_HPP
