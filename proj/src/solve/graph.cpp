#include "isokit/solve/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "isokit/errors.hpp"
#include "isokit/permute.hpp"
#include "isokit/reduce.hpp"

namespace isokit::solve {

namespace {

bool gi_quick_reject(const GiInstance& inst, SearchStats* stats) {
  bool reject = inst.g.vertex_count() != inst.h.vertex_count() || inst.g.edge_count() != inst.h.edge_count();
  if (!reject) {
    auto dg = inst.g.degrees(), dh = inst.h.degrees();
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    reject = dg != dh;
  }
  if (reject && stats) ++stats->prunes_by_cardinality;
  return reject;
}

std::uint32_t color_of(const Graph& g, std::size_t v) { return g.colors() ? (*g.colors())[v] : 0; }

}  // namespace

bool verify_gi_witness(const GiInstance& inst, const VertexBijection& i) {
  const Graph& g = inst.g;
  const Graph& h = inst.h;
  if (g.vertex_count() != h.vertex_count() || i.map.size() != g.vertex_count()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (color_of(g, v) != color_of(h, i.map(v))) return false;
  // Equal edge counts plus injectivity make the forward check sufficient.
  for (auto [u, v] : g.edges())
    if (!h.has_edge(i.map(u), i.map(v))) return false;
  return true;
}

std::optional<VertexBijection> gi_decide(const GiInstance& inst, SearchStats* stats) {
  if (gi_quick_reject(inst, stats)) return std::nullopt;
  auto found = find_isomorphism(ColoredGraph::from_graph(inst.g), ColoredGraph::from_graph(inst.h), stats);
  if (!found) return std::nullopt;
  VertexBijection out{*found};
  if (!verify_gi_witness(inst, out)) throw std::logic_error("gi_decide produced a witness that does not verify");
  return out;
}

std::vector<VertexBijection> gi_enumerate(const GiInstance& inst, SearchStats* stats) {
  std::vector<VertexBijection> out;
  if (gi_quick_reject(inst, stats)) return out;
  for_each_isomorphism(
      ColoredGraph::from_graph(inst.g), ColoredGraph::from_graph(inst.h),
      [&](const Permutation& p) {
        out.push_back(VertexBijection{p});
        return true;
      },
      stats);
  return out;
}

namespace {

class BruteGraphMatcher {
 public:
  explicit BruteGraphMatcher(const GiInstance& inst)
      : g_(inst.g), h_(inst.h), gm_(inst.g.adjacency_matrix()), hm_(inst.h.adjacency_matrix()),
        dg_(inst.g.degrees()), dh_(inst.h.degrees()) {}

  std::optional<VertexBijection> run() {
    const std::size_t n = g_.vertex_count();
    map_.assign(n, 0);
    used_.assign(n, false);
    if (!extend(0)) return std::nullopt;
    return VertexBijection{Permutation(map_)};
  }

 private:
  bool extend(std::size_t v) {
    const std::size_t n = g_.vertex_count();
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used_[w] || dg_[v] != dh_[w] || color_of(g_, v) != color_of(h_, w)) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = gm_[u][v] == hm_[map_[u]][w];
      if (!ok) continue;
      map_[v] = static_cast<std::uint32_t>(w);
      used_[w] = true;
      if (extend(v + 1)) return true;
      used_[w] = false;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<std::vector<std::uint8_t>> gm_, hm_;
  std::vector<std::size_t> dg_, dh_;
  std::vector<std::uint32_t> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<VertexBijection> gi_decide_bruteforce(const GiInstance& inst, std::size_t guard) {
  if (inst.g.vertex_count() != inst.h.vertex_count() || inst.g.edge_count() != inst.h.edge_count())
    return std::nullopt;
  if (inst.g.vertex_count() > guard) throw GuardExceeded("gi brute force", inst.g.vertex_count(), guard);
  return BruteGraphMatcher(inst).run();
}

bool verify_hgi_witness(const HgiInstance& inst, const VertexBijection& i) {
  if (inst.g.vertex_count() != inst.h.vertex_count() || i.map.size() != inst.g.vertex_count()) return false;
  if (inst.g.edge_count() != inst.h.edge_count()) return false;
  return apply_bijection_hypergraph(inst.g, i).sorted_hyperedges() == inst.h.sorted_hyperedges();
}

namespace {

// Vertex nodes first (branch candidates), then one node per hyperedge.
ColoredGraph incidence_graph(const Hypergraph& h) {
  const std::size_t v = h.vertex_count();
  ColoredGraph g;
  g.adj.resize(v + h.edge_count());
  g.colors.assign(v + h.edge_count(), 1);
  g.branch.assign(v + h.edge_count(), false);
  for (std::size_t x = 0; x < v; ++x) {
    g.colors[x] = 0;
    g.branch[x] = true;
  }
  for (std::size_t k = 0; k < h.edge_count(); ++k) {
    const auto node = static_cast<std::uint32_t>(v + k);
    for (auto x : h.hyperedge(k)) {
      g.adj[node].push_back(x);
      g.adj[x].push_back(node);
    }
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

// Item of vertex x: the hyperedges containing it.
std::vector<Item> vertex_items(const Hypergraph& h) {
  std::vector<Item> items(h.vertex_count(), Item(h.edge_count()));
  for (std::size_t k = 0; k < h.edge_count(); ++k)
    for (auto x : h.hyperedge(k)) items[x].set(k);
  return items;
}

std::optional<VertexBijection> hgi_incidence(const HgiInstance& inst, SearchStats* stats) {
  auto found = find_isomorphism(incidence_graph(inst.g), incidence_graph(inst.h), stats);
  if (!found) return std::nullopt;
  std::vector<std::uint32_t> map(found->map().begin(),
                                 found->map().begin() + static_cast<std::ptrdiff_t>(inst.g.vertex_count()));
  return VertexBijection{Permutation(std::move(map))};
}

std::optional<VertexBijection> hgi_itemset(const HgiInstance& inst, SearchStats* stats) {
  auto left = vertex_items(inst.g);
  auto right = vertex_items(inst.h);
  auto distinct = [](std::vector<Item> items) {
    std::sort(items.begin(), items.end());
    return std::adjacent_find(items.begin(), items.end()) == items.end();
  };
  // Vertices with identical memberships would merge into one item.
  if (!distinct(left) || !distinct(right)) return hgi_incidence(inst, stats);
  IiInstance ii{Itemset(Domain(inst.g.edge_count()), left), Itemset(Domain(inst.h.edge_count()), right)};
  auto j = ii_decide(ii, stats);
  if (!j) return std::nullopt;
  // Item matching: vertex x goes to the vertex whose item is J(item of x).
  std::vector<std::uint32_t> map(inst.g.vertex_count());
  for (std::size_t x = 0; x < left.size(); ++x) {
    const Item image = apply_bijection_item(left[x], *j);
    map[x] = static_cast<std::uint32_t>(std::find(right.begin(), right.end(), image) - right.begin());
  }
  return VertexBijection{Permutation(std::move(map))};
}

std::optional<VertexBijection> hgi_gadget(const HgiInstance& inst, SearchStats* stats) {
  const auto red = reduce::hgi_to_gi(inst);
  auto i = gi_decide(red.instance, stats);
  if (!i) return std::nullopt;
  return reduce::translate_witness_gi_to_hgi(*i, inst, red);
}

}  // namespace

std::optional<VertexBijection> hgi_decide(const HgiInstance& inst, HgiRoute route, SearchStats* stats) {
  if (inst.g.vertex_count() != inst.h.vertex_count() || inst.g.edge_count() != inst.h.edge_count()) {
    if (stats) ++stats->prunes_by_cardinality;
    return std::nullopt;
  }
  std::optional<VertexBijection> out;
  switch (route) {
    case HgiRoute::kIncidence: out = hgi_incidence(inst, stats); break;
    case HgiRoute::kItemset: out = hgi_itemset(inst, stats); break;
    case HgiRoute::kGadget: out = hgi_gadget(inst, stats); break;
  }
  if (out && !verify_hgi_witness(inst, *out))
    throw std::logic_error("hgi_decide produced a witness that does not verify");
  return out;
}

namespace {

void for_each_vertex_permutation(const HgiInstance& inst, std::size_t guard,
                                 const std::function<bool(const VertexBijection&)>& visit) {
  if (inst.g.vertex_count() != inst.h.vertex_count() || inst.g.edge_count() != inst.h.edge_count()) return;
  const std::size_t n = inst.g.vertex_count();
  if (n > guard) throw GuardExceeded("hgi brute force", n, guard);
  const auto target = inst.h.sorted_hyperedges();
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  std::vector<std::vector<VertexId>> image(inst.g.edge_count());
  do {
    for (std::size_t k = 0; k < inst.g.edge_count(); ++k) {
      auto& e = image[k];
      e.clear();
      for (auto x : inst.g.hyperedge(k)) e.push_back(perm[x]);
      std::sort(e.begin(), e.end());
    }
    auto sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == target && !visit(VertexBijection{Permutation(perm)})) return;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

std::optional<VertexBijection> hgi_decide_bruteforce(const HgiInstance& inst, std::size_t guard) {
  std::optional<VertexBijection> out;
  for_each_vertex_permutation(inst, guard, [&](const VertexBijection& i) {
    out = i;
    return false;
  });
  return out;
}

std::vector<VertexBijection> hgi_enumerate_bruteforce(const HgiInstance& inst, std::size_t guard) {
  std::vector<VertexBijection> out;
  for_each_vertex_permutation(inst, guard, [&](const VertexBijection& i) {
    out.push_back(i);
    return true;
  });
  return out;
}

}  // namespace isokit::solve
