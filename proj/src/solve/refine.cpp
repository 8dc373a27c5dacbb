#include "isokit/solve/refine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "isokit/errors.hpp"

namespace isokit::solve {

void SearchStats::merge(const SearchStats& other) {
  nodes_explored += other.nodes_explored;
  prunes_by_cardinality += other.prunes_by_cardinality;
  prunes_by_refinement += other.prunes_by_refinement;
  elapsed_seconds += other.elapsed_seconds;
}

std::string SearchStats::to_report() const {
  std::ostringstream out;
  out << "nodes_explored=" << nodes_explored << '\n'
      << "prunes_by_cardinality=" << prunes_by_cardinality << '\n'
      << "prunes_by_refinement=" << prunes_by_refinement << '\n'
      << "elapsed=" << elapsed_seconds << '\n';
  return out.str();
}

ColoredGraph ColoredGraph::from_graph(const Graph& g) {
  ColoredGraph cg;
  cg.adj = g.adjacency();
  cg.colors.assign(g.vertex_count(), 0);
  if (g.colors())
    for (std::size_t v = 0; v < g.vertex_count(); ++v) cg.colors[v] = (*g.colors())[v];
  cg.branch.assign(g.vertex_count(), true);
  return cg;
}

namespace {

// Disjoint union of the two sides; right-hand vertices are offset by left size.
class JointGraph {
 public:
  JointGraph(const ColoredGraph& a, const ColoredGraph& b) : a_(a), b_(b), offset_(a.size()) {
    adj_.reserve(a.size() + b.size());
    for (const auto& n : a.adj) adj_.push_back(n);
    for (const auto& n : b.adj) {
      std::vector<std::uint32_t> shifted(n.size());
      for (std::size_t i = 0; i < n.size(); ++i) shifted[i] = n[i] + static_cast<std::uint32_t>(offset_);
      adj_.push_back(std::move(shifted));
    }
  }

  std::size_t size() const { return adj_.size(); }
  std::size_t offset() const { return offset_; }
  const ColoredGraph& left() const { return a_; }
  const ColoredGraph& right() const { return b_; }

  std::vector<std::uint32_t> initial_colors() const {
    std::vector<std::uint64_t> raw;
    raw.reserve(size());
    raw.insert(raw.end(), a_.colors.begin(), a_.colors.end());
    raw.insert(raw.end(), b_.colors.begin(), b_.colors.end());
    std::vector<std::uint64_t> palette = raw;
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    std::vector<std::uint32_t> col(size());
    for (std::size_t v = 0; v < size(); ++v)
      col[v] = static_cast<std::uint32_t>(std::lower_bound(palette.begin(), palette.end(), raw[v]) - palette.begin());
    return col;
  }

  // Iterates (color, sorted neighbor colors) relabeling to a fixpoint.
  // Colors stay dense in [0, count); returns the count.
  std::size_t refine(std::vector<std::uint32_t>& col) const {
    const std::size_t n = size();
    std::size_t count = n == 0 ? 0 : *std::max_element(col.begin(), col.end()) + 1;
    std::vector<std::vector<std::uint32_t>> sig(n);
    std::vector<std::uint32_t> order(n);
    while (true) {
      for (std::size_t v = 0; v < n; ++v) {
        auto& s = sig[v];
        s.clear();
        s.reserve(adj_[v].size() + 1);
        for (auto w : adj_[v]) s.push_back(col[w]);
        std::sort(s.begin(), s.end());
        s.insert(s.begin(), col[v]);
      }
      std::iota(order.begin(), order.end(), 0U);
      std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) { return sig[x] < sig[y]; });
      std::uint32_t id = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++id;
        col[order[i]] = id;
      }
      std::size_t next = n == 0 ? 0 : id + 1;
      if (next == count) return count;
      count = next;
    }
  }

 private:
  const ColoredGraph& a_;
  const ColoredGraph& b_;
  std::size_t offset_;
  std::vector<std::vector<std::uint32_t>> adj_;
};

bool histograms_match(const std::vector<std::uint32_t>& col, std::size_t offset, std::size_t cells,
                      std::vector<std::int64_t>& scratch) {
  scratch.assign(cells, 0);
  for (std::size_t v = 0; v < col.size(); ++v) scratch[col[v]] += v < offset ? 1 : -1;
  return std::all_of(scratch.begin(), scratch.end(), [](std::int64_t c) { return c == 0; });
}

bool is_isomorphism(const ColoredGraph& a, const ColoredGraph& b, const std::vector<std::uint32_t>& map) {
  for (std::size_t u = 0; u < a.size(); ++u) {
    if (a.colors[u] != b.colors[map[u]]) return false;
    if (a.adj[u].size() != b.adj[map[u]].size()) return false;
    for (auto x : a.adj[u]) {
      const auto& nb = b.adj[map[u]];
      if (!std::binary_search(nb.begin(), nb.end(), map[x])) return false;
    }
  }
  return true;
}

class Search {
 public:
  Search(const JointGraph& joint, const std::function<bool(const Permutation&)>& visit, SearchStats* stats)
      : joint_(joint), visit_(visit), stats_(stats) {}

  // Returns false once the visitor asked to stop.
  bool run(std::vector<std::uint32_t> col) {
    if (stats_) ++stats_->nodes_explored;
    const std::size_t cells = joint_.refine(col);
    const std::size_t offset = joint_.offset();
    if (!histograms_match(col, offset, cells, scratch_)) {
      if (stats_) ++stats_->prunes_by_refinement;
      return true;
    }

    // Left-side cell sizes; pick the smallest non-singleton cell, preferring
    // cells that contain a branch vertex.
    std::vector<std::uint32_t> size(cells, 0);
    std::vector<bool> has_branch(cells, false);
    for (std::size_t v = 0; v < offset; ++v) {
      ++size[col[v]];
      if (joint_.left().branch[v]) has_branch[col[v]] = true;
    }
    std::size_t target = cells;
    for (std::size_t c = 0; c < cells; ++c) {
      if (size[c] < 2) continue;
      if (target == cells) {
        target = c;
        continue;
      }
      bool better_kind = has_branch[c] && !has_branch[target];
      bool same_kind = has_branch[c] == has_branch[target];
      if (better_kind || (same_kind && size[c] < size[target])) target = c;
    }

    if (target == cells) return leaf(col);

    std::uint32_t v = 0;
    bool found = false;
    for (std::size_t x = 0; x < offset; ++x) {
      if (col[x] != target) continue;
      if (!found || (joint_.left().branch[x] && !joint_.left().branch[v])) {
        v = static_cast<std::uint32_t>(x);
        found = true;
        if (joint_.left().branch[x]) break;
      }
    }
    const auto fresh = static_cast<std::uint32_t>(cells);
    for (std::size_t w = offset; w < col.size(); ++w) {
      if (col[w] != target) continue;
      auto next = col;
      next[v] = fresh;
      next[w] = fresh;
      if (!run(std::move(next))) return false;
    }
    return true;
  }

 private:
  bool leaf(const std::vector<std::uint32_t>& col) {
    const std::size_t offset = joint_.offset();
    std::vector<std::uint32_t> right_of(col.size(), 0);
    for (std::size_t w = offset; w < col.size(); ++w) right_of[col[w]] = static_cast<std::uint32_t>(w - offset);
    std::vector<std::uint32_t> map(offset);
    for (std::size_t v = 0; v < offset; ++v) map[v] = right_of[col[v]];
    if (!is_isomorphism(joint_.left(), joint_.right(), map)) return true;
    return visit_(Permutation(std::move(map)));
  }

  const JointGraph& joint_;
  const std::function<bool(const Permutation&)>& visit_;
  SearchStats* stats_;
  std::vector<std::int64_t> scratch_;
};

void check_shape(const ColoredGraph& g) {
  if (g.colors.size() != g.size() || g.branch.size() != g.size())
    throw StructuralError("colored graph: colors and branch flags must cover every vertex");
}

}  // namespace

RefinementPartition refine_jointly(const ColoredGraph& a, const ColoredGraph& b) {
  check_shape(a);
  check_shape(b);
  JointGraph joint(a, b);
  auto col = joint.initial_colors();
  RefinementPartition out;
  out.cell_count = joint.refine(col);
  std::vector<std::int64_t> scratch;
  out.compatible = a.size() == b.size() && histograms_match(col, joint.offset(), out.cell_count, scratch);
  out.left.assign(col.begin(), col.begin() + static_cast<std::ptrdiff_t>(a.size()));
  out.right.assign(col.begin() + static_cast<std::ptrdiff_t>(a.size()), col.end());
  return out;
}

void for_each_isomorphism(const ColoredGraph& a, const ColoredGraph& b,
                          const std::function<bool(const Permutation&)>& visit, SearchStats* stats) {
  check_shape(a);
  check_shape(b);
  if (a.size() != b.size()) {
    if (stats) ++stats->prunes_by_cardinality;
    return;
  }
  JointGraph joint(a, b);
  Search search(joint, visit, stats);
  search.run(joint.initial_colors());
}

std::optional<Permutation> find_isomorphism(const ColoredGraph& a, const ColoredGraph& b, SearchStats* stats) {
  std::optional<Permutation> found;
  for_each_isomorphism(
      a, b,
      [&](const Permutation& p) {
        found = p;
        return false;
      },
      stats);
  return found;
}

}  // namespace isokit::solve
