#include "isokit/sortnet.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "isokit/errors.hpp"

namespace isokit::sortnet {

namespace {

std::uint64_t apply_comparator(std::uint64_t x, std::uint32_t min_to, std::uint32_t max_to) {
  const std::uint64_t a = (x >> min_to) & 1U;
  const std::uint64_t b = (x >> max_to) & 1U;
  if (a > b) x ^= (std::uint64_t{1} << min_to) | (std::uint64_t{1} << max_to);
  return x;
}

std::uint64_t apply_layer(std::uint64_t x, const Layer& layer) {
  for (const auto& c : layer) x = apply_comparator(x, c.lo, c.hi);
  return x;
}

void check_cap(std::size_t channels, std::size_t cap) {
  if (channels > cap) throw GuardExceeded("network output enumeration", channels, cap);
  if (channels > 63) throw GuardExceeded("network output enumeration", channels, 63);
}

template <typename Step>
Itemset collect_outputs(std::size_t n, Step step) {
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) out.push_back(step(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<Item> items;
  items.reserve(out.size());
  for (auto w : out) items.push_back(Bits::from_word(n, w));
  return Itemset(Domain(n), std::move(items));
}

}  // namespace

std::uint64_t eval_word(const ComparatorNetwork& net, std::uint64_t x) {
  for (const auto& layer : net.layers()) x = apply_layer(x, layer);
  return x;
}

Bits eval(const ComparatorNetwork& net, const Bits& x) {
  if (x.size() != net.channels()) throw StructuralError("input length differs from channel count");
  Bits y = x;
  for (const auto& layer : net.layers()) {
    for (const auto& c : layer) {
      const bool a = y.test(c.lo);
      const bool b = y.test(c.hi);
      y.assign(c.lo, a && b);
      y.assign(c.hi, a || b);
    }
  }
  return y;
}

std::vector<std::int64_t> eval_values(const ComparatorNetwork& net, std::vector<std::int64_t> x) {
  if (x.size() != net.channels()) throw StructuralError("input length differs from channel count");
  for (const auto& layer : net.layers())
    for (const auto& c : layer)
      if (x[c.lo] > x[c.hi]) std::swap(x[c.lo], x[c.hi]);
  return x;
}

Itemset output_itemset(const ComparatorNetwork& net, std::size_t cap) {
  check_cap(net.channels(), cap);
  return collect_outputs(net.channels(), [&](std::uint64_t x) { return eval_word(net, x); });
}

bool sorts(const ComparatorNetwork& net, std::size_t cap) {
  return output_itemset(net, cap).size() == net.channels() + 1;
}

GeneralizedNetwork relabel(const ComparatorNetwork& net, const Permutation& pi) {
  if (pi.size() != net.channels()) throw StructuralError("relabeling size differs from channel count");
  GeneralizedNetwork out{net.channels(), {}};
  for (const auto& layer : net.layers()) {
    auto& l = out.layers.emplace_back();
    for (const auto& c : layer) l.push_back({pi(c.lo), pi(c.hi)});
  }
  return out;
}

Itemset output_itemset(const GeneralizedNetwork& net, std::size_t cap) {
  check_cap(net.channels, cap);
  return collect_outputs(net.channels, [&](std::uint64_t x) {
    for (const auto& layer : net.layers)
      for (const auto& c : layer) x = apply_comparator(x, c.min_to, c.max_to);
    return x;
  });
}

std::vector<Layer> matchings(std::size_t n) {
  std::vector<Layer> out;
  Layer current;
  std::vector<bool> used(n, false);
  // Comparators are added in increasing order so each matching appears once,
  // already sorted.
  std::function<void(std::size_t)> grow = [&](std::size_t first_lo) {
    out.push_back(current);
    for (std::size_t lo = first_lo; lo < n; ++lo) {
      if (used[lo]) continue;
      for (std::size_t hi = lo + 1; hi < n; ++hi) {
        if (used[hi]) continue;
        used[lo] = used[hi] = true;
        current.push_back({static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi)});
        grow(lo + 1);
        current.pop_back();
        used[lo] = used[hi] = false;
      }
    }
  };
  grow(0);
  std::stable_sort(out.begin(), out.end(), [](const Layer& a, const Layer& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<ComparatorNetwork> enumerate_prefixes(std::size_t n, std::size_t k, const PrefixGuard& guard) {
  if (n > guard.max_channels) throw GuardExceeded("prefix enumeration channels", n, guard.max_channels);
  if (k > guard.max_layers) throw GuardExceeded("prefix enumeration layers", k, guard.max_layers);
  const auto layers = matchings(n);
  std::vector<ComparatorNetwork> out;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<Layer> chosen;
    chosen.reserve(k);
    for (auto i : idx) chosen.push_back(layers[i]);
    out.emplace_back(n, std::move(chosen));
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] + 1 == layers.size()) idx[--pos] = 0;
    if (pos == 0) break;
    ++idx[pos - 1];
  }
  return out;
}

PruneResult prune_prefixes(std::span<const ComparatorNetwork> prefixes, const solve::MinimizeOptions& options) {
  if (!prefixes.empty())
    for (const auto& p : prefixes)
      if (p.channels() != prefixes.front().channels())
        throw StructuralError("prefixes must share one channel count");
  std::vector<Itemset> outputs;
  outputs.reserve(prefixes.size());
  for (const auto& p : prefixes) outputs.push_back(output_itemset(p));
  PruneResult result;
  result.minimized = solve::minimize_itemsets(outputs, options);
  for (auto src : result.minimized.first_source) {
    result.representatives.push_back(prefixes[src]);
    result.source_index.push_back(src);
  }
  return result;
}

namespace {

struct Node {
  ComparatorNetwork net;
  std::vector<std::uint64_t> outputs;  // sorted, distinct
};

struct WordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::size_t h = v.size();
    for (auto w : v) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

Itemset to_itemset(std::size_t n, const std::vector<std::uint64_t>& words) {
  std::vector<Item> items;
  items.reserve(words.size());
  for (auto w : words) items.push_back(Bits::from_word(n, w));
  return Itemset(Domain(n), std::move(items));
}

}  // namespace

DepthSearchResult depth_search(std::size_t n, std::size_t max_depth, const DepthSearchOptions& options) {
  if (n > options.max_channels) throw GuardExceeded("depth search channels", n, options.max_channels);
  DepthSearchResult result;
  if (n <= 1) {
    result.depth = 0;
    result.witness = ComparatorNetwork(n);
    return result;
  }
  std::vector<Layer> layers = matchings(n);
  layers.erase(layers.begin());  // the empty layer never helps

  std::vector<Node> frontier;
  {
    Node root{ComparatorNetwork(n), {}};
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) root.outputs.push_back(x);
    frontier.push_back(std::move(root));
  }

  for (std::size_t d = 1; d <= max_depth; ++d) {
    std::vector<Node> candidates;
    candidates.reserve(frontier.size() * layers.size());
    for (const auto& node : frontier) {
      for (const auto& layer : layers) {
        Node child{node.net.with_layer(layer), {}};
        child.outputs.reserve(node.outputs.size());
        for (auto x : node.outputs) child.outputs.push_back(apply_layer(x, layer));
        std::sort(child.outputs.begin(), child.outputs.end());
        child.outputs.erase(std::unique(child.outputs.begin(), child.outputs.end()), child.outputs.end());
        candidates.push_back(std::move(child));
      }
    }
    result.stats.nodes_explored += candidates.size();

    LevelReport level{d, candidates.size(), 0, 0};
    std::unordered_map<std::vector<std::uint64_t>, std::size_t, WordsHash> first_with;
    std::vector<std::size_t> distinct;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (first_with.try_emplace(candidates[i].outputs, i).second) distinct.push_back(i);
    level.distinct_outputs = distinct.size();

    for (const auto& c : candidates) {
      if (c.outputs.size() == n + 1) {
        result.depth = d;
        result.witness = c.net;
        result.levels.push_back(level);
        return result;
      }
    }
    if (d == max_depth) {
      result.levels.push_back(level);
      break;
    }

    std::vector<Node> next;
    if (options.prune) {
      std::vector<Itemset> outputs;
      outputs.reserve(distinct.size());
      for (auto i : distinct) outputs.push_back(to_itemset(n, candidates[i].outputs));
      solve::MinimizeOptions mopts;
      mopts.jobs = options.jobs;
      auto minimized = solve::minimize_itemsets(outputs, mopts);
      result.stats.merge(minimized.stats);
      // Representatives in generation order.
      std::vector<std::size_t> keep;
      for (auto src : minimized.first_source) keep.push_back(distinct[src]);
      std::sort(keep.begin(), keep.end());
      for (auto i : keep) next.push_back(std::move(candidates[i]));
    } else {
      next = std::move(candidates);
    }
    level.frontier = next.size();
    result.levels.push_back(level);
    frontier = std::move(next);
  }
  return result;
}

}  // namespace isokit::sortnet
