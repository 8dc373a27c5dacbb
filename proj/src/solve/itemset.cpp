#include "isokit/solve/itemset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "isokit/errors.hpp"
#include "isokit/permute.hpp"

namespace isokit::solve {

namespace {

// Incidence graph: columns 0..n-1 (branch vertices), then one vertex per item.
ColoredGraph incidence_graph(const Itemset& s) {
  const std::size_t n = s.domain_size();
  ColoredGraph g;
  g.adj.resize(n + s.size());
  g.colors.assign(n + s.size(), 1);
  g.branch.assign(n + s.size(), false);
  for (std::size_t c = 0; c < n; ++c) {
    g.colors[c] = 0;
    g.branch[c] = true;
  }
  for (std::size_t r = 0; r < s.size(); ++r) {
    const auto row = static_cast<std::uint32_t>(n + r);
    const Item& item = s[r];
    for (std::size_t c = item.find_first(); c != Bits::npos; c = item.find_next(c)) {
      g.adj[row].push_back(static_cast<std::uint32_t>(c));
      g.adj[c].push_back(row);
    }
  }
  return g;
}

bool ii_quick_reject(const IiInstance& inst, SearchStats* stats) {
  const bool reject = inst.s.domain_size() != inst.t.domain_size() || inst.s.size() != inst.t.size() ||
                      item_cardinality_multiset(inst.s) != item_cardinality_multiset(inst.t);
  if (reject && stats) ++stats->prunes_by_cardinality;
  return reject;
}

DomainBijection columns_of(const Permutation& incidence_map, std::size_t n) {
  std::vector<std::uint32_t> map(incidence_map.map().begin(), incidence_map.map().begin() + static_cast<std::ptrdiff_t>(n));
  return DomainBijection{Permutation(std::move(map))};
}

void check_guard(const char* what, std::size_t size, std::size_t guard) {
  if (size > guard) throw GuardExceeded(what, size, guard);
}

// Single-word view of an itemset; only valid for domains of at most 64.
std::vector<std::uint64_t> words_of(const Itemset& s) {
  std::vector<std::uint64_t> out;
  out.reserve(s.size());
  for (const auto& item : s.items()) out.push_back(item.word_count() ? item.word(0) : 0);
  return out;
}

std::uint64_t map_word(std::uint64_t x, const std::vector<std::uint32_t>& perm) {
  std::uint64_t y = 0;
  while (x) {
    const int b = std::countr_zero(x);
    x &= x - 1;
    y |= std::uint64_t{1} << perm[static_cast<std::size_t>(b)];
  }
  return y;
}

// Runs `accept` on every permutation of [0, n) in lexicographic order until
// it returns false.
void for_each_permutation(std::size_t n, const std::function<bool(const std::vector<std::uint32_t>&)>& accept) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  do {
    if (!accept(perm)) return;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// Tests J(S) == T (equal) or J(S) ⊆ T (subset) for one candidate J.
class PermutationTester {
 public:
  PermutationTester(const IiInstance& inst, bool subset)
      : inst_(inst), subset_(subset), fast_(inst.s.domain_size() <= 64) {
    if (fast_) {
      s_ = words_of(inst.s);
      t_ = words_of(inst.t);
      image_.resize(s_.size());
    }
  }

  bool operator()(const std::vector<std::uint32_t>& perm) {
    if (!fast_) {
      DomainBijection j{Permutation(perm)};
      return subset_ ? verify_si_witness(inst_, j) : verify_ii_witness(inst_, j);
    }
    if (subset_) {
      for (auto x : s_)
        if (!std::binary_search(t_.begin(), t_.end(), map_word(x, perm))) return false;
      return true;
    }
    for (std::size_t i = 0; i < s_.size(); ++i) image_[i] = map_word(s_[i], perm);
    std::sort(image_.begin(), image_.end());
    return image_ == t_;
  }

 private:
  const IiInstance& inst_;
  bool subset_;
  bool fast_;
  std::vector<std::uint64_t> s_, t_, image_;
};

}  // namespace

std::optional<DomainBijection> ii_decide(const IiInstance& inst, SearchStats* stats) {
  if (ii_quick_reject(inst, stats)) return std::nullopt;
  const std::size_t n = inst.s.domain_size();
  auto found = find_isomorphism(incidence_graph(inst.s), incidence_graph(inst.t), stats);
  if (!found) return std::nullopt;
  DomainBijection j = columns_of(*found, n);
  if (!verify_ii_witness(inst, j)) throw std::logic_error("ii_decide produced a witness that does not verify");
  return j;
}

std::vector<DomainBijection> ii_enumerate(const IiInstance& inst, SearchStats* stats) {
  std::vector<DomainBijection> out;
  if (ii_quick_reject(inst, stats)) return out;
  const std::size_t n = inst.s.domain_size();
  for_each_isomorphism(
      incidence_graph(inst.s), incidence_graph(inst.t),
      [&](const Permutation& p) {
        out.push_back(columns_of(p, n));
        return true;
      },
      stats);
  return out;
}

std::optional<DomainBijection> ii_decide_bruteforce(const IiInstance& inst, std::size_t guard) {
  if (inst.s.domain_size() != inst.t.domain_size() || inst.s.size() != inst.t.size()) return std::nullopt;
  check_guard("ii brute force", inst.s.domain_size(), guard);
  std::optional<DomainBijection> found;
  PermutationTester test(inst, /*subset=*/false);
  for_each_permutation(inst.s.domain_size(), [&](const std::vector<std::uint32_t>& perm) {
    if (!test(perm)) return true;
    found = DomainBijection{Permutation(perm)};
    return false;
  });
  return found;
}

std::vector<DomainBijection> ii_enumerate_bruteforce(const IiInstance& inst, std::size_t guard) {
  std::vector<DomainBijection> out;
  if (inst.s.domain_size() != inst.t.domain_size() || inst.s.size() != inst.t.size()) return out;
  check_guard("ii brute force", inst.s.domain_size(), guard);
  PermutationTester test(inst, /*subset=*/false);
  for_each_permutation(inst.s.domain_size(), [&](const std::vector<std::uint32_t>& perm) {
    if (test(perm)) out.push_back(DomainBijection{Permutation(perm)});
    return true;
  });
  return out;
}

bool verify_ii_witness(const IiInstance& inst, const DomainBijection& j) {
  if (inst.s.domain_size() != inst.t.domain_size() || j.map.size() != inst.s.domain_size()) return false;
  if (inst.s.size() != inst.t.size()) return false;
  return apply_bijection_itemset(inst.s, j) == inst.t;
}

bool verify_si_witness(const IiInstance& inst, const DomainBijection& j) {
  if (inst.s.domain_size() != inst.t.domain_size() || j.map.size() != inst.s.domain_size()) return false;
  for (const auto& item : inst.s.items())
    if (!inst.t.contains(apply_bijection_item(item, j))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

struct CanonState {
  Bits remaining;                    // unassigned original columns
  std::vector<std::uint32_t> group;  // row -> rank of its assigned prefix
  std::vector<std::uint32_t> placed; // placed[k] = column put at position n-1-k
};

}  // namespace

CanonicalForm canonical_form(const Itemset& s) {
  const std::size_t n = s.domain_size();
  const std::size_t m = s.size();
  if (n == 0 || m == 0) return {s, DomainBijection{Permutation::identity(n)}};

  std::vector<Bits> cols(n);
  for (std::size_t c = 0; c < n; ++c) cols[c] = s.column(c);

  Bits all(n);
  all.set_all();
  std::vector<CanonState> frontier{{all, std::vector<std::uint32_t>(m, 0), {}}};
  std::vector<std::uint32_t> key, best;

  for (std::size_t step = 0; step < n; ++step) {
    std::vector<std::pair<std::size_t, std::uint32_t>> winners;  // (state, column)
    bool have_best = false;
    for (std::size_t si = 0; si < frontier.size(); ++si) {
      const CanonState& st = frontier[si];
      const std::size_t groups = *std::max_element(st.group.begin(), st.group.end()) + 1;
      for (std::size_t c = st.remaining.find_first(); c != Bits::npos; c = st.remaining.find_next(c)) {
        // Identical remaining columns lead to identical futures.
        bool twin = false;
        for (std::size_t d = st.remaining.find_first(); d < c; d = st.remaining.find_next(d))
          if (cols[d] == cols[c]) {
            twin = true;
            break;
          }
        if (twin) continue;
        key.assign(groups, 0);
        for (std::size_t r = cols[c].find_first(); r != Bits::npos; r = cols[c].find_next(r)) ++key[st.group[r]];
        if (!have_best || key < best) {
          best = key;
          have_best = true;
          winners.clear();
        }
        if (key == best) winners.emplace_back(si, static_cast<std::uint32_t>(c));
      }
    }

    std::set<std::pair<Bits, std::vector<std::uint32_t>>> seen;
    std::vector<CanonState> next;
    for (auto [si, c] : winners) {
      const CanonState& st = frontier[si];
      CanonState ns;
      ns.remaining = st.remaining;
      ns.remaining.reset(c);
      std::vector<std::uint32_t> raw(m);
      for (std::size_t r = 0; r < m; ++r) raw[r] = 2 * st.group[r] + (cols[c].test(r) ? 1U : 0U);
      std::vector<std::uint32_t> ranks = raw;
      std::sort(ranks.begin(), ranks.end());
      ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
      ns.group.resize(m);
      for (std::size_t r = 0; r < m; ++r)
        ns.group[r] = static_cast<std::uint32_t>(std::lower_bound(ranks.begin(), ranks.end(), raw[r]) - ranks.begin());
      if (!seen.emplace(ns.remaining, ns.group).second) continue;
      ns.placed = st.placed;
      ns.placed.push_back(c);
      next.push_back(std::move(ns));
    }
    frontier = std::move(next);
  }

  const auto& placed = frontier.front().placed;
  std::vector<std::uint32_t> map(n);
  for (std::size_t k = 0; k < n; ++k) map[placed[k]] = static_cast<std::uint32_t>(n - 1 - k);
  DomainBijection cert{Permutation(std::move(map))};
  return {apply_bijection_itemset(s, cert), cert};
}

// ---------------------------------------------------------------------------
// Subitemset isomorphism

namespace {

// Kuhn's augmenting-path matching of columns onto admissible image columns.
class ColumnMatcher {
 public:
  explicit ColumnMatcher(const std::vector<Bits>& allowed) : allowed_(allowed), n_(allowed.size()) {}

  std::optional<std::vector<std::uint32_t>> solve() {
    match_of_target_.assign(n_, kNone);
    for (std::size_t c = 0; c < n_; ++c) {
      visited_.assign(n_, false);
      if (!augment(c)) return std::nullopt;
    }
    std::vector<std::uint32_t> map(n_);
    for (std::size_t t = 0; t < n_; ++t) map[match_of_target_[t]] = static_cast<std::uint32_t>(t);
    return map;
  }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  bool augment(std::size_t c) {
    const Bits& a = allowed_[c];
    for (std::size_t t = a.find_first(); t != Bits::npos; t = a.find_next(t)) {
      if (visited_[t]) continue;
      visited_[t] = true;
      if (match_of_target_[t] == kNone || augment(match_of_target_[t])) {
        match_of_target_[t] = static_cast<std::uint32_t>(c);
        return true;
      }
    }
    return false;
  }

  const std::vector<Bits>& allowed_;
  std::size_t n_;
  std::vector<std::uint32_t> match_of_target_;
  std::vector<bool> visited_;
};

class SubsetSearch {
 public:
  SubsetSearch(const IiInstance& inst, SearchStats* stats) : s_(inst.s), t_(inst.t), stats_(stats) {
    const std::size_t n = s_.domain_size();
    Bits full(n);
    full.set_all();
    allowed_.assign(n, full);
    complement_.reserve(t_.size());
    for (const auto& item : t_.items()) complement_.push_back(item.complement());
    candidates_.resize(s_.size());
    for (std::size_t i = 0; i < s_.size(); ++i) {
      const std::size_t k = s_[i].count();
      for (std::size_t j = 0; j < t_.size(); ++j)
        if (t_[j].count() == k) candidates_[i].push_back(static_cast<std::uint32_t>(j));
    }
    assigned_.assign(s_.size(), false);
    used_.assign(t_.size(), false);
  }

  std::optional<DomainBijection> run() {
    if (!search(0)) return std::nullopt;
    return DomainBijection{Permutation(std::move(result_))};
  }

 private:
  // Could item i of S still map onto item j of T under the current column
  // restrictions?
  bool compatible(std::size_t i, std::size_t j) const {
    const Item& a = s_[i];
    for (std::size_t c = 0; c < allowed_.size(); ++c) {
      const Bits& target = a.test(c) ? t_[j] : complement_[j];
      if (!allowed_[c].intersects(target)) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (stats_) ++stats_->nodes_explored;
    if (depth == s_.size()) {
      auto map = ColumnMatcher(allowed_).solve();
      if (!map) return false;
      result_ = std::move(*map);
      return true;
    }
    // Most constrained unassigned item of S.
    std::size_t pick = s_.size();
    std::vector<std::uint32_t> options, best_options;
    for (std::size_t i = 0; i < s_.size(); ++i) {
      if (assigned_[i]) continue;
      options.clear();
      for (auto j : candidates_[i])
        if (!used_[j] && compatible(i, j)) options.push_back(j);
      if (pick == s_.size() || options.size() < best_options.size()) {
        pick = i;
        best_options = options;
        if (best_options.empty()) break;
      }
    }
    if (best_options.empty()) {
      if (stats_) ++stats_->prunes_by_refinement;
      return false;
    }
    const Item& a = s_[pick];
    assigned_[pick] = true;
    for (auto j : best_options) {
      std::vector<Bits> saved = allowed_;
      bool dead = false;
      for (std::size_t c = 0; c < allowed_.size() && !dead; ++c) {
        allowed_[c] &= a.test(c) ? t_[j] : complement_[j];
        dead = allowed_[c].none();
      }
      if (!dead && ColumnMatcher(allowed_).solve()) {
        used_[j] = true;
        if (search(depth + 1)) return true;
        used_[j] = false;
      } else if (stats_) {
        ++stats_->prunes_by_refinement;
      }
      allowed_ = std::move(saved);
    }
    assigned_[pick] = false;
    return false;
  }

  const Itemset& s_;
  const Itemset& t_;
  SearchStats* stats_;
  std::vector<Bits> allowed_;
  std::vector<Bits> complement_;
  std::vector<std::vector<std::uint32_t>> candidates_;
  std::vector<bool> assigned_;
  std::vector<bool> used_;
  std::vector<std::uint32_t> result_;
};

}  // namespace

std::optional<DomainBijection> si_decide(const IiInstance& inst, SearchStats* stats) {
  if (inst.s.domain_size() != inst.t.domain_size())
    throw StructuralError("subitemset isomorphism needs itemsets over one domain size");
  if (inst.s.size() > inst.t.size()) {
    if (stats) ++stats->prunes_by_cardinality;
    return std::nullopt;
  }
  const auto hs = item_cardinality_histogram(inst.s);
  const auto ht = item_cardinality_histogram(inst.t);
  for (std::size_t k = 0; k < hs.size(); ++k) {
    if (hs[k] > ht[k]) {
      if (stats) ++stats->prunes_by_cardinality;
      return std::nullopt;
    }
  }
  if (inst.s.empty()) return DomainBijection{Permutation::identity(inst.s.domain_size())};
  auto j = SubsetSearch(inst, stats).run();
  if (j && !verify_si_witness(inst, *j)) throw std::logic_error("si_decide produced a witness that does not verify");
  return j;
}

std::optional<DomainBijection> si_decide_bruteforce(const IiInstance& inst, std::size_t guard) {
  if (inst.s.domain_size() != inst.t.domain_size())
    throw StructuralError("subitemset isomorphism needs itemsets over one domain size");
  if (inst.s.size() > inst.t.size()) return std::nullopt;
  check_guard("si brute force", inst.s.domain_size(), guard);
  std::optional<DomainBijection> found;
  PermutationTester test(inst, /*subset=*/true);
  for_each_permutation(inst.s.domain_size(), [&](const std::vector<std::uint32_t>& perm) {
    if (!test(perm)) return true;
    found = DomainBijection{Permutation(perm)};
    return false;
  });
  return found;
}

}  // namespace isokit::solve
