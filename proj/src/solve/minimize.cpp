#include "isokit/solve/minimize.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <optional>
#include <thread>
#include <unordered_map>

#include "isokit/errors.hpp"

namespace isokit::solve {

std::string_view to_string(Fate fate) {
  switch (fate) {
    case Fate::kRepresentative: return "representative";
    case Fate::kIsomorphic: return "isomorphic";
    case Fate::kSubsumed: return "subsumed";
    case Fate::kSubsetEliminated: return "subset-eliminated";
  }
  return "?";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct IsoClass {
  Itemset canon;
  std::vector<std::size_t> members;  // input indices, ascending
  bool retained = false;
  bool by_subset = false;
  std::size_t subsumer = kNone;  // class index, resolved to a retained class
};

struct CheckResult {
  std::size_t subsumer = kNone;
  bool by_subset = false;
  SearchStats stats;
};

// Runs body(i) for i in [0, count) on up to `jobs` threads.
template <typename Body>
void parallel_for(std::size_t count, std::size_t jobs, Body body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

MinimizeResult minimize_itemsets(std::span<const Itemset> inputs, const MinimizeOptions& options) {
  MinimizeResult result;
  result.fates.resize(inputs.size());
  if (inputs.empty()) return result;
  for (const auto& s : inputs)
    if (s.domain_size() != inputs.front().domain_size())
      throw StructuralError("dataset itemsets must share one domain");

  std::vector<Itemset> canon(inputs.size());
  parallel_for(inputs.size(), options.jobs, [&](std::size_t i) { canon[i] = canonical_form(inputs[i]).matrix; });

  std::vector<IsoClass> classes;
  std::vector<std::size_t> class_of(inputs.size());
  std::unordered_map<Itemset, std::size_t, ItemsetHash> lookup;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    auto [it, fresh] = lookup.try_emplace(canon[i], classes.size());
    if (fresh) classes.push_back(IsoClass{canon[i], {}});
    classes[it->second].members.push_back(i);
    class_of[i] = it->second;
  }

  // Ascending cardinality, ties by canonical matrix; this is also the output order.
  std::vector<std::size_t> order(classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = classes[a].canon;
    const auto& y = classes[b].canon;
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });

  std::vector<std::size_t> retained;  // class indices in commit order
  for (std::size_t lo = 0; lo < order.size();) {
    const std::size_t card = classes[order[lo]].canon.size();
    std::size_t hi = lo;
    while (hi < order.size() && classes[order[hi]].canon.size() == card) ++hi;

    std::vector<CheckResult> checks(hi - lo);
    parallel_for(hi - lo, options.jobs, [&](std::size_t k) {
      const IsoClass& c = classes[order[lo + k]];
      CheckResult& out = checks[k];
      if (options.subset_prefilter) {
        for (std::size_t m : c.members) {
          for (std::size_t i = 0; i < inputs.size() && out.subsumer == kNone; ++i) {
            if (inputs[i].size() < card && inputs[i].is_subset_of(inputs[m])) {
              out.subsumer = class_of[i];
              out.by_subset = true;
            }
          }
          if (out.subsumer != kNone) return;
        }
      }
      for (std::size_t r : retained) {
        const IiInstance inst{classes[r].canon, c.canon};
        const bool below = options.use_bruteforce ? si_decide_bruteforce(inst, options.guard).has_value()
                                                  : si_decide(inst, &out.stats).has_value();
        if (below) {
          out.subsumer = r;
          return;
        }
      }
    });

    for (std::size_t k = 0; k < checks.size(); ++k) {
      IsoClass& c = classes[order[lo + k]];
      result.stats.merge(checks[k].stats);
      if (checks[k].subsumer == kNone) {
        c.retained = true;
        retained.push_back(order[lo + k]);
        continue;
      }
      std::size_t s = checks[k].subsumer;
      if (!classes[s].retained) s = classes[s].subsumer;
      c.subsumer = s;
      c.by_subset = checks[k].by_subset;
    }
    lo = hi;
  }

  std::vector<std::size_t> output_index(classes.size(), kNone);
  std::vector<Itemset> kept;
  for (std::size_t c : order) {
    if (!classes[c].retained) continue;
    output_index[c] = kept.size();
    kept.push_back(classes[c].canon);
    result.first_source.push_back(classes[c].members.front());
  }
  result.retained = Dataset(std::move(kept));

  for (const auto& c : classes) {
    for (std::size_t m : c.members) {
      if (c.retained)
        result.fates[m] = {m == c.members.front() ? Fate::kRepresentative : Fate::kIsomorphic, output_index[&c - classes.data()]};
      else
        result.fates[m] = {c.by_subset ? Fate::kSubsetEliminated : Fate::kSubsumed, output_index[c.subsumer]};
    }
  }
  return result;
}

MinimizeResult dataset_minimize(const Dataset& d, const MinimizeOptions& options) {
  return minimize_itemsets(d.itemsets(), options);
}

}  // namespace isokit::solve
