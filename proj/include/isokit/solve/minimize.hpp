#ifndef ISOKIT_SOLVE_MINIMIZE_HPP
#define ISOKIT_SOLVE_MINIMIZE_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "isokit/solve/itemset.hpp"
#include "isokit/types.hpp"

namespace isokit::solve {

struct MinimizeOptions {
  std::size_t jobs = 1;
  bool subset_prefilter = true;
  bool use_bruteforce = false;  // si_decide_bruteforce instead of si_decide
  std::size_t guard = kDefaultGuard;
};

enum class Fate {
  kRepresentative,    // first input of a retained class
  kIsomorphic,        // later input of a retained class
  kSubsumed,          // some retained representative ⪯ it
  kSubsetEliminated,  // plain subset of a smaller input, no relabeling needed
};

std::string_view to_string(Fate fate);

struct InputFate {
  Fate fate;
  // Retained classes: position of the class representative in the output.
  // Discarded inputs: position of a retained representative below them.
  std::size_t output_index;
};

struct MinimizeResult {
  Dataset retained;                      // canonical forms, Dataset order
  std::vector<std::size_t> first_source;  // per output entry: least input index of its class
  std::vector<InputFate> fates;          // per input
  SearchStats stats;
};

// Keeps one representative per ⪯-minimal isomorphism class. Inputs may come in
// any order; they are processed by ascending cardinality, and classes of equal
// cardinality are checked concurrently with `jobs` workers. Results do not
// depend on the worker count. Throws StructuralError on mixed domain sizes.
MinimizeResult minimize_itemsets(std::span<const Itemset> inputs, const MinimizeOptions& options = {});

// Fates are reported in the dataset's own order.
MinimizeResult dataset_minimize(const Dataset& d, const MinimizeOptions& options = {});

}  // namespace isokit::solve

#endif  // ISOKIT_SOLVE_MINIMIZE_HPP
