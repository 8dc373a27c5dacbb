#ifndef ISOKIT_SOLVE_ITEMSET_HPP
#define ISOKIT_SOLVE_ITEMSET_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "isokit/instances.hpp"
#include "isokit/solve/refine.hpp"
#include "isokit/types.hpp"

namespace isokit::solve {

// Default size limit for the factorial brute-force oracles. 9! is about
// 3.6e5 permutations.
inline constexpr std::size_t kDefaultGuard = 9;

// Itemset isomorphism: some J with J(S) = T. Rejects early on sizes, the
// item-cardinality multiset and refinement cell counts, then branches over
// column assignments within refinement cells. Any witness returned verifies.
std::optional<DomainBijection> ii_decide(const IiInstance& inst, SearchStats* stats = nullptr);

// Every J with J(S) = T, in search order.
std::vector<DomainBijection> ii_enumerate(const IiInstance& inst, SearchStats* stats = nullptr);

// Tries all n! bijections in lexicographic order. Throws GuardExceeded when
// the domain is larger than `guard`.
std::optional<DomainBijection> ii_decide_bruteforce(const IiInstance& inst, std::size_t guard = kDefaultGuard);
std::vector<DomainBijection> ii_enumerate_bruteforce(const IiInstance& inst, std::size_t guard = kDefaultGuard);

// J(S) = T. A witness of the wrong size is simply rejected.
bool verify_ii_witness(const IiInstance& inst, const DomainBijection& j);

// Lexicographically least matrix over all column permutations. Rows are kept
// in Itemset order and the matrix is compared column by column starting
// from the most significant column (d_n), which makes each column choice
// depend only on the columns fixed before it.
struct CanonicalForm {
  Itemset matrix;
  DomainBijection cert_perm;  // apply_bijection_itemset(s, cert_perm) == matrix
};

CanonicalForm canonical_form(const Itemset& s);

// Subitemset isomorphism S ⪯ T: some J with J(S) ⊆ T. Both itemsets must
// share a domain size (StructuralError otherwise). Items of S are matched to
// items of T of equal cardinality, most constrained first, while the set of
// admissible images of every column shrinks; a column matching closes the
// search.
std::optional<DomainBijection> si_decide(const IiInstance& inst, SearchStats* stats = nullptr);
std::optional<DomainBijection> si_decide_bruteforce(const IiInstance& inst, std::size_t guard = kDefaultGuard);

// J(S) ⊆ T.
bool verify_si_witness(const IiInstance& inst, const DomainBijection& j);

}  // namespace isokit::solve

#endif  // ISOKIT_SOLVE_ITEMSET_HPP
