#ifndef ISOKIT_TESTS_FIXTURES_HPP
#define ISOKIT_TESTS_FIXTURES_HPP

namespace fixtures {

// Rows in item order: 1100, 1010, 1101.
inline constexpr const char* kFourColumnItemset =
    "3 4\n"
    "1100\n"
    "1010\n"
    "1101\n";

// Four-vertex graph relabeled by swapping vertices 1 and 4.
inline constexpr const char* kPaw =
    "p edge 4 4\n"
    "e 1 2\n"
    "e 1 3\n"
    "e 2 3\n"
    "e 3 4\n";

// Asymmetric pair: exactly one graph isomorphism, I = 2 4 6 1 5 3.
inline constexpr const char* kRigidG =
    "p edge 6 8\n"
    "e 1 4\ne 2 3\ne 2 4\ne 2 5\ne 2 6\ne 3 6\ne 4 5\ne 5 6\n";
inline constexpr const char* kRigidH =
    "p edge 6 8\n"
    "e 1 2\ne 1 4\ne 1 5\ne 3 4\ne 3 5\ne 3 6\ne 4 5\ne 4 6\n";

// Exactly two graph isomorphisms: 3 4 2 5 6 1 and 3 4 6 5 2 1.
inline constexpr const char* kTwinG =
    "p edge 6 6\n"
    "e 1 4\ne 1 6\ne 2 4\ne 3 4\ne 3 5\ne 4 5\n";
inline constexpr const char* kTwinH =
    "p edge 6 6\n"
    "e 1 3\ne 2 5\ne 2 6\ne 3 5\ne 4 5\ne 5 6\n";

// Itemsets with a unique isomorphism J = 4 1 2 3; columns of S have 2, 1,
// 2 and 3 ones.
inline constexpr const char* kUniqueS =
    "4 4\n"
    "1000\n0010\n1001\n0111\n";
inline constexpr const char* kUniqueT =
    "4 4\n"
    "0100\n1110\n0001\n0011\n";

// Columns 2 and 3 of S coincide: two itemset isomorphisms (2 3 4 1 and
// 2 4 3 1) but a single hypergraph isomorphism (1 3 2 4).
inline constexpr const char* kDuplicateColumnS =
    "4 4\n"
    "0000\n0110\n0001\n0111\n";
inline constexpr const char* kDuplicateColumnT =
    "4 4\n"
    "0000\n1000\n0011\n1011\n";

}  // namespace fixtures

#endif  // ISOKIT_TESTS_FIXTURES_HPP
