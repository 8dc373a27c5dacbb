#ifndef ISOKIT_ERRORS_HPP
#define ISOKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isokit {

// Inputs that violate a type invariant or an operation precondition
// (size mismatches, mixed domains, out-of-range indices).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A brute-force oracle or enumerator refused because its size guard was hit.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what, std::size_t size, std::size_t limit)
      : std::runtime_error(what + ": size " + std::to_string(size) + " exceeds guard " +
                           std::to_string(limit)),
        size_(size),
        limit_(limit) {}
  std::size_t size() const { return size_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t size_;
  std::size_t limit_;
};

// A supplied witness does not certify the instance it was given for.
class InvalidWitness : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Witness back-translation through the graph-to-itemset reduction is not
// defined when distinct vertices collapsed onto one item.
class UnsupportedDegenerate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace isokit

#endif  // ISOKIT_ERRORS_HPP
