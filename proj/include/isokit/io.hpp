#ifndef ISOKIT_IO_HPP
#define ISOKIT_IO_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "isokit/types.hpp"

namespace isokit {

enum class ParseErrorKind {
  kMalformedHeader,
  kMalformedLine,
  kRowLength,
  kDuplicateRow,
  kOutOfRange,
  kCountMismatch,
  kInvalidStructure,
};

std::string_view to_string(ParseErrorKind kind);

// Line numbers are 1-based and refer to the raw text, comments included.
// Errors that concern the whole input (e.g. too few lines) report the last line.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);
  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

// Itemset (.is): "m n", then m distinct rows of n characters from {0,1}.
// When n is 0 the single possible row is empty and is not written.
Itemset parse_itemset(std::string_view text);
std::string serialize_itemset(const Itemset& s);

// Dataset (.ds): "k", then k itemset blocks separated by blank lines.
Dataset parse_dataset(std::string_view text);
std::string serialize_dataset(const Dataset& d);

// Graph (.gr): "p edge n m", then m lines "e u v" with 1-based vertices.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

// Hypergraph (.hg): "p hyper n m", then m lines "k v1 ... vk".
Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);

// Network (.net): "n L", then L lines "k i1 j1 ... ik jk" with 1-based channels.
ComparatorNetwork parse_network(std::string_view text);
std::string serialize_network(const ComparatorNetwork& net);

// Witness (.perm): one line with the 1-based images of 1..n.
Permutation parse_permutation(std::string_view text);
std::string serialize_permutation(const Permutation& p);

// Reads a whole file; throws std::runtime_error naming the path on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace isokit

#endif  // ISOKIT_IO_HPP
