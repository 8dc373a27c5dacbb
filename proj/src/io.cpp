#include "isokit/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "isokit/errors.hpp"

namespace isokit {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedHeader: return "malformed header";
    case ParseErrorKind::kMalformedLine: return "malformed line";
    case ParseErrorKind::kRowLength: return "row length mismatch";
    case ParseErrorKind::kDuplicateRow: return "duplicate row";
    case ParseErrorKind::kOutOfRange: return "index out of range";
    case ParseErrorKind::kCountMismatch: return "count mismatch";
    case ParseErrorKind::kInvalidStructure: return "invalid structure";
  }
  return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + std::string(to_string(kind)) + ": " +
                         detail),
      kind_(kind),
      line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

// Splits into lines, dropping blank lines and comment lines. `dimacs_comments`
// additionally treats lines starting with "c" as comments.
class LineReader {
 public:
  LineReader(std::string_view text, bool dimacs_comments = false) {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      ++number;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      last_line_ = number;
      auto first = line.find_first_not_of(" \t");
      bool skip = first == std::string_view::npos || line[first] == '#' ||
                  (dimacs_comments && line[first] == 'c' &&
                   (line.size() == first + 1 || line[first + 1] == ' ' || line[first + 1] == '\t'));
      if (!skip) lines_.push_back({number, line.substr(first)});
      if (end == text.size() || end + 1 == text.size()) break;
      pos = end + 1;
    }
  }

  bool done() const { return next_ == lines_.size(); }
  const Line& next(const char* what) {
    if (done()) throw ParseError(ParseErrorKind::kCountMismatch, last_line_, std::string("missing ") + what);
    return lines_[next_++];
  }
  void expect_end() const {
    if (!done())
      throw ParseError(ParseErrorKind::kCountMismatch, lines_[next_].number, "unexpected trailing content");
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  std::size_t last_line_ = 0;
};

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    pos = line.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    std::size_t end = line.find_first_of(" \t", pos);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::optional<std::size_t> to_number(std::string_view tok) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

std::size_t number_at(const std::vector<std::string_view>& toks, std::size_t i, const Line& line,
                      ParseErrorKind kind) {
  auto v = to_number(toks[i]);
  if (!v) throw ParseError(kind, line.number, "expected a non-negative integer, got '" + std::string(toks[i]) + "'");
  return *v;
}

Itemset read_itemset_block(LineReader& reader) {
  const Line& header = reader.next("itemset header");
  auto toks = tokens(header.text);
  if (toks.size() != 2) throw ParseError(ParseErrorKind::kMalformedHeader, header.number, "expected 'm n'");
  std::size_t m = number_at(toks, 0, header, ParseErrorKind::kMalformedHeader);
  std::size_t n = number_at(toks, 1, header, ParseErrorKind::kMalformedHeader);
  if (n == 0) {
    if (m > 1)
      throw ParseError(ParseErrorKind::kMalformedHeader, header.number,
                       "an itemset over an empty domain holds at most one item");
    std::vector<Item> items(m, Item(0));
    return Itemset(Domain(0), std::move(items));
  }
  std::vector<Item> items;
  items.reserve(m);
  std::vector<std::pair<Item, std::size_t>> seen;
  for (std::size_t r = 0; r < m; ++r) {
    const Line& row = reader.next("itemset row");
    if (row.text.size() != n)
      throw ParseError(ParseErrorKind::kRowLength, row.number,
                       "row has " + std::to_string(row.text.size()) + " characters, expected " +
                           std::to_string(n));
    if (row.text.find_first_not_of("01") != std::string_view::npos)
      throw ParseError(ParseErrorKind::kMalformedLine, row.number, "rows may only contain '0' and '1'");
    items.push_back(Item::from_string(row.text));
    seen.emplace_back(items.back(), row.number);
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first)
      throw ParseError(ParseErrorKind::kDuplicateRow, std::max(seen[i].second, seen[i - 1].second),
                       "row " + seen[i].first.to_string() + " repeats line " +
                           std::to_string(std::min(seen[i].second, seen[i - 1].second)));
  }
  return Itemset(Domain(n), std::move(items));
}

void write_itemset_block(std::ostringstream& out, const Itemset& s) {
  out << s.size() << ' ' << s.domain_size() << '\n';
  if (s.domain_size() == 0) return;
  for (const auto& item : s.items()) out << item.to_string() << '\n';
}

}  // namespace

Itemset parse_itemset(std::string_view text) {
  LineReader reader(text);
  Itemset s = read_itemset_block(reader);
  reader.expect_end();
  return s;
}

std::string serialize_itemset(const Itemset& s) {
  std::ostringstream out;
  write_itemset_block(out, s);
  return out.str();
}

Dataset parse_dataset(std::string_view text) {
  LineReader reader(text);
  const Line& header = reader.next("dataset header");
  auto toks = tokens(header.text);
  if (toks.size() != 1) throw ParseError(ParseErrorKind::kMalformedHeader, header.number, "expected 'k'");
  std::size_t k = number_at(toks, 0, header, ParseErrorKind::kMalformedHeader);
  std::vector<Itemset> sets;
  std::size_t domain = 0;
  for (std::size_t i = 0; i < k; ++i) {
    Itemset s = read_itemset_block(reader);
    if (i == 0) domain = s.domain_size();
    if (s.domain_size() != domain)
      throw ParseError(ParseErrorKind::kInvalidStructure, header.number,
                       "itemset " + std::to_string(i + 1) + " uses a different domain size");
    sets.push_back(std::move(s));
  }
  reader.expect_end();
  return Dataset(std::move(sets));
}

std::string serialize_dataset(const Dataset& d) {
  std::ostringstream out;
  out << d.size() << '\n';
  for (const auto& s : d.itemsets()) {
    out << '\n';
    write_itemset_block(out, s);
  }
  return out.str();
}

Graph parse_graph(std::string_view text) {
  LineReader reader(text, /*dimacs_comments=*/true);
  const Line& header = reader.next("graph header");
  auto toks = tokens(header.text);
  if (toks.size() != 4 || toks[0] != "p" || toks[1] != "edge")
    throw ParseError(ParseErrorKind::kMalformedHeader, header.number, "expected 'p edge n m'");
  std::size_t n = number_at(toks, 2, header, ParseErrorKind::kMalformedHeader);
  std::size_t m = number_at(toks, 3, header, ParseErrorKind::kMalformedHeader);
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  for (std::size_t i = 0; i < m; ++i) {
    const Line& line = reader.next("edge line");
    auto et = tokens(line.text);
    if (et.size() != 3 || et[0] != "e")
      throw ParseError(ParseErrorKind::kMalformedLine, line.number, "expected 'e u v'");
    std::size_t u = number_at(et, 1, line, ParseErrorKind::kMalformedLine);
    std::size_t v = number_at(et, 2, line, ParseErrorKind::kMalformedLine);
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(ParseErrorKind::kOutOfRange, line.number,
                       "vertex id outside [1, " + std::to_string(n) + "]");
    if (u == v) throw ParseError(ParseErrorKind::kInvalidStructure, line.number, "self-loop");
    Edge e{static_cast<VertexId>(std::min(u, v) - 1), static_cast<VertexId>(std::max(u, v) - 1)};
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (edges[j] == e)
        throw ParseError(ParseErrorKind::kInvalidStructure, line.number,
                         "parallel edge, first given on line " + std::to_string(lines[j]));
    edges.push_back(e);
    lines.push_back(line.number);
  }
  reader.expect_end();
  return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Hypergraph parse_hypergraph(std::string_view text) {
  LineReader reader(text, /*dimacs_comments=*/true);
  const Line& header = reader.next("hypergraph header");
  auto toks = tokens(header.text);
  if (toks.size() != 4 || toks[0] != "p" || toks[1] != "hyper")
    throw ParseError(ParseErrorKind::kMalformedHeader, header.number, "expected 'p hyper n m'");
  std::size_t n = number_at(toks, 2, header, ParseErrorKind::kMalformedHeader);
  std::size_t m = number_at(toks, 3, header, ParseErrorKind::kMalformedHeader);
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t i = 0; i < m; ++i) {
    const Line& line = reader.next("hyperedge line");
    auto et = tokens(line.text);
    if (et.empty()) throw ParseError(ParseErrorKind::kMalformedLine, line.number, "expected 'k v1 ... vk'");
    std::size_t k = number_at(et, 0, line, ParseErrorKind::kMalformedLine);
    if (et.size() != k + 1)
      throw ParseError(ParseErrorKind::kMalformedLine, line.number,
                       "hyperedge declares " + std::to_string(k) + " vertices but lists " +
                           std::to_string(et.size() - 1));
    std::vector<VertexId> e;
    for (std::size_t j = 1; j <= k; ++j) {
      std::size_t v = number_at(et, j, line, ParseErrorKind::kMalformedLine);
      if (v < 1 || v > n)
        throw ParseError(ParseErrorKind::kOutOfRange, line.number,
                         "vertex id outside [1, " + std::to_string(n) + "]");
      e.push_back(static_cast<VertexId>(v - 1));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw ParseError(ParseErrorKind::kInvalidStructure, line.number, "hyperedge repeats a vertex");
    edges.push_back(std::move(e));
  }
  reader.expect_end();
  return Hypergraph(n, std::move(edges));
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << "p hyper " << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.hyperedges()) {
    out << e.size();
    for (auto v : e) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

ComparatorNetwork parse_network(std::string_view text) {
  LineReader reader(text);
  const Line& header = reader.next("network header");
  auto toks = tokens(header.text);
  if (toks.size() != 2) throw ParseError(ParseErrorKind::kMalformedHeader, header.number, "expected 'n L'");
  std::size_t n = number_at(toks, 0, header, ParseErrorKind::kMalformedHeader);
  std::size_t layers = number_at(toks, 1, header, ParseErrorKind::kMalformedHeader);
  ComparatorNetwork net(n);
  for (std::size_t l = 0; l < layers; ++l) {
    const Line& line = reader.next("layer line");
    auto lt = tokens(line.text);
    if (lt.empty()) throw ParseError(ParseErrorKind::kMalformedLine, line.number, "expected 'k i1 j1 ...'");
    std::size_t k = number_at(lt, 0, line, ParseErrorKind::kMalformedLine);
    if (lt.size() != 2 * k + 1)
      throw ParseError(ParseErrorKind::kMalformedLine, line.number,
                       "layer declares " + std::to_string(k) + " comparators but lists " +
                           std::to_string(lt.size() - 1) + " channel numbers");
    Layer layer;
    std::vector<bool> used(n, false);
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t i = number_at(lt, 1 + 2 * c, line, ParseErrorKind::kMalformedLine);
      std::size_t j = number_at(lt, 2 + 2 * c, line, ParseErrorKind::kMalformedLine);
      if (i < 1 || i > n || j < 1 || j > n)
        throw ParseError(ParseErrorKind::kOutOfRange, line.number,
                         "channel outside [1, " + std::to_string(n) + "]");
      if (i >= j) throw ParseError(ParseErrorKind::kInvalidStructure, line.number, "comparator needs i < j");
      if (used[i - 1] || used[j - 1])
        throw ParseError(ParseErrorKind::kInvalidStructure, line.number, "layer uses a channel twice");
      used[i - 1] = used[j - 1] = true;
      layer.push_back({static_cast<std::uint32_t>(i - 1), static_cast<std::uint32_t>(j - 1)});
    }
    net = net.with_layer(std::move(layer));
  }
  reader.expect_end();
  return net;
}

std::string serialize_network(const ComparatorNetwork& net) {
  std::ostringstream out;
  out << net.channels() << ' ' << net.depth() << '\n';
  for (const auto& layer : net.layers()) {
    out << layer.size();
    for (const auto& c : layer) out << ' ' << c.lo + 1 << ' ' << c.hi + 1;
    out << '\n';
  }
  return out.str();
}

Permutation parse_permutation(std::string_view text) {
  LineReader reader(text);
  if (reader.done()) return Permutation{};
  const Line& line = reader.next("permutation");
  reader.expect_end();
  auto toks = tokens(line.text);
  std::vector<std::uint32_t> map;
  std::vector<bool> seen(toks.size(), false);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    std::size_t v = number_at(toks, i, line, ParseErrorKind::kMalformedLine);
    if (v < 1 || v > toks.size())
      throw ParseError(ParseErrorKind::kOutOfRange, line.number,
                       "image " + std::to_string(v) + " outside [1, " + std::to_string(toks.size()) + "]");
    if (seen[v - 1])
      throw ParseError(ParseErrorKind::kInvalidStructure, line.number,
                       "image " + std::to_string(v) + " repeats; not a permutation");
    seen[v - 1] = true;
    map.push_back(static_cast<std::uint32_t>(v - 1));
  }
  return Permutation(std::move(map));
}

std::string serialize_permutation(const Permutation& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out << ' ';
    out << p(i) + 1;
  }
  out << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace isokit
