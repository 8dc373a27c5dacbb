#include "isokit/reduce.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "isokit/errors.hpp"
#include "isokit/io.hpp"
#include "isokit/permute.hpp"
#include "isokit/solve/graph.hpp"
#include "isokit/solve/itemset.hpp"

namespace isokit::reduce {

namespace {

Edge normalized(VertexId u, VertexId v) { return u < v ? Edge{u, v} : Edge{v, u}; }

std::vector<VertexId> mapped_sorted(const std::vector<VertexId>& edge, const Permutation& p) {
  std::vector<VertexId> out;
  out.reserve(edge.size());
  for (auto v : edge) out.push_back(p(v));
  std::sort(out.begin(), out.end());
  return out;
}

// For each hyperedge of `from`, the first unused hyperedge of `to` equal to
// its image under p; nullopt if some image is missing.
std::optional<std::vector<std::uint32_t>> match_hyperedges(const Hypergraph& from, const Hypergraph& to,
                                                           const Permutation& p) {
  if (from.edge_count() != to.edge_count()) return std::nullopt;
  std::vector<bool> used(to.edge_count(), false);
  std::vector<std::uint32_t> match(from.edge_count());
  for (std::size_t k = 0; k < from.edge_count(); ++k) {
    auto image = mapped_sorted(from.hyperedge(k), p);
    bool found = false;
    for (std::size_t l = 0; l < to.edge_count() && !found; ++l) {
      if (used[l] || to.hyperedge(l) != image) continue;
      used[l] = true;
      match[k] = static_cast<std::uint32_t>(l);
      found = true;
    }
    if (!found) return std::nullopt;
  }
  return match;
}

}  // namespace

EdgeIndex::EdgeIndex(const Graph& g) : edges_(g.edges().begin(), g.edges().end()) {}

std::optional<std::size_t> EdgeIndex::position(Edge e) const {
  e = normalized(e.first, e.second);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Item vertex_item(const Graph& /*g*/, const EdgeIndex& index, VertexId u) {
  Item item(index.size());
  for (std::size_t k = 0; k < index.size(); ++k) {
    const auto [a, b] = index.edge(k);
    if (a == u || b == u) item.set(k);
  }
  return item;
}

namespace {

Itemset graph_itemset(const Graph& g, const EdgeIndex& index) {
  std::vector<Item> items(g.vertex_count(), Item(index.size()));
  for (std::size_t k = 0; k < index.size(); ++k) {
    items[index.edge(k).first].set(k);
    items[index.edge(k).second].set(k);
  }
  return Itemset(Domain(index.size()), std::move(items), Duplicates::kMerge);
}

}  // namespace

GiToIi gi_to_ii(const GiInstance& inst) {
  GiToIi out;
  out.left = EdgeIndex(inst.g);
  out.right = EdgeIndex(inst.h);
  out.instance.s = graph_itemset(inst.g, out.left);
  out.instance.t = graph_itemset(inst.h, out.right);
  return out;
}

DomainBijection translate_witness_gi_to_ii(const VertexBijection& i, const GiInstance& inst, const GiToIi& red) {
  if (i.map.size() != inst.g.vertex_count() || inst.g.vertex_count() != inst.h.vertex_count())
    throw InvalidWitness("vertex bijection does not match the graph orders");
  if (red.left.size() != red.right.size())
    throw InvalidWitness("graphs have different edge counts; no edge bijection exists");
  std::vector<std::uint32_t> map(red.left.size());
  for (std::size_t k = 0; k < red.left.size(); ++k) {
    const auto [v, w] = red.left.edge(k);
    auto pos = red.right.position(normalized(i.map(v), i.map(w)));
    if (!pos)
      throw InvalidWitness("edge (" + std::to_string(v + 1) + "," + std::to_string(w + 1) +
                           ") is sent to a non-edge");
    map[k] = static_cast<std::uint32_t>(*pos);
  }
  DomainBijection j{Permutation(std::move(map))};
  if (!solve::verify_ii_witness(red.instance, j)) throw InvalidWitness("translated witness does not verify");
  return j;
}

VertexBijection translate_witness_ii_to_gi(const DomainBijection& j, const GiInstance& inst, const GiToIi& red) {
  if (red.instance.s.size() < inst.g.vertex_count() || red.instance.t.size() < inst.h.vertex_count())
    throw UnsupportedDegenerate("distinct vertices share an item; translate by solving the graphs directly");
  if (inst.g.vertex_count() != inst.h.vertex_count() || j.map.size() != red.left.size() ||
      red.left.size() != red.right.size())
    throw InvalidWitness("domain bijection does not match the reduced instance");
  std::map<Item, VertexId> owner;
  for (VertexId h = 0; h < inst.h.vertex_count(); ++h) owner.emplace(vertex_item(inst.h, red.right, h), h);
  std::vector<std::uint32_t> sigma(inst.g.vertex_count());
  std::vector<bool> hit(inst.h.vertex_count(), false);
  for (VertexId g = 0; g < inst.g.vertex_count(); ++g) {
    auto it = owner.find(apply_bijection_item(vertex_item(inst.g, red.left, g), j));
    if (it == owner.end() || hit[it->second])
      throw InvalidWitness("J(S_" + std::to_string(g + 1) + ") is not an item of T");
    hit[it->second] = true;
    sigma[g] = it->second;
  }
  VertexBijection out{Permutation(std::move(sigma))};
  if (!solve::verify_gi_witness(inst, out)) throw InvalidWitness("translated witness does not verify");
  return out;
}

Hypergraph itemset_to_hypergraph(const Itemset& s) {
  std::vector<std::vector<VertexId>> edges(s.domain_size());
  for (std::size_t g = 0; g < s.size(); ++g) {
    const Item& item = s[g];
    for (std::size_t e = item.find_first(); e != Bits::npos; e = item.find_next(e))
      edges[e].push_back(static_cast<VertexId>(g));
  }
  return Hypergraph(s.size(), std::move(edges));
}

IiToHgi ii_to_hgi(const IiInstance& inst) {
  return IiToHgi{HgiInstance{itemset_to_hypergraph(inst.s), itemset_to_hypergraph(inst.t)}};
}

VertexBijection translate_witness_ii_to_hgi(const DomainBijection& j, const IiInstance& inst) {
  if (!solve::verify_ii_witness(inst, j)) throw InvalidWitness("domain bijection is not an itemset isomorphism");
  std::vector<std::uint32_t> sigma(inst.s.size());
  const auto items = inst.t.items();
  for (std::size_t g = 0; g < inst.s.size(); ++g) {
    const Item image = apply_bijection_item(inst.s[g], j);
    auto it = std::lower_bound(items.begin(), items.end(), image);
    sigma[g] = static_cast<std::uint32_t>(it - items.begin());
  }
  VertexBijection out{Permutation(std::move(sigma))};
  const auto red = ii_to_hgi(inst);
  if (!solve::verify_hgi_witness(red.instance, out)) throw InvalidWitness("translated witness does not verify");
  return out;
}

DomainBijection translate_witness_hgi_to_ii(const VertexBijection& i, const IiInstance& inst) {
  const auto red = ii_to_hgi(inst);
  if (i.map.size() != red.instance.g.vertex_count() || red.instance.g.vertex_count() != red.instance.h.vertex_count())
    throw InvalidWitness("vertex bijection does not match the hypergraph orders");
  auto gamma = match_hyperedges(red.instance.g, red.instance.h, i.map);
  if (!gamma) throw InvalidWitness("some hyperedge image is not a hyperedge");
  DomainBijection out{Permutation(std::move(*gamma))};
  if (!solve::verify_ii_witness(inst, out)) throw InvalidWitness("translated witness does not verify");
  return out;
}

Graph gadget_graph(const Hypergraph& h, std::vector<NodeInfo>* roles) {
  const std::size_t v = h.vertex_count();
  const std::size_t m = h.edge_count();
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < m; ++k) {
    const auto node = static_cast<VertexId>(v + k);
    for (auto x : h.hyperedge(k)) edges.emplace_back(x, node);
    const auto a = static_cast<VertexId>(v + m + 2 * k);
    const auto b = static_cast<VertexId>(a + 1);
    edges.emplace_back(node, a);
    edges.emplace_back(node, b);
    edges.emplace_back(a, b);
  }
  if (roles) {
    roles->clear();
    for (std::size_t x = 0; x < v; ++x) roles->push_back({NodeRole::kVertex, static_cast<std::uint32_t>(x)});
    for (std::size_t k = 0; k < m; ++k) roles->push_back({NodeRole::kHyperedge, static_cast<std::uint32_t>(k)});
    for (std::size_t k = 0; k < m; ++k) {
      roles->push_back({NodeRole::kGadget, static_cast<std::uint32_t>(k)});
      roles->push_back({NodeRole::kGadget, static_cast<std::uint32_t>(k)});
    }
  }
  return Graph(v + 3 * m, std::move(edges));
}

HgiToGi hgi_to_gi(const HgiInstance& inst) {
  HgiToGi out;
  out.instance.g = gadget_graph(inst.g, &out.left_roles);
  out.instance.h = gadget_graph(inst.h, &out.right_roles);
  return out;
}

VertexBijection translate_witness_gi_to_hgi(const VertexBijection& i, const HgiInstance& inst, const HgiToGi& red) {
  if (i.map.size() != red.left_roles.size() || red.left_roles.size() != red.right_roles.size())
    throw InvalidWitness("vertex bijection does not match the gadget graphs");
  if (inst.g.vertex_count() != inst.h.vertex_count())
    throw InvalidWitness("hypergraphs have different orders");
  std::vector<std::uint32_t> restricted(inst.g.vertex_count());
  for (std::size_t x = 0; x < inst.g.vertex_count(); ++x) {
    const NodeInfo& target = red.right_roles[i.map(x)];
    if (target.role != NodeRole::kVertex)
      throw InvalidWitness("vertex node " + std::to_string(x + 1) + " is sent to a non-vertex node");
    restricted[x] = target.index;
  }
  VertexBijection out{Permutation(std::move(restricted))};
  if (!solve::verify_hgi_witness(inst, out)) throw InvalidWitness("translated witness does not verify");
  return out;
}

VertexBijection translate_witness_hgi_to_gi(const VertexBijection& i, const HgiInstance& inst, const HgiToGi& red) {
  if (i.map.size() != inst.g.vertex_count() || inst.g.vertex_count() != inst.h.vertex_count())
    throw InvalidWitness("vertex bijection does not match the hypergraph orders");
  auto match = match_hyperedges(inst.g, inst.h, i.map);
  if (!match) throw InvalidWitness("some hyperedge image is not a hyperedge");
  const std::size_t v = inst.g.vertex_count();
  const std::size_t m = inst.g.edge_count();
  std::vector<std::uint32_t> map(v + 3 * m);
  for (std::size_t x = 0; x < v; ++x) map[x] = i.map(x);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t l = (*match)[k];
    map[v + k] = static_cast<std::uint32_t>(v + l);
    map[v + m + 2 * k] = static_cast<std::uint32_t>(v + m + 2 * l);
    map[v + m + 2 * k + 1] = static_cast<std::uint32_t>(v + m + 2 * l + 1);
  }
  VertexBijection out{Permutation(std::move(map))};
  if (!solve::verify_gi_witness(red.instance, out)) throw InvalidWitness("translated witness does not verify");
  return out;
}

// ---------------------------------------------------------------------------
// Index files

std::string_view to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::kGiToIi: return "gi-to-ii";
    case ReductionKind::kIiToHgi: return "ii-to-hgi";
    case ReductionKind::kHgiToGi: return "hgi-to-gi";
  }
  return "";
}

namespace {

constexpr std::string_view kMagic = "isokit-index 1";

void write_graph_side(std::ostringstream& out, const char* side, const Graph& g) {
  const EdgeIndex index(g);
  out << "side " << side << '\n' << "vertices " << g.vertex_count() << '\n';
  for (std::size_t k = 0; k < index.size(); ++k)
    out << "element " << k + 1 << " edge " << index.edge(k).first + 1 << ' ' << index.edge(k).second + 1 << '\n';
}

void write_itemset_side(std::ostringstream& out, const char* side, const Itemset& s) {
  out << "side " << side << '\n' << "domain " << s.domain_size() << '\n';
  for (std::size_t g = 0; g < s.size(); ++g) out << "vertex " << g + 1 << " item " << s[g].to_string() << '\n';
  for (std::size_t e = 0; e < s.domain_size(); ++e) out << "hyperedge " << e + 1 << " element " << e + 1 << '\n';
}

void write_hypergraph_side(std::ostringstream& out, const char* side, const Hypergraph& h) {
  out << "side " << side << '\n' << "vertices " << h.vertex_count() << '\n';
  for (std::size_t k = 0; k < h.edge_count(); ++k) {
    out << "hyperedge " << k + 1 << ' ' << h.hyperedge(k).size();
    for (auto v : h.hyperedge(k)) out << ' ' << v + 1;
    out << '\n';
  }
  std::vector<NodeInfo> roles;
  gadget_graph(h, &roles);
  for (std::size_t n = 0; n < roles.size(); ++n) {
    const char* role = roles[n].role == NodeRole::kVertex      ? "vertex"
                       : roles[n].role == NodeRole::kHyperedge ? "hyperedge"
                                                               : "gadget";
    out << "node " << n + 1 << ' ' << role << ' ' << roles[n].index + 1 << '\n';
  }
}

struct IndexLine {
  std::size_t number;
  std::vector<std::string> toks;
};

std::vector<IndexLine> index_lines(std::string_view text) {
  std::vector<IndexLine> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    IndexLine il{number, {}};
    std::string tok;
    while (ls >> tok) il.toks.push_back(tok);
    if (il.toks.empty() || il.toks.front().front() == '#') continue;
    out.push_back(std::move(il));
  }
  return out;
}

class IndexParser {
 public:
  explicit IndexParser(std::string_view text) : lines_(index_lines(text)) {}

  ReductionIndex parse() {
    const IndexLine& magic = take("index header");
    if (magic.toks.size() != 2 || magic.toks[0] + " " + magic.toks[1] != kMagic)
      throw ParseError(ParseErrorKind::kMalformedHeader, magic.number, "expected 'isokit-index 1'");
    const IndexLine& kind_line = take("reduction line");
    expect(kind_line, "reduction", 2, ParseErrorKind::kMalformedHeader);
    const std::string& kind = kind_line.toks[1];
    ReductionIndex out;
    if (kind == "gi-to-ii") {
      out.kind = ReductionKind::kGiToIi;
      GiInstance gi{graph_side("left"), graph_side("right")};
      out.source = std::move(gi);
    } else if (kind == "ii-to-hgi") {
      out.kind = ReductionKind::kIiToHgi;
      IiInstance ii{itemset_side("left"), itemset_side("right")};
      out.source = std::move(ii);
    } else if (kind == "hgi-to-gi") {
      out.kind = ReductionKind::kHgiToGi;
      HgiInstance hgi{hypergraph_side("left"), hypergraph_side("right")};
      out.source = std::move(hgi);
    } else {
      throw ParseError(ParseErrorKind::kMalformedHeader, kind_line.number, "unknown reduction '" + kind + "'");
    }
    if (next_ != lines_.size())
      throw ParseError(ParseErrorKind::kCountMismatch, lines_[next_].number, "unexpected trailing content");
    return out;
  }

 private:
  const IndexLine& take(const char* what) {
    if (next_ == lines_.size())
      throw ParseError(ParseErrorKind::kCountMismatch, lines_.empty() ? 1 : lines_.back().number,
                       std::string("missing ") + what);
    return lines_[next_++];
  }
  bool peek(const char* word) const { return next_ < lines_.size() && lines_[next_].toks[0] == word; }

  static void expect(const IndexLine& l, const char* word, std::size_t count, ParseErrorKind kind) {
    if (l.toks[0] != word || l.toks.size() != count)
      throw ParseError(kind, l.number, std::string("expected '") + word + "' line");
  }

  static std::size_t number(const IndexLine& l, std::size_t i) {
    std::size_t v = 0;
    const std::string& t = l.toks[i];
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size())
      throw ParseError(ParseErrorKind::kMalformedLine, l.number, "expected an integer, got '" + t + "'");
    return v;
  }

  void side(const char* name) {
    const IndexLine& l = take("side line");
    if (l.toks.size() != 2 || l.toks[0] != "side" || l.toks[1] != name)
      throw ParseError(ParseErrorKind::kMalformedLine, l.number, std::string("expected 'side ") + name + "'");
  }

  Graph graph_side(const char* name) {
    side(name);
    const IndexLine& vl = take("vertices line");
    expect(vl, "vertices", 2, ParseErrorKind::kMalformedLine);
    const std::size_t n = number(vl, 1);
    std::vector<Edge> edges;
    std::vector<std::size_t> where;
    while (peek("element")) {
      const IndexLine& l = take("element line");
      if (l.toks.size() != 5 || l.toks[2] != "edge")
        throw ParseError(ParseErrorKind::kMalformedLine, l.number, "expected 'element k edge u v'");
      if (number(l, 1) != edges.size() + 1)
        throw ParseError(ParseErrorKind::kInvalidStructure, l.number, "elements must be numbered consecutively");
      const std::size_t u = number(l, 3), v = number(l, 4);
      if (u < 1 || u > n || v < 1 || v > n || u == v)
        throw ParseError(ParseErrorKind::kOutOfRange, l.number, "edge endpoint out of range");
      edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
      where.push_back(l.number);
    }
    Graph g(n, edges);
    const EdgeIndex index(g);
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (index.edge(k) != normalized(edges[k].first, edges[k].second))
        throw ParseError(ParseErrorKind::kInvalidStructure, where[k], "edge order disagrees with the reduction");
    return g;
  }

  Itemset itemset_side(const char* name) {
    side(name);
    const IndexLine& dl = take("domain line");
    expect(dl, "domain", 2, ParseErrorKind::kMalformedLine);
    const std::size_t n = number(dl, 1);
    std::vector<Item> items;
    std::size_t first_line = dl.number;
    while (peek("vertex")) {
      const IndexLine& l = take("vertex line");
      if (l.toks.size() != 4 || l.toks[2] != "item")
        throw ParseError(ParseErrorKind::kMalformedLine, l.number, "expected 'vertex k item bits'");
      if (number(l, 1) != items.size() + 1)
        throw ParseError(ParseErrorKind::kInvalidStructure, l.number, "vertices must be numbered consecutively");
      if (l.toks[3].size() != n || l.toks[3].find_first_not_of("01") != std::string::npos)
        throw ParseError(ParseErrorKind::kRowLength, l.number, "item does not match the domain size");
      items.push_back(Item::from_string(l.toks[3]));
    }
    std::size_t edges = 0;
    while (peek("hyperedge")) {
      const IndexLine& l = take("hyperedge line");
      if (l.toks.size() != 4 || l.toks[2] != "element" || number(l, 1) != edges + 1 || number(l, 3) != edges + 1)
        throw ParseError(ParseErrorKind::kInvalidStructure, l.number, "expected 'hyperedge k element k'");
      ++edges;
    }
    if (edges != n) throw ParseError(ParseErrorKind::kCountMismatch, first_line, "one hyperedge per element required");
    if (!std::is_sorted(items.begin(), items.end()) ||
        std::adjacent_find(items.begin(), items.end()) != items.end())
      throw ParseError(ParseErrorKind::kInvalidStructure, first_line, "items must be distinct and in itemset order");
    return Itemset(Domain(n), std::move(items));
  }

  Hypergraph hypergraph_side(const char* name) {
    side(name);
    const IndexLine& vl = take("vertices line");
    expect(vl, "vertices", 2, ParseErrorKind::kMalformedLine);
    const std::size_t n = number(vl, 1);
    std::vector<std::vector<VertexId>> edges;
    while (peek("hyperedge")) {
      const IndexLine& l = take("hyperedge line");
      if (l.toks.size() < 3 || number(l, 1) != edges.size() + 1)
        throw ParseError(ParseErrorKind::kMalformedLine, l.number, "expected 'hyperedge k size v1 ... '");
      const std::size_t k = number(l, 2);
      if (l.toks.size() != 3 + k) throw ParseError(ParseErrorKind::kMalformedLine, l.number, "vertex count mismatch");
      std::vector<VertexId> e;
      for (std::size_t j = 0; j < k; ++j) {
        const std::size_t v = number(l, 3 + j);
        if (v < 1 || v > n) throw ParseError(ParseErrorKind::kOutOfRange, l.number, "vertex out of range");
        e.push_back(static_cast<VertexId>(v - 1));
      }
      edges.push_back(std::move(e));
    }
    Hypergraph h(n, std::move(edges));
    std::vector<NodeInfo> roles;
    gadget_graph(h, &roles);
    for (std::size_t node = 0; node < roles.size(); ++node) {
      const IndexLine& l = take("node line");
      if (l.toks.size() != 4 || l.toks[0] != "node" || number(l, 1) != node + 1)
        throw ParseError(ParseErrorKind::kMalformedLine, l.number, "expected 'node k role j'");
      const char* role = roles[node].role == NodeRole::kVertex      ? "vertex"
                         : roles[node].role == NodeRole::kHyperedge ? "hyperedge"
                                                                    : "gadget";
      if (l.toks[2] != role || number(l, 3) != roles[node].index + 1)
        throw ParseError(ParseErrorKind::kInvalidStructure, l.number, "node role disagrees with the reduction");
    }
    return h;
  }

  std::vector<IndexLine> lines_;
  std::size_t next_ = 0;

 public:
  // Line of the most recently consumed entry.
  std::size_t last_line() const { return next_ == 0 ? 1 : lines_[next_ - 1].number; }
};

}  // namespace

std::string serialize_index(const GiInstance& source) {
  std::ostringstream out;
  out << kMagic << '\n' << "reduction " << to_string(ReductionKind::kGiToIi) << '\n';
  write_graph_side(out, "left", source.g);
  write_graph_side(out, "right", source.h);
  return out.str();
}

std::string serialize_index(const IiInstance& source) {
  std::ostringstream out;
  out << kMagic << '\n' << "reduction " << to_string(ReductionKind::kIiToHgi) << '\n';
  write_itemset_side(out, "left", source.s);
  write_itemset_side(out, "right", source.t);
  return out.str();
}

std::string serialize_index(const HgiInstance& source) {
  std::ostringstream out;
  out << kMagic << '\n' << "reduction " << to_string(ReductionKind::kHgiToGi) << '\n';
  write_hypergraph_side(out, "left", source.g);
  write_hypergraph_side(out, "right", source.h);
  return out.str();
}

ReductionIndex parse_index(std::string_view text) {
  IndexParser parser(text);
  try {
    return parser.parse();
  } catch (const StructuralError& e) {
    throw ParseError(ParseErrorKind::kInvalidStructure, parser.last_line(), e.what());
  }
}

}  // namespace isokit::reduce
