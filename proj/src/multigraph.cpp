#include "eulercount/multigraph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "eulercount/errors.hpp"

namespace eulercount {

std::vector<VertexId> VertexDomain::ids() const {
  std::vector<VertexId> out;
  out.reserve(bound());
  if (with_origin) out.push_back(0);
  for (VertexId v = 1; v <= n; ++v) out.push_back(v);
  return out;
}

Multigraph::Multigraph(VertexId n, std::vector<Edge> edges, bool with_origin)
    : domain_{n, with_origin}, edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (!domain_.contains(e.a) || !domain_.contains(e.b))
      throw InputError("edge " + std::to_string(i) + " has an endpoint outside the vertex set");
    if (e.a == e.b) throw InputError("edge " + std::to_string(i) + " is a loop");
  }
}

std::vector<std::uint32_t> Multigraph::degrees() const {
  std::vector<std::uint32_t> deg(domain_.bound(), 0);
  for (const auto& e : edges_) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

std::uint64_t HalfDegreeProfile::total() const {
  return std::accumulate(half_.begin(), half_.end(), std::uint64_t{0});
}

DirectedMultigraph::DirectedMultigraph(VertexId n, std::vector<Arc> arcs, bool with_origin)
    : domain_{n, with_origin}, arcs_(std::move(arcs)) {
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const auto& a = arcs_[i];
    if (!domain_.contains(a.tail) || !domain_.contains(a.head))
      throw InputError("arc " + std::to_string(i) + " has an endpoint outside the vertex set");
    if (a.tail == a.head) throw InputError("arc " + std::to_string(i) + " is a loop");
  }
}

std::vector<std::uint32_t> DirectedMultigraph::out_degrees() const {
  std::vector<std::uint32_t> deg(domain_.bound(), 0);
  for (const auto& a : arcs_) ++deg[a.tail];
  return deg;
}

std::vector<std::uint32_t> DirectedMultigraph::in_degrees() const {
  std::vector<std::uint32_t> deg(domain_.bound(), 0);
  for (const auto& a : arcs_) ++deg[a.head];
  return deg;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got '" +
                               std::string(tok) + "'");
  return value;
}

// Union-find over vertex ids.
class Components {
 public:
  explicit Components(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent_[find(x)] = find(y); }

 private:
  std::vector<std::size_t> parent_;
};

template <class Pairs>
bool connected_over_support(std::size_t bound, const Pairs& pairs) {
  Components comp(bound);
  std::vector<bool> used(bound, false);
  for (const auto& [x, y] : pairs) {
    comp.unite(x, y);
    used[x] = used[y] = true;
  }
  std::size_t root = bound;
  for (std::size_t v = 0; v < bound; ++v) {
    if (!used[v]) continue;
    if (root == bound) root = comp.find(v);
    else if (comp.find(v) != root) return false;
  }
  return true;
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t header_line = 0;
  VertexId n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (header_line != 0) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "euler")
        throw ParseError(line_no, "malformed header, expected 'p euler <n> <m>'");
      std::uint64_t nn = parse_uint(tokens[2], line_no, "vertex count");
      if (nn == 0 || nn > 0xFFFFFFFEu) throw ParseError(line_no, "vertex count must be positive");
      n = static_cast<VertexId>(nn);
      m = parse_uint(tokens[3], line_no, "edge count");
      header_line = line_no;
      continue;
    }
    if (tokens[0] == "e") {
      if (header_line == 0) throw ParseError(line_no, "edge line before header");
      if (tokens.size() != 3) throw ParseError(line_no, "malformed edge, expected 'e <u> <v>'");
      std::uint64_t u = parse_uint(tokens[1], line_no, "endpoint");
      std::uint64_t v = parse_uint(tokens[2], line_no, "endpoint");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
      if (u == v) throw ParseError(line_no, "loop edge");
      if (edges.size() == m)
        throw ParseError(line_no, "more edges than the " + std::to_string(m) + " declared");
      edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
      continue;
    }
    throw ParseError(line_no, "unrecognized line '" + std::string(tokens[0]) + "'");
  }
  if (header_line == 0) throw ParseError(line_no, "missing header");
  if (edges.size() != m)
    throw ParseError(line_no, "edge-count mismatch: declared " + std::to_string(m) + ", found " +
                                  std::to_string(edges.size()));
  return Multigraph(n, std::move(edges));
}

std::string serialize_graph(const Multigraph& g, std::span<const std::string> comments) {
  const VertexId origin_label = g.vertex_count() + 1;
  auto label = [&](VertexId v) { return v == 0 ? origin_label : v; };
  std::ostringstream out;
  out << "p euler " << (g.with_origin() ? origin_label : g.vertex_count()) << ' '
      << g.edge_count() << '\n';
  for (const auto& c : comments) out << "c " << c << '\n';
  for (const auto& e : g.edges()) out << "e " << label(e.a) << ' ' << label(e.b) << '\n';
  return out.str();
}

HalfDegreeProfile half_degrees(const Multigraph& g) {
  auto deg = g.degrees();
  for (VertexId v : g.domain().ids())
    if (deg[v] % 2 != 0) throw OddDegree(v);
  for (auto& d : deg) d /= 2;
  return HalfDegreeProfile(g.domain(), std::move(deg));
}

bool all_degrees_even(const Multigraph& g) {
  auto deg = g.degrees();
  return std::all_of(deg.begin(), deg.end(), [](std::uint32_t d) { return d % 2 == 0; });
}

bool support_connected(const Multigraph& g) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& e : g.edges()) pairs.emplace_back(e.a, e.b);
  return connected_over_support(g.domain().bound(), pairs);
}

bool support_connected(const DirectedMultigraph& d) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& a : d.arcs()) pairs.emplace_back(a.tail, a.head);
  return connected_over_support(d.domain().bound(), pairs);
}

bool is_eulerian(const Multigraph& g) {
  return g.edge_count() >= 1 && all_degrees_even(g) && support_connected(g);
}

bool is_eulerian(const DirectedMultigraph& d) {
  if (d.arc_count() == 0) return false;
  if (d.out_degrees() != d.in_degrees()) return false;
  return support_connected(d);
}

std::vector<VertexId> support(const Multigraph& g) {
  auto deg = g.degrees();
  std::vector<VertexId> out;
  for (VertexId v : g.domain().ids())
    if (deg[v] > 0) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

Multigraph subdivide_parallel(const Multigraph& g) {
  std::map<std::pair<VertexId, VertexId>, bool> seen;
  std::vector<Edge> edges;
  VertexId next = g.vertex_count();
  for (const auto& e : g.edges()) {
    auto key = std::minmax(e.a, e.b);
    if (!seen.emplace(key, true).second) {
      const VertexId mid = ++next;
      edges.push_back({e.a, mid});
      edges.push_back({mid, e.b});
    } else {
      edges.push_back(e);
    }
  }
  return Multigraph(next, std::move(edges), g.with_origin());
}

DirectedMultigraph apply_orientation(const Multigraph& g, const Orientation& o) {
  if (o.size() != g.edge_count())
    throw InputError("orientation has " + std::to_string(o.size()) + " bits for " +
                     std::to_string(g.edge_count()) + " edges");
  std::vector<Arc> arcs;
  arcs.reserve(g.edge_count());
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    arcs.push_back(o.forward(i) ? Arc{e.a, e.b} : Arc{e.b, e.a});
  }
  return DirectedMultigraph(g.vertex_count(), std::move(arcs), g.with_origin());
}

}  // namespace eulercount
