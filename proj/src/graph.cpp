#include "lpsplit/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <string_view>
#include <tuple>

namespace lpsplit {

namespace {

std::string describe(std::size_t index, const Edge& e) {
  std::ostringstream os;
  os << "edge #" << index << " (" << e.u << ", " << e.v << ", " << e.w << ")";
  return os.str();
}

}  // namespace


Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  if (n > static_cast<std::size_t>(std::numeric_limits<VertexId>::max()))
    throw GraphError("vertex count " + std::to_string(n) + " exceeds the 32-bit id range");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    if (e.u >= n || e.v >= n)
      throw GraphError(describe(k, e) + ": vertex id out of range for " + std::to_string(n) + " vertices");
    if (!(e.w > 0) || !std::isfinite(e.w))
      throw GraphError(describe(k, e) + ": weight must be positive and finite");
  }

  // Count arcs per vertex, then scatter both directions.
  std::vector<ArcIndex> offsets(n + 1, 0);
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<std::pair<VertexId, Weight>> arcs(offsets[n]);
  std::vector<ArcIndex> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    arcs[cursor[e.u]++] = {e.v, e.w};
    arcs[cursor[e.v]++] = {e.u, e.w};
  }

  // Sort each adjacency and merge parallel arcs in place.
  Graph g;
  g.offsets_.assign(n + 1, 0);
  g.targets_.reserve(arcs.size());
  g.weights_.reserve(arcs.size());
  g.weighted_degrees_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto first = arcs.begin() + offsets[i];
    auto last  = arcs.begin() + offsets[i + 1];
    std::sort(first, last, [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto it = first; it != last; ++it) {
      if (g.targets_.size() > g.offsets_[i] && g.targets_.back() == it->first) g.weights_.back() += it->second;
      else {
        g.targets_.push_back(it->first);
        g.weights_.push_back(it->second);
      }
      g.weighted_degrees_[i] += it->second;
    }
    g.offsets_[i + 1] = g.targets_.size();
  }
  Weight total = 0;
  for (Weight k : g.weighted_degrees_) total += k;
  g.total_weight_half_ = total / 2;
  return g;
}


std::vector<Edge> undirected_edges(const Graph& g) {
  std::vector<Edge> out;
  out.reserve(g.num_arcs() / 2);
  for (VertexId i = 0; i < g.num_vertices(); ++i) {
    g.for_each_arc(i, [&](VertexId j, Weight w) {
      if (i < j) out.push_back({i, j, w});
    });
  }
  return out;
}




// EDGE LIST
// ---------

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

template <class T>
bool parse_number(std::string_view token, T& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

[[noreturn]] void fail_at(const std::string& source, std::size_t line_no, const std::string& what) {
  throw GraphError(source + ":" + std::to_string(line_no) + ": " + what);
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
}

}  // namespace


Graph read_edgelist(std::istream& in, Indexing indexing, Weight default_weight, const std::string& source) {
  if (!(default_weight > 0)) throw GraphError("default weight must be positive");
  std::vector<Edge> edges;
  std::uint64_t max_id = 0;
  bool any = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line) || line[line.find_first_not_of(" \t")] == '#' || line[line.find_first_not_of(" \t")] == '%') continue;
    auto tokens = split_tokens(line);
    if (tokens.size() < 2 || tokens.size() > 3) fail_at(source, line_no, "expected \"u v [w]\"");
    std::uint64_t ids[2];
    for (int k = 0; k < 2; ++k) {
      if (!parse_number(tokens[k], ids[k])) fail_at(source, line_no, "bad vertex id '" + std::string(tokens[k]) + "'");
      if (indexing == Indexing::one) {
        if (ids[k] == 0) fail_at(source, line_no, "vertex id 0 in a one-based file");
        --ids[k];
      }
      if (ids[k] >= std::numeric_limits<VertexId>::max()) fail_at(source, line_no, "vertex id too large");
    }
    Weight w = default_weight;
    if (tokens.size() == 3) {
      if (!parse_number(tokens[2], w)) fail_at(source, line_no, "bad weight '" + std::string(tokens[2]) + "'");
      if (!(w > 0) || !std::isfinite(w)) fail_at(source, line_no, "weight must be positive");
    }
    max_id = std::max({max_id, ids[0], ids[1]});
    any = true;
    edges.push_back({static_cast<VertexId>(ids[0]), static_cast<VertexId>(ids[1]), w});
  }
  if (in.bad()) throw GraphError(source + ": read error");
  return build_graph(any ? max_id + 1 : 0, edges);
}


Graph load_edgelist(const EdgeListSpec& spec) {
  std::ifstream in(spec.path);
  if (!in) throw GraphError("cannot open " + spec.path.string());
  return read_edgelist(in, spec.indexing, spec.default_weight, spec.path.string());
}




// MATRIX MARKET
// -------------

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

}  // namespace


Graph read_mtx(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) fail_at(source, 1, "missing %%MatrixMarket header");
  ++line_no;
  auto header = split_tokens(line);
  if (header.size() != 5 || lowercase(header[0]) != "%%matrixmarket" || lowercase(header[1]) != "matrix" ||
      lowercase(header[2]) != "coordinate")
    fail_at(source, line_no, "expected \"%%MatrixMarket matrix coordinate <field> <symmetry>\"");
  const std::string field = lowercase(header[3]);
  const std::string symmetry = lowercase(header[4]);
  const bool pattern = field == "pattern";
  if (!pattern && field != "real" && field != "integer")
    fail_at(source, line_no, "unsupported field '" + field + "'");
  const bool symmetric = symmetry == "symmetric";
  if (!symmetric && symmetry != "general")
    fail_at(source, line_no, "unsupported symmetry '" + symmetry + "'");

  // Size line, after any comments.
  std::uint64_t rows = 0, cols = 0, nnz = 0;
  for (;;) {
    if (!std::getline(in, line)) fail_at(source, line_no + 1, "missing size line");
    ++line_no;
    if (is_blank(line) || line[line.find_first_not_of(" \t")] == '%') continue;
    auto tokens = split_tokens(line);
    if (tokens.size() != 3 || !parse_number(tokens[0], rows) || !parse_number(tokens[1], cols) ||
        !parse_number(tokens[2], nnz))
      fail_at(source, line_no, "expected \"rows cols entries\"");
    break;
  }
  const std::uint64_t n = std::max(rows, cols);
  if (n >= std::numeric_limits<VertexId>::max()) fail_at(source, line_no, "matrix too large");

  // General files list directed entries: an entry and its mirror form one
  // undirected edge, with the reverse added when absent.
  struct Directed { VertexId lo, hi; bool forward; Weight w; };
  std::vector<Directed> directed;
  std::vector<Edge> edges;
  std::uint64_t seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line) || line[line.find_first_not_of(" \t")] == '%') continue;
    auto tokens = split_tokens(line);
    if (tokens.size() != (pattern ? 2u : 3u))
      fail_at(source, line_no, pattern ? "expected \"row col\"" : "expected \"row col value\"");
    std::uint64_t r = 0, c = 0;
    if (!parse_number(tokens[0], r) || !parse_number(tokens[1], c)) fail_at(source, line_no, "bad index");
    if (r == 0 || c == 0 || r > rows || c > cols)
      fail_at(source, line_no, "index (" + std::to_string(r) + ", " + std::to_string(c) + ") out of bounds");
    Weight w = 1.0;
    if (!pattern) {
      if (!parse_number(tokens[2], w) || !std::isfinite(w)) fail_at(source, line_no, "bad value");
      if (!(w > 0)) fail_at(source, line_no, "edge weight must be positive");
    }
    if (++seen > nnz) fail_at(source, line_no, "more entries than the declared " + std::to_string(nnz));
    if (r == c) continue;
    auto u = static_cast<VertexId>(r - 1), v = static_cast<VertexId>(c - 1);
    if (symmetric) edges.push_back({u, v, w});
    else directed.push_back({std::min(u, v), std::max(u, v), u < v, w});
  }
  if (in.bad()) throw GraphError(source + ": read error");
  if (seen != nnz)
    fail_at(source, line_no, "expected " + std::to_string(nnz) + " entries, found " + std::to_string(seen));

  if (!symmetric) {
    std::sort(directed.begin(), directed.end(), [](const Directed& a, const Directed& b) {
      return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi);
    });
    for (std::size_t k = 0; k < directed.size();) {
      Weight fwd = 0, bwd = 0;
      std::size_t l = k;
      for (; l < directed.size() && directed[l].lo == directed[k].lo && directed[l].hi == directed[k].hi; ++l)
        (directed[l].forward ? fwd : bwd) += directed[l].w;
      edges.push_back({directed[k].lo, directed[k].hi, std::max(fwd, bwd)});
      k = l;
    }
  }
  return build_graph(n, edges);
}


Graph load_mtx(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path.string());
  return read_mtx(in, path.string());
}

}  // namespace lpsplit
