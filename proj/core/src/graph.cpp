#include "cycleindex/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace cycleindex {

namespace {

std::string show(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DegenerateWeight: return "DegenerateWeight";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::SingularCycleForm: return "SingularCycleForm";
    case ErrorCode::DegenerateKernel: return "DegenerateKernel";
    case ErrorCode::PoleError: return "PoleError";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::NotAFixedPoint: return "NotAFixedPoint";
    case ErrorCode::SpecError: return "SpecError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

WeightedGraph::WeightedGraph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), adjacency_(num_vertices) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.tail >= num_vertices || e.head >= num_vertices) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge endpoint out of range: (" + std::to_string(e.tail) +
                      ", " + std::to_string(e.head) + ")");
    }
    if (e.tail == e.head) {
      throw Error(ErrorCode::SelfLoop,
                  "self-loop at vertex " + std::to_string(e.tail));
    }
    if (!std::isfinite(e.weight) || std::abs(e.weight) < kMinWeight) {
      throw Error(ErrorCode::DegenerateWeight,
                  "edge (" + std::to_string(e.tail) + ", " +
                      std::to_string(e.head) + ") has weight " +
                      show(e.weight));
    }
    if (e.tail > e.head) std::swap(e.tail, e.head);
    if (!seen.emplace(e.tail, e.head).second) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge (" + std::to_string(e.tail) + ", " +
                      std::to_string(e.head) + ") appears twice");
    }
    const std::size_t index = edges_.size();
    edges_.push_back(e);
    adjacency_[e.tail].push_back({e.head, index});
    adjacency_[e.head].push_back({e.tail, index});
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end(),
              [](const Neighbor& a, const Neighbor& b) {
                return a.vertex < b.vertex;
              });
  }
}

std::size_t WeightedGraph::negative_edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(),
                    [](const Edge& e) { return e.weight < 0.0; }));
}

namespace {

struct RawEdge {
  unsigned long long tail;
  unsigned long long head;
  double weight;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\f\v");
  return s.substr(first, last - first + 1);
}

unsigned long long parse_vertex(std::string_view token, std::size_t line) {
  unsigned long long value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::FormatError,
                "line " + std::to_string(line) + ": bad vertex id '" +
                    std::string(token) + "'");
  }
  return value;
}

double parse_weight(std::string_view token, std::size_t line) {
  double value = 0.0;
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw Error(ErrorCode::FormatError,
                "line " + std::to_string(line) + ": bad weight '" +
                    std::string(token) + "'");
  }
  return value;
}

std::vector<RawEdge> parse_edge_list(std::string_view source) {
  std::vector<RawEdge> raw;
  std::size_t line_no = 0;
  while (!source.empty()) {
    const auto nl = source.find('\n');
    std::string_view line = source.substr(0, nl);
    source.remove_prefix(nl == std::string_view::npos ? source.size() : nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    std::vector<std::string_view> tokens;
    while (!line.empty()) {
      const auto ws = line.find_first_of(" \t\r\f\v");
      tokens.push_back(line.substr(0, ws));
      if (ws == std::string_view::npos) break;
      line = trim(line.substr(ws));
    }
    if (tokens.size() != 3) {
      throw Error(ErrorCode::FormatError,
                  "line " + std::to_string(line_no) +
                      ": expected 'tail head weight'");
    }
    raw.push_back({parse_vertex(tokens[0], line_no),
                   parse_vertex(tokens[1], line_no),
                   parse_weight(tokens[2], line_no)});
  }
  return raw;
}

std::vector<RawEdge> parse_json(std::string_view source) {
  std::vector<RawEdge> raw;
  try {
    const auto doc = nlohmann::json::parse(source);
    const auto& edges = doc.at("edges");
    if (!edges.is_array()) {
      throw Error(ErrorCode::FormatError, "\"edges\" must be an array");
    }
    for (const auto& item : edges) {
      if (!item.is_array() || item.size() != 3 ||
          !item[0].is_number_unsigned() || !item[1].is_number_unsigned() ||
          !item[2].is_number()) {
        throw Error(ErrorCode::FormatError,
                    "each edge must be [tail, head, weight] with "
                    "nonnegative integer ids: " + item.dump());
      }
      raw.push_back({item[0].get<unsigned long long>(),
                     item[1].get<unsigned long long>(),
                     item[2].get<double>()});
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::FormatError, ex.what());
  }
  return raw;
}

}  // namespace

LabelledGraph load_labelled_graph(std::string_view source) {
  const auto body = trim(source);
  const auto raw = (!body.empty() && body.front() == '{')
                       ? parse_json(body)
                       : parse_edge_list(source);
  if (raw.empty()) throw Error(ErrorCode::FormatError, "no edges");

  std::unordered_map<unsigned long long, std::size_t> ids;
  std::vector<unsigned long long> labels;
  auto compact = [&](unsigned long long v) {
    const auto [it, fresh] = ids.try_emplace(v, ids.size());
    if (fresh) labels.push_back(v);
    return it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& r : raw) {
    const auto tail = compact(r.tail);
    const auto head = compact(r.head);
    edges.push_back({tail, head, r.weight});
  }
  return {WeightedGraph(ids.size(), std::move(edges)), std::move(labels)};
}

WeightedGraph load_graph(std::string_view source) {
  return load_labelled_graph(source).graph;
}

LabelledGraph load_labelled_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::FormatError, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_labelled_graph(buffer.str());
}

WeightedGraph load_graph_file(const std::filesystem::path& path) {
  return load_labelled_graph_file(path).graph;
}

IntMatrix incidence(const WeightedGraph& g) {
  IntMatrix b = IntMatrix::Zero(static_cast<Eigen::Index>(g.num_vertices()),
                                static_cast<Eigen::Index>(g.num_edges()));
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& edge = g.edge(e);
    const auto col = static_cast<Eigen::Index>(e);
    b(static_cast<Eigen::Index>(edge.tail), col) = 1;
    b(static_cast<Eigen::Index>(edge.head), col) = -1;
  }
  return b;
}

namespace {

bool passes(const Edge& e, SignFilter filter) {
  switch (filter) {
    case SignFilter::All: return true;
    case SignFilter::PositiveOnly: return e.weight > 0.0;
    case SignFilter::NegativeOnly: return e.weight < 0.0;
  }
  return false;
}

}  // namespace

Components connected_components(const WeightedGraph& g, SignFilter filter) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  Components out;
  out.labels.assign(g.num_vertices(), unset);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < g.num_vertices(); ++start) {
    if (out.labels[start] != unset) continue;
    out.labels[start] = out.count;
    stack.push_back(start);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(v)) {
        if (!passes(g.edge(nb.edge), filter) || out.labels[nb.vertex] != unset)
          continue;
        out.labels[nb.vertex] = out.count;
        stack.push_back(nb.vertex);
      }
    }
    ++out.count;
  }
  return out;
}

bool is_connected(const WeightedGraph& g) {
  return g.num_vertices() > 0 && connected_components(g).count == 1;
}

SpanningTree spanning_forest(const WeightedGraph& g) {
  const auto n = g.num_vertices();
  SpanningTree t;
  t.parent.assign(n, 0);
  t.parent_edge.assign(n, std::numeric_limits<std::size_t>::max());
  t.depth.assign(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<bool> in_tree(g.num_edges(), false);

  std::queue<std::size_t> queue;
  for (std::size_t root = 0; root < n; ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    t.parent[root] = root;
    queue.push(root);
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop();
      for (const auto& nb : g.neighbors(v)) {
        if (visited[nb.vertex]) continue;
        visited[nb.vertex] = true;
        t.parent[nb.vertex] = v;
        t.parent_edge[nb.vertex] = nb.edge;
        t.depth[nb.vertex] = t.depth[v] + 1;
        in_tree[nb.edge] = true;
        queue.push(nb.vertex);
      }
    }
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    (in_tree[e] ? t.tree_edges : t.non_tree_edges).push_back(e);
  }
  return t;
}

SpanningTree spanning_tree(const WeightedGraph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::NotConnected, "graph is not connected");
  }
  return spanning_forest(g);
}

Subgraph filtered_subgraph(const WeightedGraph& g, SignFilter filter) {
  std::vector<Edge> kept;
  std::vector<std::size_t> map;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (passes(g.edge(e), filter)) {
      kept.push_back(g.edge(e));
      map.push_back(e);
    }
  }
  return {WeightedGraph(g.num_vertices(), std::move(kept)), std::move(map)};
}

CycleBasis cycle_basis(const WeightedGraph& g, const SpanningTree& t) {
  const auto num_edges = static_cast<Eigen::Index>(g.num_edges());
  CycleBasis basis;
  basis.cycles = IntMatrix::Zero(
      num_edges, static_cast<Eigen::Index>(t.non_tree_edges.size()));
  basis.weights.resize(num_edges);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    basis.weights(static_cast<Eigen::Index>(e)) = g.edge(e).weight;
  }

  // Stepping from a vertex to its parent along tree edge pe contributes +1
  // when pe points that way (tail == vertex), -1 otherwise.
  auto step_up = [&](std::size_t v) {
    const auto pe = t.parent_edge[v];
    return std::pair{pe, g.edge(pe).tail == v ? 1 : -1};
  };

  for (std::size_t j = 0; j < t.non_tree_edges.size(); ++j) {
    const auto col = static_cast<Eigen::Index>(j);
    const auto chord = t.non_tree_edges[j];
    basis.cycles(static_cast<Eigen::Index>(chord), col) = 1;
    // Close the cycle with the tree path head -> tail.
    auto a = g.edge(chord).head;
    auto b = g.edge(chord).tail;
    while (t.depth[a] > t.depth[b]) {
      const auto [pe, sign] = step_up(a);
      basis.cycles(static_cast<Eigen::Index>(pe), col) += sign;
      a = t.parent[a];
    }
    while (t.depth[b] > t.depth[a]) {
      const auto [pe, sign] = step_up(b);
      basis.cycles(static_cast<Eigen::Index>(pe), col) -= sign;
      b = t.parent[b];
    }
    while (a != b) {
      const auto [pa, sa] = step_up(a);
      basis.cycles(static_cast<Eigen::Index>(pa), col) += sa;
      a = t.parent[a];
      const auto [pb, sb] = step_up(b);
      basis.cycles(static_cast<Eigen::Index>(pb), col) -= sb;
      b = t.parent[b];
    }
  }
  return basis;
}

CycleBasis cycle_basis(const WeightedGraph& g) {
  return cycle_basis(g, spanning_tree(g));
}

EdgePartition cycle_and_tree_sets(const WeightedGraph& g) {
  const auto basis = cycle_basis(g);
  EdgePartition out;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const bool on_cycle =
        basis.rank() > 0 &&
        (basis.cycles.row(static_cast<Eigen::Index>(e)).array() != 0).any();
    (on_cycle ? out.cycle_set : out.tree_set).push_back(e);
  }
  return out;
}

std::size_t cycle_rank(const WeightedGraph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::NotConnected, "cycle rank needs a connected graph");
  }
  return g.num_edges() + 1 - g.num_vertices();
}

std::size_t integer_rank(const IntMatrix& m) {
  // Bareiss elimination keeps every intermediate an integer minor.
  Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> a =
      m.cast<long long>();
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  long long prev = 1;
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = rank;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    a.row(pivot).swap(a.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      for (Eigen::Index k = c + 1; k < cols; ++k) {
        a(r, k) = (a(rank, c) * a(r, k) - a(r, c) * a(rank, k)) / prev;
      }
      a(r, c) = 0;
    }
    prev = a(rank, c);
    ++rank;
  }
  return static_cast<std::size_t>(rank);
}

}  // namespace cycleindex
