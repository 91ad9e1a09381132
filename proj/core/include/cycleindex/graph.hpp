#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "cycleindex/error.hpp"

namespace cycleindex {

/// Smallest admissible |weight|. The cycle form needs D^-1.
inline constexpr double kMinWeight = 1e-12;

using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

struct Edge {
  std::size_t tail;
  std::size_t head;
  double weight;
};

/// Undirected simple graph with signed real edge weights.
///
/// Vertices are 0..N-1. Every stored edge satisfies tail < head; edges
/// keep the order in which they were supplied, and that order indexes the
/// columns of the incidence matrix and the rows of every cycle basis.
class WeightedGraph {
 public:
  struct Neighbor {
    std::size_t vertex;
    std::size_t edge;
  };

  WeightedGraph() = default;

  /// Throws SelfLoop, DuplicateEdge, DegenerateWeight, or InvalidArgument
  /// for an endpoint outside [0, num_vertices).
  WeightedGraph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  /// Neighbors sorted by vertex id.
  const std::vector<Neighbor>& neighbors(std::size_t v) const {
    return adjacency_.at(v);
  }

  std::size_t negative_edge_count() const;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// Parses the whitespace edge-list format (`tail head weight`, `#`
/// comments) or, when the first non-blank character is `{`, the JSON form
/// `{"edges": [[u, v, w], ...]}`. Vertex ids are compacted to 0..N-1 in
/// order of first appearance.
WeightedGraph load_graph(std::string_view source);
WeightedGraph load_graph_file(const std::filesystem::path& path);

/// A loaded graph together with the id each compacted vertex had in the
/// source: labels[v] is the original id of vertex v.
struct LabelledGraph {
  WeightedGraph graph;
  std::vector<unsigned long long> labels;
};

LabelledGraph load_labelled_graph(std::string_view source);
LabelledGraph load_labelled_graph_file(const std::filesystem::path& path);

IntMatrix incidence(const WeightedGraph& g);

enum class SignFilter { All, PositiveOnly, NegativeOnly };

struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> labels;
};

/// Isolated vertices count as components.
Components connected_components(const WeightedGraph& g,
                                SignFilter filter = SignFilter::All);

bool is_connected(const WeightedGraph& g);

struct SpanningTree {
  std::vector<std::size_t> tree_edges;
  std::vector<std::size_t> non_tree_edges;
  /// parent[0] == 0 for the root.
  std::vector<std::size_t> parent;
  std::vector<std::size_t> parent_edge;
  std::vector<std::size_t> depth;
};

/// BFS from vertex 0 with neighbors visited in ascending order.
/// Throws NotConnected.
SpanningTree spanning_tree(const WeightedGraph& g);

/// Same traversal, restarted at the smallest unvisited vertex for every
/// further component; each root is its own parent.
SpanningTree spanning_forest(const WeightedGraph& g);

struct Subgraph {
  WeightedGraph graph;
  std::vector<std::size_t> parent_edge;  // subgraph edge -> edge of g
};

/// Keeps every vertex and the edges passing the filter.
Subgraph filtered_subgraph(const WeightedGraph& g, SignFilter filter);

struct CycleBasis {
  IntMatrix cycles;          // |E| x C
  Eigen::VectorXd weights;   // diagonal of D

  std::size_t rank() const { return static_cast<std::size_t>(cycles.cols()); }
};

/// Fundamental cycles: column j is +1 on the j-th non-tree edge plus the
/// signed tree path that closes it. Accepts a spanning forest.
CycleBasis cycle_basis(const WeightedGraph& g, const SpanningTree& t);
CycleBasis cycle_basis(const WeightedGraph& g);

struct EdgePartition {
  std::vector<std::size_t> cycle_set;
  std::vector<std::size_t> tree_set;
};

EdgePartition cycle_and_tree_sets(const WeightedGraph& g);

/// Cycle rank |E| - |V| + 1 of a connected graph.
std::size_t cycle_rank(const WeightedGraph& g);

/// Exact rank of an integer matrix (fraction-free elimination).
std::size_t integer_rank(const IntMatrix& m);

}  // namespace cycleindex
