#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sf {

// Unordered pair of vertex labels, normalized so first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph on vertices 1..n. Immutable after construction;
// edges are stored sorted lexicographically and deduplicated.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;  // sorted ascending
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;
    bool has_vertex(int v) const { return v >= 1 && v <= n_; }

    bool operator==(const Graph&) const = default;  // label-sensitive

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;  // adj_[v-1]
};

// Record of one edge contraction, sufficient to replay it and to lift minor
// witnesses back through it.
struct EdgeContractionRecord {
    Edge contracted_edge;
    int surviving_label = 0;     // the smaller endpoint keeps its label
    std::vector<int> relabeling;  // old label v -> relabeling[v-1] in the new graph
    int common_neighbor_count = 0;
};

// Contracts e = {u,v}: identifies the endpoints into min(u,v), closes the
// label gap (labels above max(u,v) shift down by one), drops the loop and
// merges parallel edges. Throws std::invalid_argument if e is not an edge.
std::pair<Graph, EdgeContractionRecord> contract_edge(const Graph& g, Edge e);

// Vertices adjacent to both endpoints of e; its size is the number of
// triangles containing e. Throws if e is not an edge.
std::vector<int> common_neighbors(const Graph& g, Edge e);

inline int triangles_through_edge(const Graph& g, Edge e) {
    return static_cast<int>(common_neighbors(g, e).size());
}

// A split of a graph along a (possibly empty) clique. side1/side2 carry the
// original labels including the clique; g1/g2 are the induced subgraphs with
// labels closed up canonically (sorted old labels become 1..k).
struct CliqueSeparation {
    std::vector<int> clique;
    std::vector<int> side1, side2;
    Graph g1, g2;
};

// Smallest clique (by size, then lexicographic) with at most kmax vertices
// whose removal disconnects g; side1 is the component containing the
// lowest-labeled non-clique vertex. Requires g connected. Returns nullopt if
// no clique of size <= kmax separates.
std::optional<CliqueSeparation> find_clique_separator(const Graph& g, int kmax);

// Splits g along a given clique using the same grouping rule as
// find_clique_separator. Throws if the vertices do not induce a clique or
// their removal leaves the rest connected.
CliqueSeparation split_along_clique(const Graph& g, std::vector<int> clique);

// Split of a disconnected graph over the empty clique: side1 is the component
// of the lowest-labeled vertex, side2 the rest. Throws if g is connected.
CliqueSeparation split_disconnected(const Graph& g);

// True iff the edge set is closed downward under the componentwise partial
// order on sorted pairs.
bool is_shifted(const Graph& g);

bool is_connected(const Graph& g);

// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Induced subgraph on the given vertices (sorted ascending internally).
// Returns the relabeled graph plus old_labels, where old_labels[i] is the
// original label of new vertex i+1.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    std::vector<int> vertices);

// Applies a permutation: perm[v-1] is the new label of v.
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Iteratively deletes vertices of degree <= max_degree (labels close up).
Graph delete_low_degree_vertices(const Graph& g, int max_degree);

// Brute-force isomorphism with degree prefiltering; intended for n <= 12.
bool are_isomorphic(const Graph& a, const Graph& b);

// Text edge-list interchange format: first line "n m", then m lines "u v"
// with 1 <= u < v <= n; '#' starts a comment line.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);
std::string format_edge_list(const Graph& g);

// FNV-1a digest of the canonical edge-list text, as fixed-width hex.
std::string graph_digest(const Graph& g);

}  // namespace sf
