#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spb/errors.hpp"

namespace spb {

using VertexId = int;

/// Simple undirected graph over string-labelled vertices. No self-loops, no
/// parallel edges. Vertices keep their insertion order (it is the order of
/// the input file), but every algorithmic tie-break in this library is by
/// label, never by insertion position.
class Graph {
public:
    Graph() = default;

    void add_vertex(const std::string& label);
    void add_edge(const std::string& u, const std::string& v);

    int num_vertices() const { return static_cast<int>(labels_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    bool has_vertex(const std::string& label) const;
    bool has_edge(const std::string& u, const std::string& v) const;
    bool has_edge(VertexId u, VertexId v) const;

    VertexId id_of(const std::string& label) const;              // throws ParseError if absent
    const std::string& label_of(VertexId v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Neighbors sorted by label.
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

    /// Edges as id pairs, sorted by (label, label).
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    bool operator==(const Graph& other) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::pair<VertexId, VertexId>> edges_;  // (a, b) with label(a) < label(b)

    friend Graph contract_edge(const Graph&, const std::string&, const std::string&);
};

/// Planarity of an arbitrary graph (possibly disconnected). Backed by a
/// standard linear-time test; this is plumbing, not part of the rotation
/// machinery, so the two can cross-check each other.
bool planarity_check(const Graph& g);

/// Planarity over plain int adjacency, shared by the face-disk checks so the
/// hot paths never touch labels.
bool planar_int(int n, const std::vector<std::pair<int, int>>& edges);

/// Contract backbone edge (u,v): merged vertex label is smaller+"+"+larger,
/// self-loops vanish, parallel edges collapse. Merged vertex takes the
/// earlier insertion slot of u and v.
Graph contract_edge(const Graph& g, const std::string& u, const std::string& v);

/// Blocks (maximal 2-connected subgraphs, single edges included) plus the
/// block-cutvertex incidence.
struct BlockCutTree {
    std::vector<std::vector<std::string>> blocks;            // vertex labels, sorted
    std::vector<std::vector<std::pair<std::string, std::string>>> block_edges;
    std::vector<std::string> cutvertices;                    // sorted
    std::vector<std::vector<std::string>> block_cuts;        // per block: its cutvertices
    int component_count = 0;                                 // all components, isolated vertices included
    int nontrivial_component_count = 0;                      // components with at least one edge
    int block_count() const { return static_cast<int>(blocks.size()); }
    bool is_cutvertex(const std::string& label) const;
};

BlockCutTree blocks(const Graph& g);

/// Raw biconnectivity over int adjacency; the iterative solver core and
/// blocks() share this.
struct BiconnCore {
    std::vector<std::vector<int>> block_vertices;            // sorted ids
    std::vector<std::vector<std::pair<int, int>>> block_edges;
    std::vector<int> vertex_block_count;                     // 0 for isolated vertices
    int component_count = 0;
    int nontrivial_component_count = 0;
};

BiconnCore biconnected_core(int n, const std::vector<std::vector<int>>& adj);

} // namespace spb
