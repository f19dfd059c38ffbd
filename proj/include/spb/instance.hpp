#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "spb/graph.hpp"

namespace spb {

// One streamed instance: backbone graph over labeled vertices, an ordered
// stream of non-backbone edges, and the window size omega. Stream order is
// the position map; sub-instances produced by splitting may carry the
// original (non-consecutive) positions, so positions are stored explicitly.
// Immutable after construction.
class StreamedInstance {
public:
    // positions: empty means canonical 1..m; otherwise strictly increasing
    // values >= 1, one per stream edge. Construction throws ParseError for
    // structural breakage (unknown endpoints, self-loops, duplicate or bad
    // labels); semantic invariants are reported by validate() instead.
    StreamedInstance(std::vector<std::string> vertices,
                     std::vector<std::pair<std::string, std::string>> backbone,
                     std::vector<std::pair<std::string, std::string>> stream,
                     int omega,
                     std::vector<int> positions = {});

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<std::pair<std::string, std::string>>& backbone_edges() const {
        return backbone_;
    }
    const std::vector<std::pair<std::string, std::string>>& stream() const { return stream_; }
    int omega() const { return omega_; }
    int stream_size() const { return static_cast<int>(stream_.size()); }

    // 1-based stream index -> position value.
    int position(int j) const { return positions_[j - 1]; }
    bool canonical_positions() const;

    const Graph& backbone_graph() const { return *backbone_graph_; }
    std::shared_ptr<const Graph> backbone_graph_ptr() const { return backbone_graph_; }

    // Vertices without incident backbone edges, in declaration order.
    std::vector<std::string> isolated_vertices() const;
    bool is_isolated(const std::string& label) const;

    // 1-based stream indices j with 0 <= t - position(j) < omega.
    std::vector<int> alive_at(int t) const;

    // Sorted distinct position values; only these t can enlarge an alive set.
    std::vector<int> time_steps() const;

    // The unique non-trivial backbone component. Throws WrongCategory when
    // there is none or more than one.
    std::shared_ptr<const Graph> beta_graph() const;

private:
    std::vector<std::string> vertices_;
    std::vector<std::pair<std::string, std::string>> backbone_;
    std::vector<std::pair<std::string, std::string>> stream_;
    std::vector<int> positions_;
    int omega_;
    std::shared_ptr<const Graph> backbone_graph_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks the semantic invariants: planar backbone, stream disjoint from the
// backbone, no duplicate stream edges, omega >= 1. Violations are data.
ValidationReport validate(const StreamedInstance& i);

Graph union_graph(const StreamedInstance& i);

// Stream index pairs that must not cross: (p,q), p < q, with
// position(q) - position(p) < omega.
std::vector<std::pair<int, int>> conflict_pairs(const StreamedInstance& i);

enum class Category { AllIsolated, Star, SingleNontrivial, Multi };

struct Classification {
    Category category;
    int component_count = 0;             // backbone components, isolated vertices included
    int nontrivial_component_count = 0;  // backbone components with at least one edge
    int block_count = 0;
    int iso_iso_stream_edges = 0;        // stream edges joining two isolated vertices
};

const char* category_name(Category c);

// Requires a connected union graph (DisconnectedUnion otherwise).
// AllIsolated: no backbone edge. Star: one non-trivial component forming a
// single block, no stream edge between isolated vertices. SingleNontrivial:
// as Star but with such stream edges. Multi: several non-trivial components
// or several blocks.
Classification classify(const StreamedInstance& i);

bool union_connected(const StreamedInstance& i);

// Splits an omega=1 instance with connected union graph into one
// sub-instance per non-trivial backbone component: every other non-trivial
// component is collapsed to a single vertex (label = its vertex labels
// joined by '+', sorted), isolated vertices are kept, stream edges are
// re-attached with self-loops dropped and parallel copies deduplicated
// keeping the earliest position. The input decides YES iff every part does.
// All-isolated input yields an empty list. Throws UnsupportedOmega unless
// omega == 1.
std::vector<StreamedInstance> split_connected(const StreamedInstance& i);

} // namespace spb
