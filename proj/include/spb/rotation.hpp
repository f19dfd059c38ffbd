#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spb/graph.hpp"

namespace spb {

// Cyclic neighbor order per vertex (clockwise). Orders are stored in canonical
// form: each list is rotated so the smallest-label neighbor comes first.
// The underlying graph is shared so many rotations of one graph stay cheap.
class RotationSystem {
public:
    // Rotation of the empty graph.
    RotationSystem();

    // `order[v]` must be a permutation of v's neighbors; lists are re-anchored.
    RotationSystem(std::shared_ptr<const Graph> g, std::vector<std::vector<VertexId>> order);

    // Label-keyed variant used when reading certificates. Throws
    // MalformedCertificate when the key set is not exactly the vertex set of g
    // or a value is not a permutation of that vertex's neighborhood.
    static RotationSystem from_label_map(std::shared_ptr<const Graph> g,
                                         const std::map<std::string, std::vector<std::string>>& order);

    const Graph& graph() const { return *g_; }
    std::shared_ptr<const Graph> graph_ptr() const { return g_; }

    const std::vector<VertexId>& order_at(VertexId v) const { return order_[v]; }

    // Neighbor following `from` in the cyclic order at `at`.
    VertexId successor(VertexId at, VertexId from) const;

    std::map<std::string, std::vector<std::string>> to_labels() const;

    bool operator==(const RotationSystem& other) const;

private:
    std::shared_ptr<const Graph> g_;
    std::vector<std::vector<VertexId>> order_;

    void anchor();
};

// Facial walks of a rotation system. Walks are discovered in lexicographic
// order of their smallest untraversed directed edge (tail label, then head
// label); the face id is the discovery index. Each walk starts at that
// smallest directed edge.
struct FaceSet {
    std::vector<std::vector<std::pair<VertexId, VertexId>>> walks;
    std::vector<std::vector<VertexId>> boundary;  // sorted distinct vertex ids per face

    int size() const { return static_cast<int>(walks.size()); }
    bool on_boundary(int face, VertexId v) const;
};

FaceSet canonical_faces(const RotationSystem& r);

// Euler test: a rotation of a connected graph is planar iff it closes into
// exactly 2 - n + m faces. Callers split by component first.
bool is_planar_rotation(const RotationSystem& r);

inline constexpr long long kDefaultBudget = 10'000'000;

// Lazy enumeration of the planar rotations of a connected graph, in
// lexicographic order over per-vertex cyclic orders (vertices by label, each
// order anchored at its smallest neighbor). Construction throws
// BudgetExceeded when the raw space, the product of (deg(v)-1)!, exceeds the
// budget.
class RotationEnumerator {
public:
    explicit RotationEnumerator(std::shared_ptr<const Graph> g, long long budget = kDefaultBudget);

    // Next planar rotation, or nullopt once exhausted.
    std::optional<RotationSystem> next();

    long long raw_count() const { return raw_count_; }

private:
    std::shared_ptr<const Graph> g_;
    std::vector<VertexId> vertex_order_;               // by label; odometer significance
    std::vector<std::vector<VertexId>> tails_;         // current permutation of each suffix
    std::vector<VertexId> anchors_;
    long long raw_count_ = 1;
    bool exhausted_ = false;
    bool first_ = true;

    bool advance();
};

} // namespace spb
