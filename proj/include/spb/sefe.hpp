#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spb/instance.hpp"
#include "spb/rotation.hpp"

namespace spb {

/// One member of a sunflower family: the common graph plus these edges.
struct SefeGraph {
    std::vector<std::pair<std::string, std::string>> exclusive_edges;
};

/// A family of graphs over one vertex set whose pairwise intersections all
/// equal the common graph.  Member i is the common edges plus
/// graphs[i].exclusive_edges.
struct SefeInstance {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> common_edges;
    std::vector<SefeGraph> graphs;
};

/// Encodes a star-shaped streamed instance as a sunflower family with m+1
/// members that admits a simultaneous embedding iff the instance is stream
/// planar.  Each stream edge e = (u, v) at position j spawns anchor
/// vertices "d:j:k" for every time step k at which e is alive; member k
/// subdivides the alive chords of step k through them, and the last member
/// ties each edge's anchors into one face.  Output size is O(n + omega*m).
/// Requires a star-shaped instance (throws WrongCategory) with canonical
/// positions 1..m (throws ShapeViolation).
SefeInstance star_to_sefe(const StreamedInstance& i);

/// Ground-truth simultaneous-embedding test: enumerates planar rotations of
/// the non-trivial common component and face assignments of the isolated
/// common vertices and of each member's private chords, accepting when every
/// member's chords embed planarly in their faces (checked disk by disk).
/// Supports at most one non-trivial common component; on a multi-block
/// component every attachment must be a leaf (throws ShapeViolation
/// otherwise, BudgetExceeded past the budget).
bool sefe_brute_check(const SefeInstance& s, long long budget = kDefaultBudget);

/// Builds a streamed instance that is stream planar at the given omega >= 2
/// iff the three-member input admits a simultaneous embedding.  Requires a
/// tree common graph whose exclusive edges form a matching on its leaves
/// (throws ShapeViolation otherwise).  Every matched leaf grows a star of
/// fresh leaves, each pair of same-member edges contributes two adjacent
/// stream copies between those stars, and sentinel-leaf edges separate the
/// members' windows.
StreamedInstance theorem1_generate(const SefeInstance& s, int omega);

}  // namespace spb
