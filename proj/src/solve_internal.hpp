#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spb/solve.hpp"

namespace spb::detail {

int iso_iso_count(const StreamedInstance& i);

// Core of solve_star without the Decision wrapping.
std::optional<DrawingCertificate> star_search(const StreamedInstance& i, long long budget);

// split_case_r1 plus the books needed to lift a certificate of the
// contracted instance back to the original: per-vertex image (cluster
// members only) and per-stream-edge image (0 = edge vanished inside a
// cluster; otherwise the surviving index in `diamond`).
struct R1Split {
    StreamedInstance diamond;
    StreamedInstance circle;
    std::map<std::string, std::string> image;
    std::vector<int> edge_image;
};

R1Split split_r1_full(const StreamedInstance& i);

// The literal recursion. `depth` seeds the trace depth so the iterative
// engine can splice its residual tail in at the right level.
Decision algocon_faithful(const StreamedInstance& i, const SolveOptions& opts, int depth);

// Block-peeling engine over int ids; requires >= 2 blocks. Equivalent to
// the faithful recursion in answers and trace shape.
Decision algocon_engine(const StreamedInstance& i, const SolveOptions& opts);

// Tree backbone, no isolated vertices, every stream endpoint a leaf.
bool tree_leaf_stream_shape(const StreamedInstance& i);

// Decision for that shape at any omega: a rotation of the tree works iff no
// conflicting pair of stream edges alternates around its single face.
bool tree_leaf_stream_yes(const StreamedInstance& i, long long budget);

} // namespace spb::detail
