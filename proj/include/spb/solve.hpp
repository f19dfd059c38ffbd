#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spb/certificate.hpp"
#include "spb/instance.hpp"
#include "spb/rotation.hpp"

namespace spb {

// Rules a decision can record. Split covers both the union-component split
// and the per-component split; Base1/Base2/R1/R2 belong to the omega=1
// recursion; Star is the direct star solver; Exhaustive marks arms with no
// polynomial procedure (brute search, saturated windows, tree streams).
enum class Rule { Split, R1, R2, Base1, Base2, Star, Exhaustive };

const char* rule_name(Rule r);

struct TraceEntry {
    Rule rule;
    int depth = 0;
    int blocks = 0;    // backbone block count before the step
    int iso_iso = 0;   // stream edges between two isolated vertices before the step
    bool np_hard = false;
    std::string note;
};

// One certified leaf of a decomposition. The instance is checkable on its
// own: one block plus isolated vertices.
struct PieceWitness {
    StreamedInstance instance;
    DrawingCertificate certificate;
};

// `witness` is set on yes for instances whose backbone is one block plus
// isolated vertices (and then check_certificate accepts it). Composite
// instances carry their decomposition in `pieces` instead; both are left
// empty when witnesses were not requested.
struct Decision {
    bool yes = false;
    std::optional<DrawingCertificate> witness;
    std::vector<PieceWitness> pieces;
    std::vector<TraceEntry> trace;
};

enum class DecideMode { Auto, Algocon, Star, Exhaustive };

// Which omega=1 recursion runs under algocon: the literal recursive one or
// the iterative block-peeling engine (identical answers and traces; the
// engine exists so 10^4-vertex instances finish fast).
enum class EngineImpl { Auto, Faithful, Iterative };

struct SolveOptions {
    long long budget = kDefaultBudget;
    bool want_witness = true;
    // n + m above which EngineImpl::Auto switches to the iterative engine.
    int engine_threshold = 300;
    EngineImpl impl = EngineImpl::Auto;
    // When set, the iterative engine deposits up to sample_piece_cap of its
    // peeled star pieces here (with their certificates) for cross-checking.
    std::vector<PieceWitness>* sample_pieces_out = nullptr;
    int sample_piece_cap = 25;
};

// Decides instances whose backbone is one block plus isolated vertices with
// no stream edge between two isolated vertices; edge-less backbones are
// handled via their unique trivial certificate. Enumerates planar rotations
// of the block and backtracks over face assignments in stream order, with
// candidate faces restricted by endpoint incidence and pruned by incremental
// disk-planarity checks. Works for every omega. Throws WrongCategory on
// other shapes, BudgetExceeded when the rotation space or the search
// overruns opts.budget.
Decision solve_star(const StreamedInstance& i, const SolveOptions& opts = {});

// Plain enumeration: every planar rotation of the block crossed with every
// raw face assignment, each checked by check_certificate. Same shape
// contract as solve_star. Kept deliberately naive; this is the reference
// the clever paths are measured against.
std::optional<DrawingCertificate> exhaustive_search(const StreamedInstance& i,
                                                    long long budget = kDefaultBudget);

bool brute_oracle(const StreamedInstance& i, long long budget = kDefaultBudget);

// Case split for omega=1, one block plus isolated vertices, at least one
// stream edge between isolated vertices. First: stream-connected clusters
// of isolated vertices collapse to single vertices (labels "z", "z2", ...),
// giving a star-eligible instance. Second: the block collapses to one
// vertex "g", giving an all-isolated instance. Positions survive; edges
// inside a contracted set vanish; parallel copies keep the earliest
// position. Throws UnsupportedOmega / WrongShape.
std::pair<StreamedInstance, StreamedInstance> split_case_r1(const StreamedInstance& i);

// Case split for omega=1 when the backbone has several blocks. Peels a
// deterministic leaf block beta (root = block holding the smallest backbone
// edge; smallest-labelled leaf otherwise) by splitting its cutvertex v into
// v' (beta side) and v (rest side), re-attaching v's stream edges by
// endpoint side, and appending stream edge (v', v) last. First returned
// instance: everything outside beta contracted (star-eligible). Second:
// beta contracted to "g" (one block fewer). Throws UnsupportedOmega /
// WrongShape.
std::pair<StreamedInstance, StreamedInstance> split_case_r2(const StreamedInstance& i);

// The omega=1 decision recursion over Base1/Base2/R1/R2. Needs at most one
// non-trivial backbone component (WrongShape; split_connected produces such
// parts) and omega == 1 (UnsupportedOmega). The (block count, isolated-
// isolated edge count) pair decreases lexicographically along the trace.
Decision algocon(const StreamedInstance& i, const SolveOptions& opts = {});

// Top-level dispatch. Auto: omega=1 goes through the split + algocon route;
// other omegas run solve_star on star shapes, exhaustive search on one-block
// shapes with isolated-isolated stream edges, and fall back per
// union-component to saturated-window planarity, the leaf-attached tree
// search, or a cutvertex-aware exhaustive search (which cannot produce a
// certificate), throwing UnsupportedShape only for union-connected backbones
// with several non-trivial components at omega >= 2. Trace entries flag the
// NP-hard regimes. Invalid instances throw ParseError.
Decision decide(const StreamedInstance& i, DecideMode mode = DecideMode::Auto,
                const SolveOptions& opts = {});

} // namespace spb
