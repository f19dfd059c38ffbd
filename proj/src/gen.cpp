#include "spb/gen.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spb/errors.hpp"
#include "spb/graph.hpp"

namespace spb {

namespace {

std::pair<std::string, std::string> norm_pair(const std::string& a, const std::string& b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

std::vector<std::string> numbered(const std::string& prefix, int count) {
    std::vector<std::string> out;
    out.reserve(count);
    for (int k = 1; k <= count; ++k) out.push_back(prefix + std::to_string(k));
    return out;
}

// Random maximal planar graph: plant a triangle, then repeatedly drop a new
// vertex into a random face and join it to the face's three corners.
std::vector<std::pair<int, int>> apollonian_edges(int n, SplitMix64& rng) {
    std::vector<std::pair<int, int>> edges;
    if (n == 2) edges.push_back({0, 1});
    if (n < 3) return edges;
    edges = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 1, 2}};
    for (int v = 3; v < n; ++v) {
        int pick = rng.below(static_cast<int>(faces.size()));
        std::array<int, 3> f = faces[pick];
        faces[pick] = {f[0], f[1], v};
        faces.push_back({f[1], f[2], v});
        faces.push_back({f[0], f[2], v});
        for (int c : f) edges.push_back({c, v});
    }
    return edges;
}

// Uniform sample of `want` distinct non-backbone pairs, in sampled order.
// Rejection sampling keeps this workable at tens of millions of candidate
// pairs without materializing them.
std::vector<std::pair<std::string, std::string>> sample_stream(
    const std::vector<std::string>& verts,
    const std::set<std::pair<std::string, std::string>>& backbone, int want,
    SplitMix64& rng) {
    const int n = static_cast<int>(verts.size());
    const long long all = static_cast<long long>(n) * (n - 1) / 2;
    if (all - static_cast<long long>(backbone.size()) < want)
        throw ShapeViolation("fewer non-backbone pairs than requested stream edges");
    std::set<std::pair<std::string, std::string>> seen;
    std::vector<std::pair<std::string, std::string>> out;
    while (static_cast<int>(out.size()) < want) {
        int a = rng.below(n), b = rng.below(n);
        if (a == b) continue;
        auto e = norm_pair(verts[a], verts[b]);
        if (backbone.count(e) || !seen.insert(e).second) continue;
        out.push_back(e);
    }
    return out;
}

}  // namespace

StreamedInstance gen_random_instance(const RandomSpec& spec) {
    if (spec.vertices < 1) throw ShapeViolation("the generator needs at least one vertex");
    SplitMix64 rng(spec.seed);
    std::vector<std::string> verts = numbered("v", spec.vertices);

    std::set<std::pair<std::string, std::string>> kept;
    std::vector<std::pair<std::string, std::string>> bb;
    for (auto [a, b] : apollonian_edges(spec.vertices, rng)) {
        if (rng.chance(spec.drop)) continue;
        auto e = norm_pair(verts[a], verts[b]);
        kept.insert(e);
        bb.push_back(e);
    }
    auto stream = sample_stream(verts, kept, spec.stream, rng);
    return StreamedInstance(std::move(verts), std::move(bb), std::move(stream), spec.omega);
}

StreamedInstance gen_star_instance(int block, int isolated, int stream, int omega,
                                   std::uint64_t seed) {
    if (block < 3) throw ShapeViolation("the star generator needs a block of at least 3");
    if (isolated < 0 || stream < isolated)
        throw ShapeViolation("every isolated vertex needs a stream edge of its own");
    SplitMix64 rng(seed);
    std::vector<std::string> verts = numbered("v", block);
    std::vector<std::pair<std::string, std::string>> bb;
    std::set<std::pair<std::string, std::string>> kept;
    for (int k = 0; k < block; ++k) {
        auto e = norm_pair(verts[k], verts[(k + 1) % block]);
        bb.push_back(e);
        kept.insert(e);
    }
    // Planar chords keep the block 2-connected while diversifying faces.
    {
        Graph g;
        for (const auto& v : verts) g.add_vertex(v);
        for (const auto& [a, b] : bb) g.add_edge(a, b);
        for (int tries = 0; tries < block; ++tries) {
            int a = rng.below(block), b = rng.below(block);
            if (a == b) continue;
            auto e = norm_pair(verts[a], verts[b]);
            if (kept.count(e)) continue;
            Graph trial = g;
            trial.add_edge(e.first, e.second);
            if (!planarity_check(trial)) continue;
            g = std::move(trial);
            kept.insert(e);
            bb.push_back(e);
        }
    }
    std::vector<std::string> isos = numbered("q", isolated);
    verts.insert(verts.end(), isos.begin(), isos.end());

    std::set<std::pair<std::string, std::string>> used = kept;
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& q : isos) {
        auto e = norm_pair(q, verts[rng.below(block)]);
        used.insert(e);
        edges.push_back(e);
    }
    int guard = 0;
    while (static_cast<int>(edges.size()) < stream) {
        if (++guard > 10000)
            throw ShapeViolation("the star generator ran out of distinct stream pairs");
        // Block-block or block-isolated, never isolated-isolated.
        int a = rng.below(block);
        int b = rng.below(block + isolated);
        if (a == b) continue;
        auto e = norm_pair(verts[a], verts[b]);
        if (used.count(e)) continue;
        used.insert(e);
        edges.push_back(e);
    }
    // Shuffle so the isolated-coverage edges are not always a prefix.
    for (int k = static_cast<int>(edges.size()) - 1; k > 0; --k)
        std::swap(edges[k], edges[rng.below(k + 1)]);
    return StreamedInstance(std::move(verts), std::move(bb), std::move(edges), omega);
}

StreamedInstance gen_tree_instance(int vertices, int stream, int omega, std::uint64_t seed,
                                   bool leaves_only) {
    if (vertices < 2) throw ShapeViolation("the tree generator needs at least two vertices");
    SplitMix64 rng(seed);
    std::vector<std::string> verts = numbered("v", vertices);
    std::vector<std::pair<std::string, std::string>> bb;
    std::vector<int> deg(vertices, 0);
    std::set<std::pair<std::string, std::string>> kept;
    for (int k = 1; k < vertices; ++k) {
        int p = rng.below(k);
        ++deg[k];
        ++deg[p];
        auto e = norm_pair(verts[k], verts[p]);
        bb.push_back(e);
        kept.insert(e);
    }
    std::vector<std::string> pool;
    std::set<std::string> pool_set;
    for (int k = 0; k < vertices; ++k)
        if (!leaves_only || deg[k] == 1) {
            pool.push_back(verts[k]);
            pool_set.insert(verts[k]);
        }

    const int p = static_cast<int>(pool.size());
    long long blocked = 0;
    for (const auto& [a, b] : kept)
        if (pool_set.count(a) && pool_set.count(b)) ++blocked;
    long long all = static_cast<long long>(p) * (p - 1) / 2;
    if (all - blocked < stream)
        throw ShapeViolation("fewer eligible pairs than requested stream edges");
    std::set<std::pair<std::string, std::string>> seen;
    std::vector<std::pair<std::string, std::string>> edges;
    while (static_cast<int>(edges.size()) < stream) {
        int a = rng.below(p), b = rng.below(p);
        if (a == b) continue;
        auto e = norm_pair(pool[a], pool[b]);
        if (kept.count(e) || !seen.insert(e).second) continue;
        edges.push_back(e);
    }
    return StreamedInstance(std::move(verts), std::move(bb), std::move(edges), omega);
}

SefeInstance gen_family_instance(int spine, int pairs1, int pairs2, int pairs3,
                                 std::uint64_t seed) {
    if (spine < 2) throw ShapeViolation("the family generator needs a spine of at least 2");
    if (pairs1 < 0 || pairs2 < 0 || pairs3 < 0 || pairs1 + pairs2 + pairs3 < 1)
        throw ShapeViolation("the family generator needs at least one leaf pair");
    SplitMix64 rng(seed);
    SefeInstance s;
    s.vertices = numbered("s", spine);
    for (int k = 0; k + 1 < spine; ++k)
        s.common_edges.emplace_back(s.vertices[k], s.vertices[k + 1]);

    const int total = 2 * (pairs1 + pairs2 + pairs3);
    std::vector<std::string> leaves = numbered("l", total);
    for (const auto& l : leaves) {
        s.common_edges.emplace_back(s.vertices[rng.below(spine)], l);
        s.vertices.push_back(l);
    }
    for (int k = total - 1; k > 0; --k) std::swap(leaves[k], leaves[rng.below(k + 1)]);

    s.graphs.assign(3, {});
    int at = 0;
    const int want[3] = {pairs1, pairs2, pairs3};
    for (int gi = 0; gi < 3; ++gi)
        for (int k = 0; k < want[gi]; ++k, at += 2)
            s.graphs[gi].exclusive_edges.push_back(norm_pair(leaves[at], leaves[at + 1]));
    return s;
}

}  // namespace spb
