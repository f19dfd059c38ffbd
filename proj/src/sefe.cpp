#include "spb/sefe.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "disk.hpp"
#include "spb/errors.hpp"
#include "spb/graph.hpp"

namespace spb {

namespace {

std::pair<std::string, std::string> norm_pair(const std::string& a, const std::string& b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

std::string fresh_label(std::string base, std::set<std::string>& taken) {
    while (taken.count(base)) base += "'";
    taken.insert(base);
    return base;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Shared structural validation; returns the common graph. Exclusive edges
// must be disjoint from the common edges and from each other across member
// graphs, otherwise pairwise intersections exceed the common graph.
Graph checked_common(const SefeInstance& s) {
    std::set<std::string> vset(s.vertices.begin(), s.vertices.end());
    if (vset.size() != s.vertices.size())
        throw ShapeViolation("duplicate vertex label in the family");
    Graph common;
    for (const auto& v : s.vertices) common.add_vertex(v);
    std::set<std::pair<std::string, std::string>> cset;
    for (const auto& [u, v] : s.common_edges) {
        if (!vset.count(u) || !vset.count(v))
            throw ShapeViolation("common edge endpoint is not a vertex of the family");
        if (u == v) throw ShapeViolation("self-loop among the common edges");
        if (!cset.insert(norm_pair(u, v)).second)
            throw ShapeViolation("duplicate common edge");
        common.add_edge(u, v);
    }
    std::set<std::pair<std::string, std::string>> xseen;
    for (const auto& g : s.graphs) {
        for (const auto& [u, v] : g.exclusive_edges) {
            if (!vset.count(u) || !vset.count(v))
                throw ShapeViolation("exclusive edge endpoint is not a vertex of the family");
            if (u == v) throw ShapeViolation("self-loop among the exclusive edges");
            auto e = norm_pair(u, v);
            if (cset.count(e))
                throw ShapeViolation("exclusive edge duplicates a common edge");
            if (!xseen.insert(e).second)
                throw ShapeViolation("exclusive edge appears in two member graphs; "
                                     "pairwise intersections must equal the common graph");
        }
    }
    return common;
}

}  // namespace

SefeInstance star_to_sefe(const StreamedInstance& i) {
    Classification c = classify(i);
    if (c.category != Category::Star)
        throw WrongCategory(std::string("the sunflower encoding needs a star-shaped instance, got ") +
                            category_name(c.category));
    if (!i.canonical_positions())
        throw ShapeViolation("the sunflower encoding needs canonical stream positions 1..m");

    const int m = i.stream_size();
    const int omega = i.omega();

    std::set<std::string> taken(i.vertices().begin(), i.vertices().end());
    // Anchor vertex for stream edge j at time step k; names collide with
    // instance labels only if the input already uses the d:j:k form.
    std::map<std::pair<int, int>, std::string> anchor;

    SefeInstance s;
    s.vertices = i.vertices();
    for (int j = 1; j <= m; ++j) {
        int hi = std::min(j + omega, m + 1);
        for (int k = j; k < hi; ++k) {
            std::string name =
                fresh_label("d:" + std::to_string(j) + ":" + std::to_string(k), taken);
            anchor[{j, k}] = name;
            s.vertices.push_back(name);
        }
    }
    s.common_edges = i.backbone_edges();
    s.graphs.assign(m + 1, {});
    for (int j = 1; j <= m; ++j) {
        const auto& [u, v] = i.stream()[j - 1];
        int hi = std::min(j + omega, m + 1);
        // Member k carries a subdivided copy of every edge alive at step k.
        for (int k = j; k < hi; ++k) {
            s.graphs[k - 1].exclusive_edges.emplace_back(u, anchor[{j, k}]);
            s.graphs[k - 1].exclusive_edges.emplace_back(anchor[{j, k}], v);
        }
        // The closing member forces all anchors of one stream edge into a
        // single face, so the edge's chord keeps one consistent side.
        for (int k = j + 1; k < hi; ++k)
            s.graphs[m].exclusive_edges.emplace_back(anchor[{j, j}], anchor[{j, k}]);
    }
    return s;
}

bool sefe_brute_check(const SefeInstance& s, long long budget) {
    Graph common = checked_common(s);
    BlockCutTree bct = blocks(common);

    if (bct.nontrivial_component_count == 0) {
        for (const auto& g : s.graphs)
            if (!g.exclusive_edges.empty())
                throw ShapeViolation("the checker needs a non-trivial common component "
                                     "to anchor the exclusive edges");
        return true;
    }
    if (bct.nontrivial_component_count > 1)
        throw ShapeViolation("the checker supports one non-trivial common component");

    // The single non-trivial component; isolated vertices stay outside it.
    auto comp = std::make_shared<Graph>();
    for (const auto& v : s.vertices)
        if (common.degree(common.id_of(v)) > 0) comp->add_vertex(v);
    for (const auto& [u, v] : s.common_edges) comp->add_edge(u, v);

    auto in_comp = [&](const std::string& x) { return comp->has_vertex(x); };

    // Facial walks of a multi-block component revisit cutvertices, and the
    // disk model keys chord endpoints by label. Restricting attachments to
    // leaves keeps every chord endpoint at a unique walk slot.
    if (bct.block_count() > 1) {
        for (const auto& g : s.graphs)
            for (const auto& [u, v] : g.exclusive_edges)
                for (const auto& x : {u, v})
                    if (in_comp(x) && comp->degree(comp->id_of(x)) != 1)
                        throw ShapeViolation(
                            "on a multi-block common component the checker needs every "
                            "exclusive attachment to be a leaf");
    }

    // Isolated common vertices are grouped by exclusive connectivity; a
    // group lands in one face together, in every member graph at once,
    // because its placement lives in the shared embedding of the common
    // graph.
    std::map<std::string, int> qidx;
    std::vector<std::string> qs;
    for (const auto& v : s.vertices)
        if (!in_comp(v)) {
            qidx[v] = static_cast<int>(qs.size());
            qs.push_back(v);
        }
    Dsu dsu(static_cast<int>(qs.size()));
    for (const auto& g : s.graphs)
        for (const auto& [u, v] : g.exclusive_edges)
            if (!in_comp(u) && !in_comp(v)) dsu.unite(qidx[u], qidx[v]);

    struct BetaEdge {
        int graph;
        std::string a, b;
    };
    struct IsoEdge {
        int graph;
        int group;
        std::string a, b;
    };
    std::vector<BetaEdge> beta_edges;
    std::vector<IsoEdge> iso_edges;
    std::map<int, std::set<std::string>> attach;  // group root -> component endpoints
    std::map<int, std::set<int>> graphs_of;       // group root -> member graphs touching it
    for (int gi = 0; gi < static_cast<int>(s.graphs.size()); ++gi) {
        for (const auto& [u, v] : s.graphs[gi].exclusive_edges) {
            bool cu = in_comp(u), cv = in_comp(v);
            if (cu && cv) {
                beta_edges.push_back({gi, u, v});
                continue;
            }
            int root = dsu.find(qidx[cu ? v : u]);
            iso_edges.push_back({gi, root, u, v});
            graphs_of[root].insert(gi);
            if (cu) attach[root].insert(u);
            if (cv) attach[root].insert(v);
        }
    }
    for (auto& ie : iso_edges) ie.group = dsu.find(ie.group);

    std::vector<int> group_vars;
    for (const auto& [root, gset] : graphs_of) {
        (void)gset;
        group_vars.push_back(root);
    }

    const int n_groups = static_cast<int>(group_vars.size());
    const int n_vars = n_groups + static_cast<int>(beta_edges.size());

    std::map<int, int> group_face;             // group root -> assigned face
    std::vector<int> beta_face(beta_edges.size(), -1);

    long long nodes = 0;
    RotationEnumerator rotations(comp, budget);
    while (auto rot = rotations.next()) {
        FaceSet faces = canonical_faces(*rot);
        std::vector<std::optional<detail::FaceDisk>> disks(faces.size());
        auto disk_at = [&](int f) -> detail::FaceDisk& {
            if (!disks[f]) disks[f].emplace(*rot, faces, f);
            return *disks[f];
        };

        // A member's chords inside one face must embed in that disk jointly;
        // fresh endpoints are shared by label, so paths through isolated
        // vertices stay connected.
        auto disk_ok = [&](int gi, int f) {
            std::vector<std::pair<std::string, std::string>> chords;
            for (size_t k = 0; k < beta_edges.size(); ++k)
                if (beta_edges[k].graph == gi && beta_face[k] == f)
                    chords.emplace_back(beta_edges[k].a, beta_edges[k].b);
            for (const auto& ie : iso_edges) {
                auto it = group_face.find(ie.group);
                if (ie.graph == gi && it != group_face.end() && it->second == f)
                    chords.emplace_back(ie.a, ie.b);
            }
            return disk_at(f).planar_with(chords);
        };

        std::vector<std::vector<int>> candidates(n_vars);
        for (int k = 0; k < n_groups; ++k) {
            const auto& att = attach[group_vars[k]];
            for (int f = 0; f < faces.size(); ++f) {
                bool ok = true;
                for (const auto& a : att)
                    ok = ok && faces.on_boundary(f, comp->id_of(a));
                if (ok) candidates[k].push_back(f);
            }
        }
        for (size_t k = 0; k < beta_edges.size(); ++k) {
            for (int f = 0; f < faces.size(); ++f)
                if (faces.on_boundary(f, comp->id_of(beta_edges[k].a)) &&
                    faces.on_boundary(f, comp->id_of(beta_edges[k].b)))
                    candidates[n_groups + k].push_back(f);
        }

        std::function<bool(int)> place = [&](int k) -> bool {
            if (k == n_vars) return true;
            for (int f : candidates[k]) {
                if (++nodes > budget)
                    throw BudgetExceeded("face assignment search for the family exceeded "
                                         "its budget of " + std::to_string(budget) +
                                         " placements");
                bool ok = true;
                if (k < n_groups) {
                    int root = group_vars[k];
                    group_face[root] = f;
                    for (int gi : graphs_of[root]) ok = ok && disk_ok(gi, f);
                    if (ok && place(k + 1)) return true;
                    group_face.erase(root);
                } else {
                    size_t idx = k - n_groups;
                    beta_face[idx] = f;
                    ok = disk_ok(beta_edges[idx].graph, f);
                    if (ok && place(k + 1)) return true;
                    beta_face[idx] = -1;
                }
            }
            return false;
        };

        if (place(0)) {
            for (int gi = 0; gi < static_cast<int>(s.graphs.size()); ++gi)
                for (int f = 0; f < faces.size(); ++f)
                    if (!disk_ok(gi, f))
                        throw Error("internal: accepted face assignment fails its disk check");
            group_face.clear();
            std::fill(beta_face.begin(), beta_face.end(), -1);
            return true;
        }
        group_face.clear();
        std::fill(beta_face.begin(), beta_face.end(), -1);
    }
    return false;
}

StreamedInstance theorem1_generate(const SefeInstance& s, int omega) {
    if (omega < 2)
        throw ShapeViolation("the hard-instance construction needs omega >= 2");
    if (s.graphs.size() != 3)
        throw ShapeViolation("the hard-instance construction takes exactly three member graphs");
    Graph tree = checked_common(s);
    BlockCutTree bct = blocks(tree);
    if (bct.component_count != 1 || tree.num_edges() != tree.num_vertices() - 1)
        throw ShapeViolation("the common graph must be a tree");

    std::set<std::string> matched;
    for (const auto& g : s.graphs) {
        for (const auto& [u, v] : g.exclusive_edges) {
            for (const auto& x : {u, v}) {
                if (tree.degree(tree.id_of(x)) != 1)
                    throw ShapeViolation("exclusive edges must join leaves of the tree");
                if (!matched.insert(x).second)
                    throw ShapeViolation("exclusive edges must form a matching");
            }
        }
    }

    // Anchor for the sentinel leaves: the lexicographically smallest
    // non-leaf vertex.
    std::string rho;
    for (const auto& v : tree.labels())
        if (tree.degree(tree.id_of(v)) != 1 && (rho.empty() || v < rho)) rho = v;
    if (rho.empty())
        throw ShapeViolation("the common tree has no internal vertex to carry the sentinels");

    std::set<std::string> taken(s.vertices.begin(), s.vertices.end());
    std::vector<std::string> verts = s.vertices;
    std::vector<std::pair<std::string, std::string>> bb = s.common_edges;

    auto edge_id = [](const std::pair<std::string, std::string>& e) {
        auto [a, b] = norm_pair(e.first, e.second);
        return a + "-" + b;
    };

    // Each matched leaf grows a star of |E_i|-1 fresh leaves, one per pair
    // its edge participates in; leaf a of u and leaf a of v always serve the
    // same pair.
    std::map<std::string, std::vector<std::string>> star;  // matched leaf -> its leaves
    for (const auto& g : s.graphs) {
        int q = static_cast<int>(g.exclusive_edges.size()) - 1;
        for (const auto& e : g.exclusive_edges) {
            for (const auto& c : {e.first, e.second}) {
                for (int j = 1; j <= q; ++j) {
                    std::string leaf =
                        fresh_label(c + "^" + std::to_string(j) + ":" + edge_id(e), taken);
                    star[c].push_back(leaf);
                    verts.push_back(leaf);
                    bb.emplace_back(c, leaf);
                }
            }
        }
    }

    auto add_sentinel = [&](int idx) {
        std::string name = fresh_label("s" + std::to_string(idx), taken);
        verts.push_back(name);
        bb.emplace_back(rho, name);
        return name;
    };
    std::vector<std::string> sentinels;
    for (int idx = 1; idx <= 6; ++idx) sentinels.push_back(add_sentinel(idx));
    int next_sentinel = 7;

    std::vector<std::pair<std::string, std::string>> stream;
    std::map<std::string, int> used;  // matched leaf -> leaves consumed so far
    auto pair_copy = [&](const std::pair<std::string, std::string>& e) {
        auto [u, v] = norm_pair(e.first, e.second);
        int a = used[u]++;
        int b = used[v]++;
        if (a != b || a >= static_cast<int>(star[u].size()))
            throw Error("internal: star-leaf bookkeeping diverged");
        stream.emplace_back(star[u][a], star[v][b]);
    };

    for (int gi = 0; gi < 3; ++gi) {
        std::vector<std::pair<std::string, std::string>> edges = s.graphs[gi].exclusive_edges;
        for (auto& e : edges) e = norm_pair(e.first, e.second);
        std::sort(edges.begin(), edges.end());
        // Adjacent copies of both pair members keep them in one shared
        // window; members themselves are separated below.
        for (size_t p = 0; p < edges.size(); ++p)
            for (size_t q = p + 1; q < edges.size(); ++q) {
                pair_copy(edges[p]);
                pair_copy(edges[q]);
            }
        stream.emplace_back(sentinels[2 * gi], sentinels[2 * gi + 1]);
        if (gi < 2)
            // Padding widens the gap between consecutive members to omega,
            // so no two copies from different members are ever alive
            // together.
            for (int t = 0; t < omega - 2; ++t) {
                std::string a = add_sentinel(next_sentinel++);
                std::string b = add_sentinel(next_sentinel++);
                stream.emplace_back(a, b);
            }
    }

    long long expect = static_cast<long long>(s.vertices.size()) + 6 + 4LL * (omega - 2);
    for (const auto& g : s.graphs)
        expect += 2LL * g.exclusive_edges.size() *
                  (static_cast<long long>(g.exclusive_edges.size()) - 1);
    if (static_cast<long long>(verts.size()) != expect)
        throw Error("internal: hard-instance vertex count diverged from its formula");

    return StreamedInstance(std::move(verts), std::move(bb), std::move(stream), omega);
}

}  // namespace spb
