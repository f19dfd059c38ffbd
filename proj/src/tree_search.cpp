#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "solve_internal.hpp"
#include "spb/solve.hpp"

// Wide windows over a tree backbone, with every stream endpoint a leaf.  A
// tree rotation has a single face whose boundary walk visits each leaf once,
// so two chords alive together can be drawn iff their endpoints do not
// alternate along that walk.  The decision reduces to finding one rotation
// under which no conflicting pair alternates.

namespace spb::detail {

bool tree_leaf_stream_shape(const StreamedInstance& i) {
    const Graph& g = i.backbone_graph();
    int n = g.num_vertices(), m = g.num_edges();
    if (n < 2 || m != n - 1) return false;
    if (!i.isolated_vertices().empty()) return false;
    for (const auto& e : i.stream())
        for (const std::string* x : {&e.first, &e.second})
            if (g.neighbors(g.id_of(*x)).size() != 1) return false;
    return true;
}

bool tree_leaf_stream_yes(const StreamedInstance& i, long long budget) {
    const Graph& g = i.backbone_graph();

    // Chords sharing an endpoint leave that leaf's single walk occurrence
    // together and can always be nested; only disjoint pairs can cross.
    std::vector<std::pair<int, int>> pairs;
    for (auto [p, q] : conflict_pairs(i)) {
        const auto& a = i.stream()[p - 1];
        const auto& b = i.stream()[q - 1];
        if (a.first == b.first || a.first == b.second || a.second == b.first ||
            a.second == b.second)
            continue;
        pairs.push_back({p, q});
    }

    // An edge joining two pendant siblings that no other stream edge uses
    // can sit in the wedge between them: between the siblings' occurrences
    // only their shared parent appears, and parents are never endpoints.
    std::map<std::string, int> uses;
    for (const auto& e : i.stream()) {
        ++uses[e.first];
        ++uses[e.second];
    }
    auto parent_of = [&](const std::string& x) {
        return g.label_of(g.neighbors(g.id_of(x))[0]);
    };
    std::set<int> shielded;
    for (int j = 1; j <= i.stream_size(); ++j) {
        const auto& e = i.stream()[j - 1];
        if (uses[e.first] == 1 && uses[e.second] == 1 &&
            parent_of(e.first) == parent_of(e.second))
            shielded.insert(j);
    }
    if (!shielded.empty()) {
        std::vector<std::pair<int, int>> kept;
        for (auto [p, q] : pairs)
            if (!shielded.count(p) && !shielded.count(q)) kept.push_back({p, q});
        pairs.swap(kept);
    }
    if (pairs.empty()) return true;

    // Only edges still in conflict constrain the rotation.  Restrict the
    // tree to their endpoints: strip leaves that are not endpoints, then
    // splice out degree-2 vertices.  Endpoints are leaves, so they are never
    // spliced, and with two or more of them no stripping isolates one.
    std::set<std::string> terminals;
    {
        std::set<int> live;
        for (auto [p, q] : pairs) {
            live.insert(p);
            live.insert(q);
        }
        for (int j : live) {
            terminals.insert(i.stream()[j - 1].first);
            terminals.insert(i.stream()[j - 1].second);
        }
    }

    const int n = g.num_vertices();
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> present(n, 1);
    auto is_terminal = [&](int w) { return terminals.count(g.label_of(w)) > 0; };
    std::vector<int> queue;
    for (int w = 0; w < n; ++w)
        if (adj[w].size() == 1 && !is_terminal(w)) queue.push_back(w);
    while (!queue.empty()) {
        int w = queue.back();
        queue.pop_back();
        if (!present[w] || adj[w].size() != 1 || is_terminal(w)) continue;
        int p = *adj[w].begin();
        present[w] = 0;
        adj[w].clear();
        adj[p].erase(w);
        if (adj[p].size() == 1 && !is_terminal(p)) queue.push_back(p);
    }
    for (int w = 0; w < n; ++w) {
        if (!present[w] || adj[w].size() != 2 || is_terminal(w)) continue;
        auto it = adj[w].begin();
        int a = *it++, b = *it;
        present[w] = 0;
        adj[w].clear();
        adj[a].erase(w);
        adj[b].erase(w);
        adj[a].insert(b);
        adj[b].insert(a);
    }

    auto reduced = std::make_shared<Graph>();
    for (int w = 0; w < n; ++w)
        if (present[w]) reduced->add_vertex(g.label_of(w));
    for (int w = 0; w < n; ++w) {
        if (!present[w]) continue;
        for (int y : adj[w])
            if (w < y) reduced->add_edge(g.label_of(w), g.label_of(y));
    }

    RotationEnumerator en(reduced, budget);
    while (auto rot = en.next()) {
        FaceSet fs = canonical_faces(*rot);
        const auto& walk = fs.walks[0];
        std::map<std::string, int> at;
        for (int k = 0; k < static_cast<int>(walk.size()); ++k)
            at[reduced->label_of(walk[k].first)] = k;
        bool ok = true;
        for (auto [p, q] : pairs) {
            const auto& a = i.stream()[p - 1];
            const auto& b = i.stream()[q - 1];
            int a1 = at.at(a.first), a2 = at.at(a.second);
            int b1 = at.at(b.first), b2 = at.at(b.second);
            if (a1 > a2) std::swap(a1, a2);
            bool first_inside = a1 < b1 && b1 < a2;
            bool second_inside = a1 < b2 && b2 < a2;
            if (first_inside != second_inside) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace spb::detail
