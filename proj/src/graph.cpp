#include "spb/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace spb {

void Graph::add_vertex(const std::string& label) {
    if (label.empty())
        throw ParseError("empty vertex label");
    if (has_vertex(label))
        throw ParseError("duplicate vertex '" + label + "'");
    index_.emplace(label, num_vertices());
    labels_.push_back(label);
    adj_.emplace_back();
}

void Graph::add_edge(const std::string& u, const std::string& v) {
    if (u == v)
        throw ParseError("self-loop at '" + u + "'");
    VertexId a = id_of(u), b = id_of(v);
    if (has_edge(a, b))
        throw ParseError("duplicate edge (" + u + "," + v + ")");
    auto by_label = [this](VertexId x, VertexId y) { return labels_[x] < labels_[y]; };
    adj_[a].insert(std::upper_bound(adj_[a].begin(), adj_[a].end(), b, by_label), b);
    adj_[b].insert(std::upper_bound(adj_[b].begin(), adj_[b].end(), a, by_label), a);
    auto [p, q] = labels_[a] < labels_[b] ? std::pair{a, b} : std::pair{b, a};
    auto edge_less = [this](const std::pair<VertexId, VertexId>& e,
                            const std::pair<VertexId, VertexId>& f) {
        if (labels_[e.first] != labels_[f.first]) return labels_[e.first] < labels_[f.first];
        return labels_[e.second] < labels_[f.second];
    };
    edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), std::pair{p, q}, edge_less),
                  {p, q});
}

bool Graph::has_vertex(const std::string& label) const {
    return index_.count(label) != 0;
}

VertexId Graph::id_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw ParseError("unknown vertex '" + label + "'");
    return it->second;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    const auto& a = adj_[u];
    return std::find(a.begin(), a.end(), v) != a.end();
}

bool Graph::has_edge(const std::string& u, const std::string& v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    return has_edge(id_of(u), id_of(v));
}

bool Graph::operator==(const Graph& other) const {
    if (labels_ != other.labels_) return false;
    std::set<std::pair<std::string, std::string>> a, b;
    for (auto [u, v] : edges_) a.insert({labels_[u], labels_[v]});
    for (auto [u, v] : other.edges_) b.insert({other.labels_[u], other.labels_[v]});
    return a == b;
}

bool planar_int(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 4) return true;  // every graph on at most four vertices is planar
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(n);
    for (auto [u, v] : edges) boost::add_edge(u, v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

bool planarity_check(const Graph& g) {
    return planar_int(g.num_vertices(), g.edges());
}

Graph contract_edge(const Graph& g, const std::string& u, const std::string& v) {
    if (!g.has_edge(u, v))
        throw EdgeNotFound("no edge (" + u + "," + v + ") to contract");
    const std::string merged = std::min(u, v) + "+" + std::max(u, v);
    VertexId iu = g.id_of(u), iv = g.id_of(v);
    VertexId keep = std::min(iu, iv), drop = std::max(iu, iv);

    Graph out;
    for (int i = 0; i < g.num_vertices(); ++i) {
        if (i == keep)
            out.add_vertex(merged);
        else if (i != drop)
            out.add_vertex(g.label_of(i));
    }
    auto mapped = [&](VertexId x) -> std::string {
        return (x == iu || x == iv) ? merged : g.label_of(x);
    };
    for (auto [a, b] : g.edges()) {
        std::string ma = mapped(a), mb = mapped(b);
        if (ma == mb) continue;               // the contracted edge itself
        if (!out.has_edge(ma, mb)) out.add_edge(ma, mb);
    }
    return out;
}

BiconnCore biconnected_core(int n, const std::vector<std::vector<int>>& adj) {
    BiconnCore out;
    out.vertex_block_count.assign(n, 0);

    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_iter(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    auto emit_block = [&](int u, int v) {
        // pop edges down to and including (u,v); they form one block
        std::vector<std::pair<int, int>> es;
        while (!edge_stack.empty()) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            es.push_back(e);
            if (e.first == u && e.second == v) break;
        }
        std::set<int> vs;
        for (auto [a, b] : es) {
            vs.insert(a);
            vs.insert(b);
        }
        out.block_vertices.emplace_back(vs.begin(), vs.end());
        std::sort(es.begin(), es.end());
        out.block_edges.push_back(std::move(es));
        for (int x : vs) out.vertex_block_count[x]++;
    };

    for (int s = 0; s < n; ++s) {
        if (disc[s] != -1) continue;
        out.component_count++;
        bool has_edge_in_comp = false;
        // iterative DFS; recursion would overflow on the 10^4-vertex inputs
        std::vector<int> stack{s};
        disc[s] = low[s] = timer++;
        while (!stack.empty()) {
            int u = stack.back();
            if (child_iter[u] < static_cast<int>(adj[u].size())) {
                int v = adj[u][child_iter[u]++];
                if (v == parent[u]) continue;
                has_edge_in_comp = true;
                if (disc[v] == -1) {
                    parent[v] = u;
                    disc[v] = low[v] = timer++;
                    edge_stack.push_back({u, v});
                    stack.push_back(v);
                } else if (disc[v] < disc[u]) {
                    edge_stack.push_back({u, v});
                    low[u] = std::min(low[u], disc[v]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back();
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] >= disc[p]) emit_block(p, u);
                }
            }
        }
        if (has_edge_in_comp) out.nontrivial_component_count++;
    }
    return out;
}

bool BlockCutTree::is_cutvertex(const std::string& label) const {
    return std::binary_search(cutvertices.begin(), cutvertices.end(), label);
}

BlockCutTree blocks(const Graph& g) {
    int n = g.num_vertices();
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        adj[i].assign(g.neighbors(i).begin(), g.neighbors(i).end());
    BiconnCore core = biconnected_core(n, adj);

    BlockCutTree out;
    out.component_count = core.component_count;
    out.nontrivial_component_count = core.nontrivial_component_count;

    // order blocks by their sorted label lists so ids are reproducible
    std::vector<int> order(core.block_vertices.size());
    std::vector<std::vector<std::string>> keys(core.block_vertices.size());
    for (size_t b = 0; b < core.block_vertices.size(); ++b) {
        for (int v : core.block_vertices[b]) keys[b].push_back(g.label_of(v));
        std::sort(keys[b].begin(), keys[b].end());
        order[b] = static_cast<int>(b);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });

    for (int b : order) {
        out.blocks.push_back(keys[b]);
        std::vector<std::pair<std::string, std::string>> es;
        for (auto [u, v] : core.block_edges[b]) {
            std::string lu = g.label_of(u), lv = g.label_of(v);
            if (lv < lu) std::swap(lu, lv);
            es.push_back({lu, lv});
        }
        std::sort(es.begin(), es.end());
        out.block_edges.push_back(std::move(es));
    }
    for (int v = 0; v < n; ++v)
        if (core.vertex_block_count[v] >= 2) out.cutvertices.push_back(g.label_of(v));
    std::sort(out.cutvertices.begin(), out.cutvertices.end());

    for (const auto& bl : out.blocks) {
        std::vector<std::string> cuts;
        for (const auto& v : bl)
            if (out.is_cutvertex(v)) cuts.push_back(v);
        out.block_cuts.push_back(std::move(cuts));
    }
    return out;
}

} // namespace spb
