#include "spb/instance.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace spb {

StreamedInstance::StreamedInstance(std::vector<std::string> vertices,
                                   std::vector<std::pair<std::string, std::string>> backbone,
                                   std::vector<std::pair<std::string, std::string>> stream,
                                   int omega,
                                   std::vector<int> positions)
    : vertices_(std::move(vertices)),
      backbone_(std::move(backbone)),
      stream_(std::move(stream)),
      positions_(std::move(positions)),
      omega_(omega) {
    auto g = std::make_shared<Graph>();
    for (const auto& v : vertices_) g->add_vertex(v);  // rejects duplicates and empty labels
    for (const auto& [u, v] : backbone_) g->add_edge(u, v);
    backbone_graph_ = g;

    for (const auto& [u, v] : stream_) {
        if (u == v) throw ParseError("stream self-loop at '" + u + "'");
        if (!backbone_graph_->has_vertex(u) || !backbone_graph_->has_vertex(v))
            throw ParseError("stream endpoint not declared: (" + u + "," + v + ")");
    }
    if (positions_.empty()) {
        positions_.resize(stream_.size());
        std::iota(positions_.begin(), positions_.end(), 1);
    } else {
        if (positions_.size() != stream_.size())
            throw ParseError("positions must match the stream length");
        for (size_t k = 0; k < positions_.size(); ++k) {
            if (positions_[k] < 1 || (k > 0 && positions_[k] <= positions_[k - 1]))
                throw ParseError("positions must be strictly increasing and >= 1");
        }
    }
}

bool StreamedInstance::canonical_positions() const {
    for (size_t k = 0; k < positions_.size(); ++k)
        if (positions_[k] != static_cast<int>(k) + 1) return false;
    return true;
}

bool StreamedInstance::is_isolated(const std::string& label) const {
    return backbone_graph_->degree(backbone_graph_->id_of(label)) == 0;
}

std::vector<std::string> StreamedInstance::isolated_vertices() const {
    std::vector<std::string> out;
    for (const auto& v : vertices_)
        if (is_isolated(v)) out.push_back(v);
    return out;
}

std::vector<int> StreamedInstance::alive_at(int t) const {
    std::vector<int> out;
    for (int j = 1; j <= stream_size(); ++j) {
        int d = t - position(j);
        if (d >= 0 && d < omega_) out.push_back(j);
    }
    return out;
}

std::vector<int> StreamedInstance::time_steps() const {
    std::vector<int> out(positions_);
    std::sort(out.begin(), out.end());
    return out;
}

std::shared_ptr<const Graph> StreamedInstance::beta_graph() const {
    // collect the vertex sets of non-trivial backbone components
    const Graph& g = *backbone_graph_;
    int n = g.num_vertices();
    std::vector<int> comp(n, -1);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1 || g.degree(s) == 0) continue;
        int c = comps++;
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u))
                if (comp[v] == -1) {
                    comp[v] = c;
                    stack.push_back(v);
                }
        }
    }
    if (comps != 1)
        throw WrongCategory("expected exactly one non-trivial backbone component, found " +
                            std::to_string(comps));
    auto beta = std::make_shared<Graph>();
    for (const auto& v : vertices_)
        if (!is_isolated(v)) beta->add_vertex(v);
    for (const auto& [u, v] : backbone_) beta->add_edge(u, v);
    return beta;
}

ValidationReport validate(const StreamedInstance& i) {
    ValidationReport r;
    if (!planarity_check(i.backbone_graph())) r.violations.push_back("backbone not planar");
    for (const auto& [u, v] : i.stream())
        if (i.backbone_graph().has_edge(u, v)) {
            r.violations.push_back("stream edge in backbone");
            break;
        }
    std::set<std::pair<std::string, std::string>> seen;
    for (auto [u, v] : i.stream()) {
        if (v < u) std::swap(u, v);
        if (!seen.insert({u, v}).second) {
            r.violations.push_back("duplicate stream edge");
            break;
        }
    }
    if (i.omega() < 1) r.violations.push_back("omega < 1");
    return r;
}

Graph union_graph(const StreamedInstance& i) {
    Graph g;
    for (const auto& v : i.vertices()) g.add_vertex(v);
    for (const auto& [u, v] : i.backbone_edges()) g.add_edge(u, v);
    for (const auto& [u, v] : i.stream())
        if (!g.has_edge(u, v)) g.add_edge(u, v);
    return g;
}

std::vector<std::pair<int, int>> conflict_pairs(const StreamedInstance& i) {
    std::vector<std::pair<int, int>> out;
    for (int p = 1; p <= i.stream_size(); ++p)
        for (int q = p + 1; q <= i.stream_size(); ++q)
            if (i.position(q) - i.position(p) < i.omega()) out.push_back({p, q});
    return out;
}

const char* category_name(Category c) {
    switch (c) {
        case Category::AllIsolated: return "AllIsolated";
        case Category::Star: return "Star";
        case Category::SingleNontrivial: return "SingleNontrivial";
        case Category::Multi: return "Multi";
    }
    return "?";
}

bool union_connected(const StreamedInstance& i) {
    Graph u = union_graph(i);
    int n = u.num_vertices();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : u.neighbors(x))
            if (!seen[y]) {
                seen[y] = 1;
                reached++;
                stack.push_back(y);
            }
    }
    return reached == n;
}

Classification classify(const StreamedInstance& i) {
    if (!union_connected(i)) throw DisconnectedUnion("union graph is disconnected");
    Classification c;
    BlockCutTree bct = blocks(i.backbone_graph());
    c.component_count = bct.component_count;
    c.nontrivial_component_count = bct.nontrivial_component_count;
    c.block_count = bct.block_count();
    for (const auto& [u, v] : i.stream())
        if (i.is_isolated(u) && i.is_isolated(v)) c.iso_iso_stream_edges++;

    if (c.nontrivial_component_count == 0)
        c.category = Category::AllIsolated;
    else if (c.nontrivial_component_count > 1 || c.block_count > 1)
        c.category = Category::Multi;
    else
        c.category =
            c.iso_iso_stream_edges == 0 ? Category::Star : Category::SingleNontrivial;
    return c;
}

std::vector<StreamedInstance> split_connected(const StreamedInstance& i) {
    if (i.omega() != 1)
        throw UnsupportedOmega("component split is defined for omega = 1, got omega = " +
                               std::to_string(i.omega()));
    const Graph& g = i.backbone_graph();
    int n = g.num_vertices();

    std::vector<int> comp(n, -1);  // component index per non-isolated vertex
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1 || g.degree(s) == 0) continue;
        int c = comps++;
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u))
                if (comp[v] == -1) {
                    comp[v] = c;
                    stack.push_back(v);
                }
        }
    }
    if (comps == 0) return {};
    if (comps == 1) return {i};

    // collapsed label per component: sorted vertex labels joined by '+'
    std::vector<std::vector<std::string>> comp_labels(comps);
    for (int v = 0; v < n; ++v)
        if (comp[v] != -1) comp_labels[comp[v]].push_back(g.label_of(v));
    std::vector<std::string> collapsed(comps);
    for (int c = 0; c < comps; ++c) {
        std::sort(comp_labels[c].begin(), comp_labels[c].end());
        std::string joined;
        for (const auto& l : comp_labels[c]) {
            if (!joined.empty()) joined += "+";
            joined += l;
        }
        collapsed[c] = joined;
    }

    std::vector<StreamedInstance> out;
    for (int keep = 0; keep < comps; ++keep) {
        auto mapped = [&](const std::string& label) -> std::string {
            int v = g.id_of(label);
            if (comp[v] == -1 || comp[v] == keep) return label;
            return collapsed[comp[v]];
        };
        std::vector<std::string> verts;
        std::set<std::string> added;
        for (const auto& v : i.vertices()) {
            std::string mv = mapped(v);
            if (added.insert(mv).second) verts.push_back(mv);
        }
        std::vector<std::pair<std::string, std::string>> backbone;
        for (const auto& [u, v] : i.backbone_edges())
            if (comp[g.id_of(u)] == keep) backbone.push_back({u, v});

        std::vector<std::pair<std::string, std::string>> stream;
        std::vector<int> positions;
        std::set<std::pair<std::string, std::string>> kept;
        for (int j = 1; j <= i.stream_size(); ++j) {
            auto [u, v] = i.stream()[j - 1];
            std::string mu = mapped(u), mv = mapped(v);
            if (mu == mv) continue;  // internal to a collapsed component
            if (mv < mu) std::swap(mu, mv);
            if (!kept.insert({mu, mv}).second) continue;
            stream.push_back({mu, mv});
            positions.push_back(i.position(j));
        }
        out.emplace_back(std::move(verts), std::move(backbone), std::move(stream), i.omega(),
                         std::move(positions));
    }
    return out;
}

} // namespace spb
