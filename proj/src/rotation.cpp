#include "spb/rotation.hpp"

#include <algorithm>
#include <set>

namespace spb {

RotationSystem::RotationSystem() : g_(std::make_shared<Graph>()) {}

RotationSystem::RotationSystem(std::shared_ptr<const Graph> g,
                               std::vector<std::vector<VertexId>> order)
    : g_(std::move(g)), order_(std::move(order)) {
    anchor();
}

void RotationSystem::anchor() {
    for (auto& cyc : order_) {
        if (cyc.size() < 2) continue;
        auto best = std::min_element(cyc.begin(), cyc.end(), [this](VertexId a, VertexId b) {
            return g_->label_of(a) < g_->label_of(b);
        });
        std::rotate(cyc.begin(), best, cyc.end());
    }
}

RotationSystem RotationSystem::from_label_map(
    std::shared_ptr<const Graph> g,
    const std::map<std::string, std::vector<std::string>>& order) {
    if (static_cast<int>(order.size()) != g->num_vertices())
        throw MalformedCertificate("rotation must list every backbone vertex exactly once");
    std::vector<std::vector<VertexId>> ids(g->num_vertices());
    for (const auto& [label, cyc] : order) {
        if (!g->has_vertex(label))
            throw MalformedCertificate("rotation names unknown vertex '" + label + "'");
        VertexId v = g->id_of(label);
        std::multiset<std::string> given(cyc.begin(), cyc.end());
        std::multiset<std::string> expect;
        for (VertexId u : g->neighbors(v)) expect.insert(g->label_of(u));
        if (given != expect)
            throw MalformedCertificate("rotation at '" + label +
                                       "' is not a permutation of its neighbors");
        for (const auto& nl : cyc) ids[v].push_back(g->id_of(nl));
    }
    return RotationSystem(std::move(g), std::move(ids));
}

VertexId RotationSystem::successor(VertexId at, VertexId from) const {
    const auto& cyc = order_[at];
    for (size_t i = 0; i < cyc.size(); ++i)
        if (cyc[i] == from) return cyc[(i + 1) % cyc.size()];
    throw ParseError("successor query for a non-neighbor");
}

std::map<std::string, std::vector<std::string>> RotationSystem::to_labels() const {
    std::map<std::string, std::vector<std::string>> out;
    for (int v = 0; v < g_->num_vertices(); ++v) {
        std::vector<std::string> cyc;
        for (VertexId u : order_[v]) cyc.push_back(g_->label_of(u));
        out[g_->label_of(v)] = std::move(cyc);
    }
    return out;
}

bool RotationSystem::operator==(const RotationSystem& other) const {
    if (g_.get() != other.g_.get() && !(*g_ == *other.g_)) return false;
    return to_labels() == other.to_labels();
}

bool FaceSet::on_boundary(int face, VertexId v) const {
    const auto& b = boundary[face];
    return std::binary_search(b.begin(), b.end(), v);
}

FaceSet canonical_faces(const RotationSystem& r) {
    const Graph& g = r.graph();
    std::vector<std::pair<VertexId, VertexId>> darts;
    for (auto [u, v] : g.edges()) {
        darts.push_back({u, v});
        darts.push_back({v, u});
    }
    std::sort(darts.begin(), darts.end(),
              [&g](const std::pair<VertexId, VertexId>& a, const std::pair<VertexId, VertexId>& b) {
                  if (g.label_of(a.first) != g.label_of(b.first))
                      return g.label_of(a.first) < g.label_of(b.first);
                  return g.label_of(a.second) < g.label_of(b.second);
              });
    std::set<std::pair<VertexId, VertexId>> seen;

    FaceSet out;
    for (auto start : darts) {
        if (seen.count(start)) continue;
        std::vector<std::pair<VertexId, VertexId>> walk;
        auto cur = start;
        do {
            seen.insert(cur);
            walk.push_back(cur);
            VertexId w = r.successor(cur.second, cur.first);
            cur = {cur.second, w};
        } while (cur != start);
        std::vector<VertexId> bound;
        for (auto [tail, head] : walk) {
            (void)head;
            bound.push_back(tail);
        }
        std::sort(bound.begin(), bound.end());
        bound.erase(std::unique(bound.begin(), bound.end()), bound.end());
        out.walks.push_back(std::move(walk));
        out.boundary.push_back(std::move(bound));
    }
    return out;
}

bool is_planar_rotation(const RotationSystem& r) {
    const Graph& g = r.graph();
    return canonical_faces(r).size() == 2 - g.num_vertices() + g.num_edges();
}

RotationEnumerator::RotationEnumerator(std::shared_ptr<const Graph> g, long long budget)
    : g_(std::move(g)) {
    int n = g_->num_vertices();
    for (int v = 0; v < n; ++v) vertex_order_.push_back(v);
    std::sort(vertex_order_.begin(), vertex_order_.end(), [this](VertexId a, VertexId b) {
        return g_->label_of(a) < g_->label_of(b);
    });
    anchors_.assign(n, -1);
    tails_.assign(n, {});
    for (int v = 0; v < n; ++v) {
        const auto& nb = g_->neighbors(v);  // sorted by label already
        if (nb.empty()) continue;
        anchors_[v] = nb[0];
        tails_[v].assign(nb.begin() + 1, nb.end());
        for (long long k = 2; k < static_cast<long long>(nb.size()); ++k) {
            raw_count_ *= k;
            if (raw_count_ > budget)
                throw BudgetExceeded("rotation space exceeds budget of " + std::to_string(budget));
        }
    }
}

bool RotationEnumerator::advance() {
    // odometer: step the least significant vertex (largest label) first
    auto label_less = [this](VertexId a, VertexId b) {
        return g_->label_of(a) < g_->label_of(b);
    };
    for (auto it = vertex_order_.rbegin(); it != vertex_order_.rend(); ++it) {
        VertexId v = *it;
        if (tails_[v].size() < 2) continue;
        if (std::next_permutation(tails_[v].begin(), tails_[v].end(), label_less)) return true;
        // wrapped around to the sorted permutation; carry on to the next vertex
    }
    return false;
}

std::optional<RotationSystem> RotationEnumerator::next() {
    while (!exhausted_) {
        if (first_)
            first_ = false;
        else if (!advance()) {
            exhausted_ = true;
            break;
        }
        std::vector<std::vector<VertexId>> order(g_->num_vertices());
        for (int v = 0; v < g_->num_vertices(); ++v) {
            if (anchors_[v] == -1) continue;
            order[v].push_back(anchors_[v]);
            order[v].insert(order[v].end(), tails_[v].begin(), tails_[v].end());
        }
        RotationSystem r(g_, std::move(order));
        if (is_planar_rotation(r)) return r;
    }
    return std::nullopt;
}

} // namespace spb
