#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spb/rotation.hpp"

namespace spb::detail {

// The fixed part of one face's disk graph: the facial walk laid out as a
// cycle plus an apex joined to every walk vertex, which pins the boundary's
// cyclic order. Stream edges are appended per check as chords (both
// endpoints on the walk) or pendant attachments (isolated endpoints become
// fresh vertices). Assumes simple facial walks; the callers guarantee this
// by only checking one-block backbones.
class FaceDisk {
public:
    // The symbolic sole face of an edge-less backbone: no cycle, no apex.
    FaceDisk() = default;

    FaceDisk(const RotationSystem& r, const FaceSet& faces, int face) {
        const auto& walk = faces.walks[face];
        int L = static_cast<int>(walk.size());
        for (auto [tail, head] : walk) {
            (void)head;
            pos_.emplace(r.graph().label_of(tail), n_);
            ++n_;
        }
        int apex = n_++;
        for (int k = 0; k < L; ++k) {
            add_base(k, (k + 1) % L);
            add_base(apex, k);
        }
    }

    bool on_boundary(const std::string& label) const { return pos_.count(label) != 0; }

    bool planar_with(const std::vector<std::pair<std::string, std::string>>& chords) const {
        std::vector<std::pair<int, int>> edges = base_;
        std::unordered_map<std::string, int> fresh;
        int n = n_;
        auto id_of = [&](const std::string& x) {
            auto it = pos_.find(x);
            if (it != pos_.end()) return it->second;
            auto [fit, added] = fresh.emplace(x, n);
            if (added) ++n;
            return fit->second;
        };
        for (const auto& [a, b] : chords) {
            int ia = id_of(a), ib = id_of(b);
            if (ia == ib) continue;
            edges.push_back(ia < ib ? std::pair{ia, ib} : std::pair{ib, ia});
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        return planar_int(n, edges);
    }

private:
    void add_base(int a, int b) {
        auto e = a < b ? std::pair{a, b} : std::pair{b, a};
        for (const auto& x : base_)
            if (x == e) return;  // the length-2 walk of a single-edge block
        base_.push_back(e);
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> base_;
    std::unordered_map<std::string, int> pos_;
};

} // namespace spb::detail
