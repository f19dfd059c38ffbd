#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "solve_internal.hpp"
#include "spb/solve.hpp"

// Iterative form of the omega = 1 recursion.  Instead of materializing the
// two contracted instances at every level it keeps one mutable copy of the
// graph and the stream, peels leaf blocks in the same order the recursion
// would, and only builds a concrete sub-instance when a caller wants its
// certificate.  Answers and traces match the recursive form entry for entry.

namespace spb::detail {

namespace {

struct SEdge {
    int u, v;
    int pos;
    bool alive = true;
};

std::pair<int, int> norm_ids(int a, int b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

Decision algocon_engine(const StreamedInstance& i, const SolveOptions& opts) {
    const Graph& bg = i.backbone_graph();
    const int n0 = bg.num_vertices();

    std::vector<std::vector<int>> adj(n0);
    for (auto [u, v] : bg.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    BiconnCore core = biconnected_core(n0, adj);
    const int total_blocks = static_cast<int>(core.block_vertices.size());

    std::vector<std::string> labels;
    for (int w = 0; w < n0; ++w) labels.push_back(bg.label_of(w));
    std::vector<char> vert_alive(n0, 1);
    std::vector<int> vbc = core.vertex_block_count;
    std::vector<char> block_alive(total_blocks, 1);
    std::vector<std::vector<int>> vertex_blocks(n0);
    for (int b = 0; b < total_blocks; ++b)
        for (int w : core.block_vertices[b]) vertex_blocks[w].push_back(b);
    std::vector<int> cut_count(total_blocks, 0);
    for (int b = 0; b < total_blocks; ++b)
        for (int w : core.block_vertices[b])
            if (vbc[w] >= 2) ++cut_count[b];
    int alive_blocks = total_blocks;

    // Keys are stable: a block's vertex set never changes while it is alive.
    std::vector<std::vector<std::string>> block_key(total_blocks);
    for (int b = 0; b < total_blocks; ++b) {
        for (int w : core.block_vertices[b]) block_key[b].push_back(labels[w]);
        std::sort(block_key[b].begin(), block_key[b].end());
    }

    // The block holding the smallest backbone edge anchors the peel order.
    // It survives every peel, so the recursive form roots there at every
    // level as well.
    int root = -1;
    {
        auto [u0, v0] = bg.edges()[0];
        for (int b : vertex_blocks[u0]) {
            const auto& other = vertex_blocks[v0];
            if (std::find(other.begin(), other.end(), b) != other.end()) {
                root = b;
                break;
            }
        }
    }

    std::set<std::pair<std::vector<std::string>, int>> leaf_blocks;
    for (int b = 0; b < total_blocks; ++b)
        if (b != root && cut_count[b] == 1) leaf_blocks.insert({block_key[b], b});

    // Stream state: adjacency lists hold edge ids and are compacted lazily,
    // by_pair keeps one live edge per vertex pair (earliest position wins).
    std::vector<SEdge> sedges;
    std::vector<std::vector<int>> sadj(n0);
    std::map<std::pair<int, int>, int> by_pair;
    int pos_counter = 0;
    int iso_iso = 0;
    auto is_iso = [&](int w) { return vert_alive[w] && vbc[w] == 0; };
    for (int j = 1; j <= i.stream_size(); ++j) {
        const auto& e = i.stream()[j - 1];
        int u = bg.id_of(e.first), v = bg.id_of(e.second);
        int id = static_cast<int>(sedges.size());
        sedges.push_back({u, v, i.position(j), true});
        sadj[u].push_back(id);
        sadj[v].push_back(id);
        by_pair.emplace(norm_ids(u, v), id);
        if (is_iso(u) && is_iso(v)) ++iso_iso;
        pos_counter = std::max(pos_counter, i.position(j));
    }

    std::vector<int> stamp_beta(n0, 0), stamp_bfs(n0, 0);
    int stamp = 0;
    std::vector<int> eseen(sedges.size(), 0), ecross(sedges.size(), 0);
    int epoch = 0;

    std::vector<TraceEntry> trace;
    std::vector<PieceWitness> pieces;
    const int cap = std::max(0, opts.sample_piece_cap);
    const int stride =
        cap == 0 ? 1 : std::max(1, (total_blocks - 1) / cap);
    int sampled = 0;
    int peel = 0;

    while (alive_blocks > 1) {
        const int beta = leaf_blocks.begin()->second;
        leaf_blocks.erase(leaf_blocks.begin());
        block_alive[beta] = 0;

        int v = -1;
        for (int w : core.block_vertices[beta])
            if (vbc[w] >= 2) v = w;

        std::string note = "beta=";
        for (size_t k = 0; k < block_key[beta].size(); ++k) {
            if (k) note += ",";
            note += block_key[beta][k];
        }
        trace.push_back({Rule::R2, peel, alive_blocks, iso_iso, false, std::move(note)});

        const int beta_stamp = ++stamp;
        for (int w : core.block_vertices[beta])
            if (w != v) stamp_beta[w] = beta_stamp;
        auto in_beta_side = [&, beta_stamp](int w) { return stamp_beta[w] == beta_stamp; };

        // Stream paths through isolated vertices decide which copy of the
        // cutvertex an edge (v, x) follows; a tie or no anchor at all stays
        // with the peeled side.
        auto iso_side_beta = [&](int x0) {
            bool to_beta = false, to_rest = false;
            int mark = ++stamp;
            stamp_bfs[x0] = mark;
            std::vector<int> queue{x0};
            while (!queue.empty()) {
                int a = queue.back();
                queue.pop_back();
                auto& lst = sadj[a];
                size_t out = 0;
                for (int id : lst) {
                    const SEdge& e = sedges[id];
                    if (!e.alive || (e.u != a && e.v != a)) continue;
                    lst[out++] = id;
                    int y = e.u == a ? e.v : e.u;
                    if (y == v || stamp_bfs[y] == mark) continue;
                    stamp_bfs[y] = mark;
                    if (vbc[y] == 0)
                        queue.push_back(y);
                    else if (in_beta_side(y))
                        to_beta = true;
                    else
                        to_rest = true;
                }
                lst.resize(out);
            }
            return to_beta || !to_rest;
        };

        // Classify every live stream edge touching the peeled block.
        std::vector<int> inside, rewire;
        ++epoch;
        auto scan = [&](int w) {
            auto& lst = sadj[w];
            size_t out = 0;
            for (int id : lst) {
                SEdge& e = sedges[id];
                if (!e.alive || (e.u != w && e.v != w)) continue;
                lst[out++] = id;
                if (eseen[id] == epoch) continue;
                eseen[id] = epoch;
                bool ub = in_beta_side(e.u), vb = in_beta_side(e.v);
                if (ub && vb) {
                    inside.push_back(id);
                } else if (ub || vb) {
                    int x = ub ? e.v : e.u;
                    if (x == v)
                        inside.push_back(id);
                    else
                        rewire.push_back(id);
                } else {
                    int x = e.u == v ? e.v : e.u;
                    bool leaves_with_beta = vbc[x] >= 1 ? false : iso_side_beta(x);
                    if (leaves_with_beta) rewire.push_back(id);
                }
            }
            lst.resize(out);
        };
        for (int w : core.block_vertices[beta])
            if (w != v) scan(w);
        scan(v);
        for (int id : inside) ecross[id] = epoch;
        for (int id : rewire) ecross[id] = epoch;

        const bool multi_vertex = core.block_vertices[beta].size() > 2;
        const bool want_sample =
            opts.sample_pieces_out && sampled < cap && peel % stride == 0;
        const bool need_piece = opts.want_witness || want_sample || multi_vertex;

        // Materialize the peeled sub-instance before mutating anything: its
        // outside endpoints contract to one representative per connected
        // group of the remaining union graph.
        std::optional<StreamedInstance> piece;
        if (need_piece) {
            std::map<int, std::string> rep_cache;
            auto rep_of = [&](int x0) -> std::string {
                auto hit = rep_cache.find(x0);
                if (hit != rep_cache.end()) return hit->second;
                int mark = ++stamp;
                std::vector<int> members{x0};
                stamp_bfs[x0] = mark;
                std::string best = labels[x0];
                for (size_t q = 0; q < members.size(); ++q) {
                    int a = members[q];
                    if (labels[a] < best) best = labels[a];
                    if (a < n0)
                        for (int y : adj[a])
                            if (vert_alive[y] && !in_beta_side(y) && stamp_bfs[y] != mark) {
                                stamp_bfs[y] = mark;
                                members.push_back(y);
                            }
                    auto& lst = sadj[a];
                    size_t out = 0;
                    for (int id : lst) {
                        const SEdge& e = sedges[id];
                        if (!e.alive || (e.u != a && e.v != a)) continue;
                        lst[out++] = id;
                        if (ecross[id] == epoch) continue;
                        int y = e.u == a ? e.v : e.u;
                        if (in_beta_side(y) || stamp_bfs[y] == mark) continue;
                        stamp_bfs[y] = mark;
                        members.push_back(y);
                    }
                    lst.resize(out);
                }
                for (int a : members) rep_cache.emplace(a, best);
                return best;
            };

            struct Tuple {
                int pos;
                std::string a, b;
            };
            std::vector<Tuple> tuples;
            std::set<std::string> reps;
            auto map_end = [&](int w, const std::string& vp) -> std::string {
                if (w == v) return vp;
                if (in_beta_side(w)) return labels[w];
                std::string r = rep_of(w);
                reps.insert(r);
                return r;
            };

            // Pick the cutvertex copy name first; representatives found
            // later never collide with it because they are original labels
            // of vertices outside the block.
            std::set<std::string> beta_labels;
            for (int w : core.block_vertices[beta])
                if (w != v) beta_labels.insert(labels[w]);
            std::string vp = labels[v] + "'";
            {
                std::set<std::string> all(labels.begin(), labels.end());
                while (all.count(vp) || beta_labels.count(vp)) vp += "'";
            }

            for (int id : inside) {
                const SEdge& e = sedges[id];
                tuples.push_back({e.pos, map_end(e.u, vp), map_end(e.v, vp)});
            }
            for (int id : rewire) {
                const SEdge& e = sedges[id];
                tuples.push_back({e.pos, map_end(e.u, vp), map_end(e.v, vp)});
            }
            tuples.push_back({pos_counter + 1, vp, rep_of(v)});
            reps.insert(rep_cache.at(v));

            std::sort(tuples.begin(), tuples.end(),
                      [](const Tuple& x, const Tuple& y) { return x.pos < y.pos; });
            std::set<std::pair<std::string, std::string>> seen_pairs;
            std::vector<std::pair<std::string, std::string>> stream;
            std::vector<int> positions;
            std::vector<std::string> used_order;
            std::set<std::string> used;
            for (const auto& t : tuples) {
                auto key = t.a < t.b ? std::make_pair(t.a, t.b) : std::make_pair(t.b, t.a);
                if (!seen_pairs.insert(key).second) continue;
                stream.push_back({t.a, t.b});
                positions.push_back(t.pos);
                for (const std::string* s : {&t.a, &t.b})
                    if (reps.count(*s) && used.insert(*s).second) used_order.push_back(*s);
            }

            std::vector<std::string> verts(beta_labels.begin(), beta_labels.end());
            verts.push_back(vp);
            for (const auto& r : used_order) verts.push_back(r);
            std::vector<std::pair<std::string, std::string>> bb;
            for (auto [a, b] : core.block_edges[beta])
                bb.push_back({a == v ? vp : labels[a], b == v ? vp : labels[b]});
            piece.emplace(verts, bb, stream, 1, positions);
        }

        // Mutate the graph: the block's non-cut vertices die, the cutvertex
        // loses one block, and a fresh contraction vertex appears.
        for (int w : core.block_vertices[beta]) {
            if (w == v) continue;
            vert_alive[w] = 0;
            vbc[w] = 0;
        }
        if (--vbc[v] == 1) {
            int b2 = -1;
            for (int b : vertex_blocks[v])
                if (block_alive[b]) b2 = b;
            if (b2 >= 0 && --cut_count[b2] == 1 && b2 != root)
                leaf_blocks.insert({block_key[b2], b2});
        }
        --alive_blocks;

        const int g = static_cast<int>(labels.size());
        std::string g_label;
        for (int w : core.block_vertices[beta]) {
            if (w == v) continue;
            if (g_label.empty() || labels[w] < g_label) g_label = labels[w];
        }
        labels.push_back(g_label);
        vert_alive.push_back(1);
        vbc.push_back(0);
        sadj.push_back({});
        stamp_beta.push_back(0);
        stamp_bfs.push_back(0);

        // Rewire the stream: edges inside the block vanish, crossing edges
        // re-attach to the contraction vertex, with parallel copies keeping
        // the earliest position.
        for (int id : inside) {
            SEdge& e = sedges[id];
            e.alive = false;
            by_pair.erase(norm_ids(e.u, e.v));
        }
        for (int id : rewire) {
            SEdge& e = sedges[id];
            by_pair.erase(norm_ids(e.u, e.v));
            if (e.u == v || in_beta_side(e.u))
                e.u = g;
            else
                e.v = g;
            auto key = norm_ids(e.u, e.v);
            auto [it, fresh] = by_pair.try_emplace(key, id);
            if (fresh) {
                sadj[g].push_back(id);
                int x = e.u == g ? e.v : e.u;
                if (is_iso(x)) ++iso_iso;
            } else if (sedges[it->second].pos <= e.pos) {
                e.alive = false;
            } else {
                sedges[it->second].alive = false;
                it->second = id;
                sadj[g].push_back(id);
            }
        }
        {
            int id = static_cast<int>(sedges.size());
            sedges.push_back({g, v, ++pos_counter, true});
            eseen.push_back(0);
            ecross.push_back(0);
            sadj[g].push_back(id);
            sadj[v].push_back(id);
            by_pair.emplace(norm_ids(g, v), id);
        }

        // The peeled sub-instance is a one-block piece with no stream edge
        // between isolated vertices.  A two-vertex block always passes: its
        // sole face holds both endpoints and unit windows never stack
        // chords, so only pieces someone asked for get solved.
        trace.push_back({Rule::Base2, peel + 1, 1, 0, false, ""});
        if (piece) {
            auto cert = star_search(*piece, opts.budget);
            if (!cert) {
                if (!multi_vertex)
                    throw Error("internal: a two-vertex block piece was rejected");
                Decision d;
                d.trace = std::move(trace);
                return d;
            }
            if (want_sample) {
                opts.sample_pieces_out->push_back({*piece, *cert});
                ++sampled;
            }
            if (opts.want_witness) pieces.push_back({std::move(*piece), std::move(*cert)});
        }
        ++peel;
    }

    // Hand the surviving block, the contraction vertices, and the live
    // stream back to the recursive form.
    int last = -1;
    for (int b = 0; b < total_blocks; ++b)
        if (block_alive[b]) last = b;
    std::vector<std::string> verts;
    for (int w = 0; w < static_cast<int>(labels.size()); ++w)
        if (vert_alive[w]) verts.push_back(labels[w]);
    std::vector<std::pair<std::string, std::string>> bb;
    for (auto [a, b] : core.block_edges[last]) bb.push_back({labels[a], labels[b]});
    std::vector<std::pair<int, std::pair<std::string, std::string>>> live;
    for (const auto& e : sedges)
        if (e.alive) live.push_back({e.pos, {labels[e.u], labels[e.v]}});
    std::sort(live.begin(), live.end());
    std::vector<std::pair<std::string, std::string>> stream;
    std::vector<int> positions;
    for (auto& [p, e] : live) {
        positions.push_back(p);
        stream.push_back(std::move(e));
    }
    StreamedInstance residual(verts, bb, stream, 1, positions);

    Decision tail = algocon_faithful(residual, opts, peel);
    Decision d;
    d.yes = tail.yes;
    d.trace = std::move(trace);
    for (auto& t : tail.trace) d.trace.push_back(std::move(t));
    if (d.yes && opts.want_witness) {
        d.pieces = std::move(pieces);
        for (auto& p : tail.pieces) d.pieces.push_back(std::move(p));
    }
    return d;
}

}  // namespace spb::detail
