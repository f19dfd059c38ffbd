#include "spb/certificate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "disk.hpp"

namespace spb {

namespace {

std::string edge_str(const std::pair<std::string, std::string>& e) {
    return "(" + e.first + "," + e.second + ")";
}

// True when the rotation's underlying graph is exactly the given graph,
// ignoring vertex declaration order.
bool same_graph(const Graph& a, const Graph& b) {
    std::vector<std::string> la = a.labels(), lb = b.labels();
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    if (la != lb) return false;
    std::set<std::pair<std::string, std::string>> ea, eb;
    for (auto [u, v] : a.edges()) ea.insert({a.label_of(u), a.label_of(v)});
    for (auto [u, v] : b.edges()) eb.insert({b.label_of(u), b.label_of(v)});
    return ea == eb;
}

} // namespace

CheckReport check_certificate(const StreamedInstance& i, const DrawingCertificate& c) {
    BlockCutTree bct = blocks(i.backbone_graph());
    if (bct.nontrivial_component_count > 1 ||
        (bct.nontrivial_component_count == 1 && bct.block_count() != 1))
        throw WrongCategory("certificate checking needs a backbone that is one block plus "
                            "isolated vertices");
    const bool has_beta = bct.nontrivial_component_count == 1;

    // --- certificate well-formedness -------------------------------------
    if (has_beta) {
        if (!same_graph(c.rotation.graph(), *i.beta_graph()))
            throw MalformedCertificate("rotation is not over the non-trivial backbone component");
        if (!is_planar_rotation(c.rotation))
            throw MalformedCertificate("rotation is not planar");
    } else if (c.rotation.graph().num_vertices() != 0) {
        throw MalformedCertificate("rotation must be empty when the backbone has no edges");
    }

    FaceSet faces;
    int face_count = 1;  // the sole face of the empty drawing
    if (has_beta) {
        faces = canonical_faces(c.rotation);
        face_count = faces.size();
    }

    for (int j = 1; j <= i.stream_size(); ++j)
        if (!c.stream_face.count(j))
            throw MalformedCertificate("no face assigned to stream edge " + std::to_string(j));
    for (const auto& [j, f] : c.stream_face) {
        if (j < 1 || j > i.stream_size())
            throw MalformedCertificate("assignment names stream index " + std::to_string(j) +
                                       " outside 1.." + std::to_string(i.stream_size()));
        if (f < 0 || f >= face_count)
            throw FaceIdOutOfRange("face " + std::to_string(f) + " for stream edge " +
                                   std::to_string(j) + "; valid ids are 0.." +
                                   std::to_string(face_count - 1));
    }
    std::vector<std::string> isolated = i.isolated_vertices();
    for (const auto& q : isolated)
        if (!c.vertex_face.count(q))
            throw MalformedCertificate("no face assigned to isolated vertex '" + q + "'");
    for (const auto& [q, f] : c.vertex_face) {
        if (!i.backbone_graph().has_vertex(q) || !i.is_isolated(q))
            throw MalformedCertificate("assignment names '" + q +
                                       "', which is not an isolated vertex");
        if (f < 0 || f >= face_count)
            throw FaceIdOutOfRange("face " + std::to_string(f) + " for vertex '" + q +
                                   "'; valid ids are 0.." + std::to_string(face_count - 1));
    }

    // --- incidence --------------------------------------------------------
    for (int j = 1; j <= i.stream_size(); ++j) {
        const auto& e = i.stream()[j - 1];
        int f = c.stream_face.at(j);
        for (const std::string& x : {e.first, e.second}) {
            if (i.is_isolated(x)) {
                if (c.vertex_face.at(x) != f) {
                    CheckReport r;
                    r.kind = RejectKind::IncidenceViolation;
                    r.detail = "stream edge " + std::to_string(j) + " = " + edge_str(e) +
                               " is assigned face " + std::to_string(f) + " but endpoint '" + x +
                               "' is assigned face " + std::to_string(c.vertex_face.at(x));
                    return r;
                }
            } else {
                VertexId vx = c.rotation.graph().id_of(x);
                if (!faces.on_boundary(f, vx)) {
                    CheckReport r;
                    r.kind = RejectKind::IncidenceViolation;
                    r.detail = "stream edge " + std::to_string(j) + " = " + edge_str(e) +
                               " is assigned face " + std::to_string(f) + " but endpoint '" + x +
                               "' is not on that face's boundary";
                    return r;
                }
            }
        }
    }

    // --- per-time-step disk planarity --------------------------------------
    // Alive sets only grow at position values, so those t cover every window.
    std::map<int, detail::FaceDisk> disks;
    auto disk_for = [&](int f) -> const detail::FaceDisk& {
        auto it = disks.find(f);
        if (it == disks.end())
            it = disks.emplace(f, has_beta ? detail::FaceDisk(c.rotation, faces, f)
                                           : detail::FaceDisk()).first;
        return it->second;
    };
    for (int t : i.time_steps()) {
        std::vector<int> alive = i.alive_at(t);
        std::set<int> alive_faces;
        for (int j : alive) alive_faces.insert(c.stream_face.at(j));
        for (int f : alive_faces) {
            std::vector<int> offending;
            std::vector<std::pair<std::string, std::string>> chords;
            for (int j : alive) {
                if (c.stream_face.at(j) != f) continue;
                offending.push_back(j);
                chords.push_back(i.stream()[j - 1]);
            }
            if (!disk_for(f).planar_with(chords)) {
                CheckReport r;
                r.kind = RejectKind::DiskNotPlanar;
                r.time_step = t;
                r.face_id = f;
                r.offending_stream = offending;
                std::ostringstream d;
                d << "alive edges assigned to face " << f << " cannot be drawn in it at time step "
                  << t << " (stream indices";
                for (int j : offending) d << " " << j;
                d << ")";
                r.detail = d.str();
                return r;
            }
        }
    }
    return CheckReport::accept();
}

DrawingCertificate certificate_of_trivial(const StreamedInstance& i) {
    if (i.backbone_graph().num_edges() != 0)
        throw WrongCategory("trivial certificate exists only for edge-less backbones");
    DrawingCertificate c;
    for (int j = 1; j <= i.stream_size(); ++j) c.stream_face[j] = 0;
    for (const auto& v : i.vertices()) c.vertex_face[v] = 0;
    return c;
}

} // namespace spb
