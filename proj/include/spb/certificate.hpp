#pragma once

#include <map>
#include <string>
#include <vector>

#include "spb/instance.hpp"
#include "spb/rotation.hpp"

namespace spb {

// A claimed drawing: a planar rotation of the backbone's unique non-trivial
// component plus an assignment of every stream edge and every isolated
// vertex to one of its canonical faces. When the backbone has no edges the
// rotation is empty and face 0 denotes the sole face of the empty drawing.
struct DrawingCertificate {
    RotationSystem rotation;
    std::map<int, int> stream_face;            // 1-based stream index -> face id
    std::map<std::string, int> vertex_face;    // isolated vertex -> face id
};

enum class RejectKind { None, IncidenceViolation, DiskNotPlanar };

struct CheckReport {
    bool accepted = false;
    RejectKind kind = RejectKind::None;
    std::string detail;
    int time_step = -1;                 // first failing time step (DiskNotPlanar)
    int face_id = -1;
    std::vector<int> offending_stream;  // alive indices assigned to the failing face

    static CheckReport accept() { return CheckReport{true, RejectKind::None, "", -1, -1, {}}; }
};

// Validates the certificate against the instance per time step.
//
// Structural defects throw: MalformedCertificate (rotation not over the
// backbone component, not a permutation, not planar, or assignment keys
// missing/alien) and FaceIdOutOfRange. Semantic failures reject with a
// reason: an endpoint off its assigned face's boundary, mismatched faces
// along a stream edge through an isolated vertex, or a non-planar disk graph
// at some time step (smallest failing t reported, faces scanned in id
// order).
//
// The disk graph of (t, f): the facial walk of f laid out as a cycle, an
// apex joined to every walk vertex, the alive stream edges assigned to f,
// and the isolated vertices assigned to f with their alive edges. The
// backbone component is a single block, so facial walks of a planar
// rotation are simple and boundary attachment points are unique.
//
// Requires a backbone with at most one non-trivial component forming a
// single block (WrongCategory otherwise); general instances are checked
// piecewise after splitting.
CheckReport check_certificate(const StreamedInstance& i, const DrawingCertificate& c);

// The one possible certificate for an instance whose backbone has no edges:
// empty rotation, everything on face 0. Throws WrongCategory when a backbone
// edge exists. Acceptance is not guaranteed for omega >= 2 (the alive
// subgraphs may be non-planar); callers decide by checking it.
DrawingCertificate certificate_of_trivial(const StreamedInstance& i);

} // namespace spb
