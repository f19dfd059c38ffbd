#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "spb/certificate.hpp"
#include "spb/errors.hpp"
#include "spb/instance.hpp"
#include "test_support.hpp"

using namespace spb;
using spbtest::inst;

namespace {

// C6 with its sorted-neighbor rotation, the only one a cycle has.
RotationSystem c6_rotation(const StreamedInstance& i) {
    auto beta = i.beta_graph();
    std::map<std::string, std::vector<std::string>> ord;
    ord = spbtest::sorted_rotation(*beta);
    return RotationSystem::from_label_map(beta, ord);
}

StreamedInstance c6_chords(int omega) {
    return inst(spbtest::labels(6), spbtest::cycle(6),
                {{"1", "4"}, {"2", "5"}, {"3", "6"}}, omega);
}

}  // namespace

TEST_SUITE("certificate checking") {
    TEST_CASE("alternating chord faces are accepted at omega two") {
        auto i = c6_chords(2);
        DrawingCertificate c;
        c.rotation = c6_rotation(i);
        c.stream_face = {{1, 0}, {2, 1}, {3, 0}};
        auto r = check_certificate(i, c);
        CHECK(r.accepted);
        CHECK(r.kind == RejectKind::None);
    }

    TEST_CASE("two overlapping long chords in one face are rejected at step two") {
        auto i = c6_chords(2);
        DrawingCertificate c;
        c.rotation = c6_rotation(i);
        c.stream_face = {{1, 0}, {2, 0}, {3, 1}};
        auto r = check_certificate(i, c);
        REQUIRE_FALSE(r.accepted);
        CHECK(r.kind == RejectKind::DiskNotPlanar);
        CHECK(r.time_step == 2);
        CHECK(r.face_id == 0);
        CHECK(r.offending_stream == std::vector<int>{1, 2});
        CHECK(r.detail.find("time step 2") != std::string::npos);
    }

    TEST_CASE("at omega three no face assignment of the three chords survives") {
        auto i = c6_chords(3);
        for (int f1 = 0; f1 < 2; ++f1)
            for (int f2 = 0; f2 < 2; ++f2)
                for (int f3 = 0; f3 < 2; ++f3) {
                    DrawingCertificate c;
                    c.rotation = c6_rotation(i);
                    c.stream_face = {{1, f1}, {2, f2}, {3, f3}};
                    CHECK_FALSE(check_certificate(i, c).accepted);
                }
    }

    TEST_CASE("endpoint off the assigned boundary is an incidence violation") {
        // both faces of C6 touch every vertex, so shrink to a theta graph
        // where faces are proper subsets
        auto i = inst({"a", "b", "x", "y"},
                      {{"a", "x"}, {"x", "b"}, {"a", "y"}, {"y", "b"}, {"a", "b"}},
                      {{"x", "y"}}, 1);
        auto beta = i.beta_graph();
        // the three a-b strands in the order x, direct, y on both sides
        std::map<std::string, std::vector<std::string>> ord;
        ord["a"] = {"x", "b", "y"};
        ord["b"] = {"a", "x", "y"};
        ord["x"] = {"a", "b"};
        ord["y"] = {"a", "b"};
        DrawingCertificate c;
        c.rotation = RotationSystem::from_label_map(beta, ord);

        // exactly one of the three faces misses x or y; find a face holding
        // both, then a face missing one
        FaceSet fs = canonical_faces(c.rotation);
        REQUIRE(fs.size() == 3);
        int good = -1;
        int bad = -1;
        for (int f = 0; f < 3; ++f) {
            bool hx = fs.on_boundary(f, beta->id_of("x"));
            bool hy = fs.on_boundary(f, beta->id_of("y"));
            if (hx && hy) good = f;
            if (!hx || !hy) bad = f;
        }
        REQUIRE(good >= 0);
        REQUIRE(bad >= 0);

        c.stream_face = {{1, good}};
        CHECK(check_certificate(i, c).accepted);
        c.stream_face = {{1, bad}};
        auto r = check_certificate(i, c);
        REQUIRE_FALSE(r.accepted);
        CHECK(r.kind == RejectKind::IncidenceViolation);
    }

    TEST_CASE("isolated vertices must sit on the face of their edges") {
        auto i = inst({"1", "2", "3", "q"}, spbtest::cycle(3), {{"q", "1"}, {"q", "2"}}, 2);
        auto beta = i.beta_graph();
        std::map<std::string, std::vector<std::string>> ord;
        ord = spbtest::sorted_rotation(*beta);
        DrawingCertificate c;
        c.rotation = RotationSystem::from_label_map(beta, ord);
        c.stream_face = {{1, 0}, {2, 0}};
        c.vertex_face = {{"q", 0}};
        CHECK(check_certificate(i, c).accepted);

        // edge on one face, its isolated endpoint on the other
        c.stream_face = {{1, 1}, {2, 0}};
        auto r = check_certificate(i, c);
        REQUIRE_FALSE(r.accepted);
        CHECK(r.kind == RejectKind::IncidenceViolation);
    }

    TEST_CASE("structural defects throw instead of rejecting") {
        auto i = c6_chords(2);
        DrawingCertificate c;
        c.rotation = c6_rotation(i);
        c.stream_face = {{1, 0}, {2, 0}, {3, 9}};
        CHECK_THROWS_AS(check_certificate(i, c), FaceIdOutOfRange);

        c.stream_face = {{1, 0}, {2, 0}};  // index 3 missing
        CHECK_THROWS_AS(check_certificate(i, c), MalformedCertificate);

        c.stream_face = {{1, 0}, {2, 0}, {3, 0}, {4, 0}};  // alien index
        CHECK_THROWS_AS(check_certificate(i, c), MalformedCertificate);

        c.stream_face = {{1, 0}, {2, 0}, {3, 0}};
        c.vertex_face = {{"1", 0}};  // not an isolated vertex
        CHECK_THROWS_AS(check_certificate(i, c), MalformedCertificate);

        // rotation over the wrong graph
        auto other = inst(spbtest::labels(5), spbtest::cycle(5), {}, 1);
        DrawingCertificate d;
        d.rotation = c6_rotation(other);
        d.stream_face = {{1, 0}, {2, 0}, {3, 0}};
        CHECK_THROWS_AS(check_certificate(i, d), MalformedCertificate);

        // a non-planar rotation of K4 is structurally invalid
        auto k4 = inst(spbtest::labels(4), spbtest::complete(4), {}, 1);
        auto beta = k4.beta_graph();
        std::map<std::string, std::vector<std::string>> ord;
        ord = spbtest::sorted_rotation(*beta);
        bool found_bad = false;
        do {
            RotationSystem r = RotationSystem::from_label_map(beta, ord);
            if (!is_planar_rotation(r)) {
                DrawingCertificate e;
                e.rotation = r;
                CHECK_THROWS_AS(check_certificate(k4, e), MalformedCertificate);
                found_bad = true;
                break;
            }
        } while (std::next_permutation(ord["1"].begin(), ord["1"].end()));
        CHECK(found_bad);
    }

    TEST_CASE("multi-block instances are out of certificate scope") {
        auto i = inst({"a", "b", "v", "c", "d"},
                      {{"a", "b"}, {"b", "v"}, {"v", "a"}, {"v", "c"}, {"c", "d"}, {"d", "v"}},
                      {}, 1);
        DrawingCertificate c;
        CHECK_THROWS_AS(check_certificate(i, c), WrongCategory);
    }
}

TEST_SUITE("trivial certificates") {
    TEST_CASE("edgeless backbones get the one-face certificate") {
        auto i = inst({"a", "b", "c"}, {}, {{"a", "b"}, {"b", "c"}}, 1);
        auto c = certificate_of_trivial(i);
        CHECK(c.stream_face == std::map<int, int>{{1, 0}, {2, 0}});
        CHECK(c.vertex_face.size() == 3);
        CHECK(check_certificate(i, c).accepted);

        auto with_edges = inst({"a", "b"}, {{"a", "b"}}, {}, 1);
        CHECK_THROWS_AS(certificate_of_trivial(with_edges), WrongCategory);
    }

    TEST_CASE("the trivial certificate can still be rejected") {
        // K5 pattern among isolated vertices, all alive at once
        auto vs = spbtest::labels(5);
        auto i = inst(vs, {}, spbtest::complete(5), 10);
        auto c = certificate_of_trivial(i);
        auto r = check_certificate(i, c);
        REQUIRE_FALSE(r.accepted);
        CHECK(r.kind == RejectKind::DiskNotPlanar);

        // at omega one the same stream is fine
        auto j = inst(vs, {}, spbtest::complete(5), 1);
        CHECK(check_certificate(j, certificate_of_trivial(j)).accepted);
    }
}
