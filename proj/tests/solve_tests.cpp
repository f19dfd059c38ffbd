#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "spb/certificate.hpp"
#include "spb/errors.hpp"
#include "spb/gen.hpp"
#include "spb/instance.hpp"
#include "spb/solve.hpp"
#include "test_support.hpp"

using namespace spb;
using spbtest::Edge;
using spbtest::Edges;
using spbtest::inst;

namespace {

// Unordered vertex pairs that are not backbone edges, sorted.
Edges free_pairs(const StreamedInstance& i) {
    Edges out;
    const auto& vs = i.vertices();
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
            auto p = std::minmax(vs[a], vs[b]);
            if (!i.backbone_graph().has_edge(p.first, p.second))
                out.push_back({p.first, p.second});
        }
    std::sort(out.begin(), out.end());
    return out;
}

// decide() against the oracle over every ordered stream of up to max_m
// distinct free pairs; returns the number of instances compared.
int sweep_against_oracle(const StreamedInstance& base, int max_m,
                         const std::vector<int>& omegas) {
    Edges pool = free_pairs(base);
    int done = 0;
    std::vector<int> pick;
    std::vector<char> used(pool.size(), 0);
    auto run_one = [&]() {
        Edges st;
        for (int k : pick) st.push_back(pool[k]);
        for (int w : omegas) {
            auto i = inst(base.vertices(), base.backbone_edges(), st, w);
            bool expect = brute_oracle(i);
            CAPTURE(w);
            CAPTURE(st.size());
            Decision d = decide(i);
            CHECK(d.yes == expect);
            ++done;
        }
    };
    auto rec = [&](auto&& self, int depth) -> void {
        run_one();
        if (depth == max_m) return;
        for (std::size_t k = 0; k < pool.size(); ++k) {
            if (used[k]) continue;
            used[k] = 1;
            pick.push_back(static_cast<int>(k));
            self(self, depth + 1);
            pick.pop_back();
            used[k] = 0;
        }
    };
    rec(rec, 0);
    return done;
}

Edge norm(const Edge& e) {
    auto p = std::minmax(e.first, e.second);
    return {p.first, p.second};
}

StreamedInstance comb_instance(int omega) {
    std::vector<std::string> vs;
    Edges bb;
    for (int k = 1; k <= 6; ++k) {
        vs.push_back("s" + std::to_string(k));
        vs.push_back("l" + std::to_string(k));
        bb.push_back({"s" + std::to_string(k), "l" + std::to_string(k)});
        if (k > 1) bb.push_back({"s" + std::to_string(k - 1), "s" + std::to_string(k)});
    }
    return inst(vs, bb, {{"l1", "l4"}, {"l2", "l5"}, {"l3", "l6"}}, omega);
}

}  // namespace

TEST_SUITE("star solver") {
    TEST_CASE("crossing chords of a square separate into the two faces") {
        auto i = inst(spbtest::labels(4), spbtest::cycle(4), {{"1", "3"}, {"2", "4"}}, 2);
        Decision d = solve_star(i);
        REQUIRE(d.yes);
        REQUIRE(d.witness.has_value());
        CHECK(check_certificate(i, *d.witness).accepted);
        CHECK(d.witness->stream_face.at(1) != d.witness->stream_face.at(2));
    }

    TEST_CASE("the long chords of a hexagon fit pairwise but not jointly") {
        auto yes = inst(spbtest::labels(6), spbtest::cycle(6),
                        {{"1", "4"}, {"2", "5"}, {"3", "6"}}, 2);
        Decision dy = solve_star(yes);
        REQUIRE(dy.yes);
        CHECK(check_certificate(yes, *dy.witness).accepted);

        auto no = inst(spbtest::labels(6), spbtest::cycle(6),
                       {{"1", "4"}, {"2", "5"}, {"3", "6"}}, 3);
        CHECK_FALSE(solve_star(no).yes);
        CHECK_FALSE(exhaustive_search(no).has_value());
    }

    TEST_CASE("an antipodal chord of the octahedron fails immediately") {
        auto i = inst(spbtest::labels(6), spbtest::octahedron(), {{"1", "6"}}, 1);
        CHECK_FALSE(solve_star(i).yes);
    }

    TEST_CASE("a hub pinned to all four corners of a tetrahedron fails") {
        auto vs = spbtest::labels(4);
        vs.push_back("h");
        auto i = inst(vs, spbtest::complete(4),
                      {{"h", "1"}, {"h", "2"}, {"h", "3"}, {"h", "4"}}, 1);
        CHECK_FALSE(solve_star(i).yes);
        // three corners are fine: every face of the tetrahedron is a triangle
        auto j = inst(vs, spbtest::complete(4), {{"h", "1"}, {"h", "2"}, {"h", "3"}}, 1);
        Decision d = solve_star(j);
        REQUIRE(d.yes);
        CHECK(check_certificate(j, *d.witness).accepted);
    }

    TEST_CASE("agreement with the exhaustive reference") {
        std::vector<StreamedInstance> bases;
        bases.push_back(inst(spbtest::labels(4), spbtest::cycle(4), {}, 1));
        {
            auto vs = spbtest::labels(3);
            vs.push_back("q");
            bases.push_back(inst(vs, spbtest::cycle(3), {}, 1));
        }
        int compared = 0;
        for (const auto& base : bases) {
            Edges pool = free_pairs(base);
            for (std::size_t x = 0; x < pool.size(); ++x)
                for (std::size_t y = 0; y < pool.size(); ++y) {
                    if (x == y) continue;
                    Edges st = {pool[x], pool[y]};
                    for (int w : {1, 2}) {
                        auto i = inst(base.vertices(), base.backbone_edges(), st, w);
                        Decision d = solve_star(i);
                        auto ref = exhaustive_search(i);
                        CHECK(d.yes == ref.has_value());
                        if (d.yes) {
                            CHECK(check_certificate(i, *d.witness).accepted);
                            CHECK(check_certificate(i, *ref).accepted);
                        }
                        ++compared;
                    }
                }
        }
        CHECK(compared > 0);
    }

    TEST_CASE("shape and budget guards") {
        Edges bowtie = {{"a", "b"}, {"b", "v"}, {"v", "a"},
                        {"v", "c"}, {"c", "d"}, {"d", "v"}};
        auto multi = inst({"a", "b", "v", "c", "d"}, bowtie, {}, 1);
        CHECK_THROWS_AS(solve_star(multi), WrongCategory);

        auto iso_iso = inst({"1", "2", "3", "p", "q"}, spbtest::cycle(3), {{"p", "q"}}, 1);
        CHECK_THROWS_AS(solve_star(iso_iso), WrongCategory);

        auto k4 = inst(spbtest::labels(4), spbtest::complete(4), {}, 1);
        SolveOptions tight;
        tight.budget = 1;
        CHECK_THROWS_AS(solve_star(k4, tight), BudgetExceeded);
        CHECK_THROWS_AS(exhaustive_search(k4, 1), BudgetExceeded);
    }

    TEST_CASE("edge-less backbones ride on the trivial certificate") {
        auto i = inst({"a", "b", "c"}, {}, {{"a", "b"}, {"b", "c"}}, 1);
        Decision d = solve_star(i);
        REQUIRE(d.yes);
        CHECK(check_certificate(i, *d.witness).accepted);

        auto k5 = inst(spbtest::labels(5), {}, spbtest::complete(5), 10);
        CHECK_FALSE(solve_star(k5).yes);
    }
}

TEST_SUITE("case split R1") {
    TEST_CASE("the worked triangle example") {
        auto i = inst({"a", "b", "t", "u", "w"},
                      {{"a", "b"}, {"b", "t"}, {"t", "a"}},
                      {{"a", "u"}, {"u", "w"}, {"w", "b"}}, 1);
        auto [dia, cir] = split_case_r1(i);

        CHECK(dia.backbone_edges().size() == 3);
        CHECK(dia.backbone_graph().has_vertex("z"));
        REQUIRE(dia.stream_size() == 2);
        CHECK(norm(dia.stream()[0]) == Edge{"a", "z"});
        CHECK(norm(dia.stream()[1]) == Edge{"b", "z"});
        CHECK(dia.position(1) == 1);
        CHECK(dia.position(2) == 3);
        CHECK(classify(dia).category == Category::Star);

        CHECK(cir.backbone_edges().empty());
        std::set<std::string> cv(cir.vertices().begin(), cir.vertices().end());
        CHECK(cv == std::set<std::string>{"g", "u", "w"});
        REQUIRE(cir.stream_size() == 3);
        CHECK(norm(cir.stream()[0]) == Edge{"g", "u"});
        CHECK(norm(cir.stream()[1]) == Edge{"u", "w"});
        CHECK(norm(cir.stream()[2]) == Edge{"g", "w"});
        CHECK(classify(cir).category == Category::AllIsolated);

        CHECK(brute_oracle(i));
        Decision d = decide(i);
        CHECK(d.yes);
        REQUIRE_FALSE(d.pieces.empty());
        for (const auto& p : d.pieces)
            CHECK(check_certificate(p.instance, p.certificate).accepted);
    }

    TEST_CASE("separate isolated clusters get separate labels") {
        auto i = inst({"1", "2", "3", "p", "q", "r", "s"}, spbtest::cycle(3),
                      {{"p", "q"}, {"r", "s"}, {"p", "1"}, {"r", "2"}}, 1);
        auto [dia, cir] = split_case_r1(i);
        CHECK(dia.backbone_graph().has_vertex("z"));
        CHECK(dia.backbone_graph().has_vertex("z2"));
        // the two inner-cluster edges vanish, the two attachments survive
        CHECK(dia.stream_size() == 2);
        // the circle keeps the isolated vertices and all four edges
        CHECK(cir.stream_size() == 4);
        CHECK(decide(i).yes == brute_oracle(i));
    }

    TEST_CASE("shape guards") {
        auto star = inst({"1", "2", "3", "q"}, spbtest::cycle(3), {{"q", "1"}}, 1);
        CHECK_THROWS_AS(split_case_r1(star), WrongShape);
        auto w2 = inst({"1", "2", "3", "p", "q"}, spbtest::cycle(3), {{"p", "q"}}, 2);
        CHECK_THROWS_AS(split_case_r1(w2), UnsupportedOmega);
    }

    TEST_CASE("the split preserves the answer on both sides") {
        // triangle plus two isolated vertices, all streams containing the
        // isolated pair plus up to one more edge
        std::vector<std::string> vs = {"1", "2", "3", "p", "q"};
        Edges extras = {{"p", "1"}, {"q", "1"}, {"q", "2"}};
        std::vector<Edges> streams;
        streams.push_back({{"p", "q"}});
        for (const auto& e : extras) {
            streams.push_back({{"p", "q"}, e});
            streams.push_back({e, {"p", "q"}});
        }
        for (const auto& st : streams) {
            auto i = inst(vs, spbtest::cycle(3), st, 1);
            auto [dia, cir] = split_case_r1(i);
            bool whole = brute_oracle(i);
            bool parts = brute_oracle(dia) && brute_oracle(cir);
            CHECK(whole == parts);
            CHECK(decide(i).yes == whole);
        }
    }
}

TEST_SUITE("case split R2") {
    TEST_CASE("a bowtie peels its higher block") {
        auto i = inst({"a", "b", "v", "c", "d"},
                      {{"a", "b"}, {"b", "v"}, {"v", "a"},
                       {"v", "c"}, {"c", "d"}, {"d", "v"}},
                      {}, 1);
        auto [dia, cir] = split_case_r2(i);

        // peeled side: triangle c, d, v' plus the contracted rest
        CHECK(dia.backbone_graph().has_vertex("v'"));
        CHECK(dia.backbone_graph().has_edge("c", "d"));
        CHECK(dia.backbone_graph().has_edge("c", "v'"));
        CHECK(dia.backbone_edges().size() == 3);
        REQUIRE(dia.stream_size() == 1);
        CHECK(classify(dia).category == Category::Star);

        // rest side: triangle a, b, v plus the peeled block as "g"
        CHECK(cir.backbone_graph().has_vertex("g"));
        CHECK(cir.backbone_graph().has_edge("a", "b"));
        CHECK(cir.backbone_edges().size() == 3);
        REQUIRE(cir.stream_size() == 1);
        std::set<std::string> se = {cir.stream()[0].first, cir.stream()[0].second};
        CHECK(se == std::set<std::string>{"g", "v"});

        CHECK(decide(i).yes);
    }

    TEST_CASE("appended stream edge lands after every existing position") {
        auto i = inst({"a", "b", "v", "c", "d"},
                      {{"a", "b"}, {"b", "v"}, {"v", "a"},
                       {"v", "c"}, {"c", "d"}, {"d", "v"}},
                      {{"a", "c"}, {"b", "d"}}, 1);
        auto [dia, cir] = split_case_r2(i);
        CHECK(dia.stream_size() == 3);
        CHECK(dia.position(3) == 3);
        CHECK(cir.stream_size() == 3);
        CHECK(decide(i).yes == brute_oracle(i));
    }

    TEST_CASE("shape guards") {
        auto one_block = inst(spbtest::labels(4), spbtest::cycle(4), {}, 1);
        CHECK_THROWS_AS(split_case_r2(one_block), WrongShape);
        auto w2 = inst({"a", "b", "v", "c", "d"},
                       {{"a", "b"}, {"b", "v"}, {"v", "a"},
                        {"v", "c"}, {"c", "d"}, {"d", "v"}},
                       {}, 2);
        CHECK_THROWS_AS(split_case_r2(w2), UnsupportedOmega);
    }

    TEST_CASE("the split preserves the answer over bowtie streams") {
        std::vector<std::string> vs = {"a", "b", "v", "c", "d"};
        Edges bb = {{"a", "b"}, {"b", "v"}, {"v", "a"},
                    {"v", "c"}, {"c", "d"}, {"d", "v"}};
        Edges pool = {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}};
        for (std::size_t x = 0; x < pool.size(); ++x)
            for (std::size_t y = 0; y < pool.size(); ++y) {
                if (x == y) continue;
                auto i = inst(vs, bb, {pool[x], pool[y]}, 1);
                auto [dia, cir] = split_case_r2(i);
                bool whole = brute_oracle(i);
                CHECK((brute_oracle(dia) && brute_oracle(cir)) == whole);
                CHECK(decide(i).yes == whole);
            }
    }
}

TEST_SUITE("decide dispatch") {
    TEST_CASE("decide agrees with the oracle across small backbones") {
        int total = 0;
        total += sweep_against_oracle(
            inst(spbtest::labels(4), spbtest::cycle(4), {}, 1), 2, {1, 2});
        {
            auto vs = spbtest::labels(4);
            vs.push_back("q");
            total += sweep_against_oracle(inst(vs, spbtest::complete(4), {}, 1), 2, {1, 2});
        }
        total += sweep_against_oracle(
            inst(spbtest::labels(4), {{"1", "2"}, {"2", "3"}, {"3", "4"}}, {}, 1), 2,
            {1, 2});
        {
            auto vs = std::vector<std::string>{"c", "x", "y", "z", "q"};
            total += sweep_against_oracle(
                inst(vs, {{"c", "x"}, {"c", "y"}, {"c", "z"}}, {}, 1), 2, {1, 2});
        }
        total += sweep_against_oracle(
            inst({"a", "b", "v", "c", "d"},
                 {{"a", "b"}, {"b", "v"}, {"v", "a"}, {"v", "c"}, {"c", "d"}, {"d", "v"}},
                 {}, 1),
            2, {1, 2});
        CHECK(total > 150);
    }

    TEST_CASE("several non-trivial components split at omega one") {
        Edges two = {{"a", "b"}, {"b", "c"}, {"c", "a"},
                     {"x", "y"}, {"y", "z"}, {"z", "x"}};
        auto yes = inst({"a", "b", "c", "x", "y", "z"}, two, {{"a", "x"}, {"b", "y"}}, 1);
        Decision dy = decide(yes);
        CHECK(dy.yes);
        CHECK(dy.trace[0].rule == Rule::Split);
        REQUIRE_FALSE(dy.pieces.empty());
        for (const auto& p : dy.pieces)
            CHECK(check_certificate(p.instance, p.certificate).accepted);

        // an octahedron component with an antipodal chord poisons the whole
        auto vs = spbtest::labels(6);
        vs.push_back("a");
        vs.push_back("b");
        vs.push_back("c");
        Edges bb = spbtest::octahedron();
        bb.push_back({"a", "b"});
        bb.push_back({"b", "c"});
        bb.push_back({"c", "a"});
        auto no = inst(vs, bb, {{"1", "6"}, {"1", "a"}}, 1);
        CHECK_FALSE(decide(no).yes);
    }

    TEST_CASE("disconnected unions decide piecewise") {
        // hexagon with its long chords in one union component, a floating
        // triangle in the other
        auto vs = spbtest::labels(6);
        vs.push_back("a");
        vs.push_back("b");
        vs.push_back("c");
        Edges bb = spbtest::cycle(6);
        bb.push_back({"a", "b"});
        bb.push_back({"b", "c"});
        bb.push_back({"c", "a"});
        Edges chords = {{"1", "4"}, {"2", "5"}, {"3", "6"}};

        Decision no = decide(inst(vs, bb, chords, 3));
        CHECK_FALSE(no.yes);
        Decision yes = decide(inst(vs, bb, chords, 2));
        CHECK(yes.yes);
        REQUIRE_FALSE(yes.trace.empty());
        CHECK(yes.trace[0].rule == Rule::Split);
    }

    TEST_CASE("saturated windows reduce to union planarity") {
        // two tetrahedra joined by one late edge: saturated at omega 2
        std::vector<std::string> vs = spbtest::labels(4);
        for (int k = 1; k <= 4; ++k) vs.push_back("b" + std::to_string(k));
        Edges bb = spbtest::complete(4);
        for (int a = 1; a <= 4; ++a)
            for (int b = a + 1; b <= 4; ++b)
                bb.push_back({"b" + std::to_string(a), "b" + std::to_string(b)});
        auto i = inst(vs, bb, {{"1", "b1"}}, 2);
        Decision d = decide(i);
        CHECK(d.yes);
        REQUIRE(d.trace.size() == 1);
        CHECK(d.trace[0].rule == Rule::Exhaustive);
        CHECK_FALSE(d.trace[0].np_hard);
        CHECK(planarity_check(union_graph(i)));

        // all six cross edges alive at once force K4,4-ish congestion but
        // remain planar here; force a non-planar union instead via K5
        auto vs2 = spbtest::labels(5);
        Edges bb2 = spbtest::cycle(5);
        std::set<Edge> taken;
        for (auto [u, v] : bb2) taken.insert(std::minmax(u, v));
        Edges st2;
        for (const auto& [u, v] : spbtest::complete(5))
            if (!taken.count(std::minmax(u, v)))
                st2.push_back({u, v});
        auto k5 = inst(vs2, bb2, st2, 10);
        CHECK_FALSE(decide(k5).yes);
        auto fine = inst(vs2, bb2, st2, 1);
        CHECK(decide(fine).yes);
    }

    TEST_CASE("leaf-attached tree streams run the tree search") {
        // The comb is satisfiable at every window: visiting leaves 1..3 on the
        // way out and 6..4 on the way back nests all three chords.
        for (int w : {1, 2, 3}) {
            auto i = comb_instance(w);
            Decision d = decide(i);
            CHECK(d.yes);
            CHECK(d.yes == brute_oracle(i));
        }
        // Window three covers the whole stream, so only window two reaches
        // the tree search itself.
        Decision arm = decide(comb_instance(2));
        REQUIRE_FALSE(arm.trace.empty());
        CHECK(arm.trace[0].rule == Rule::Exhaustive);
        CHECK(arm.trace[0].np_hard);
        Decision sat = decide(comb_instance(3));
        REQUIRE_FALSE(sat.trace.empty());
        CHECK_FALSE(sat.trace[0].np_hard);
    }

    TEST_CASE("tree streams can be impossible at wide windows") {
        // Four branches of three leaves each, chords forming a K4 pattern
        // between the branches.  Any circular order of the branches leaves
        // two chords between the separated pair, so the full set never
        // embeds at once, yet a staggered stream order survives window two.
        std::vector<std::string> vs = {"r"};
        Edges bb;
        for (char b : {'a', 'b', 'c', 'd'}) {
            std::string hub = std::string("u") + b;
            vs.push_back(hub);
            bb.push_back({"r", hub});
            for (int k = 1; k <= 3; ++k) {
                std::string leaf = b + std::to_string(k);
                vs.push_back(leaf);
                bb.push_back({hub, leaf});
            }
        }
        Edges st = {{"a1", "b1"}, {"a2", "c1"}, {"b2", "c2"},
                    {"b3", "d1"}, {"a3", "d2"}, {"c3", "d3"}};

        auto wide = inst(vs, bb, st, 6);
        Decision no = decide(wide);
        CHECK_FALSE(no.yes);
        CHECK_FALSE(planarity_check(union_graph(wide)));

        auto narrow = inst(vs, bb, st, 2);
        Decision yes = decide(narrow);
        CHECK(yes.yes == brute_oracle(narrow));
        CHECK(yes.yes);
        REQUIRE_FALSE(yes.trace.empty());
        CHECK(yes.trace[0].np_hard);

        auto lone = inst(vs, bb, st, 1);
        CHECK(decide(lone).yes);
    }

    TEST_CASE("cutvertex shapes at omega two run without a witness") {
        auto i = inst({"a", "b", "v", "c", "d"},
                      {{"a", "b"}, {"b", "v"}, {"v", "a"},
                       {"v", "c"}, {"c", "d"}, {"d", "v"}},
                      {{"a", "c"}, {"a", "d"}, {"b", "c"}}, 2);
        Decision d = decide(i);
        CHECK(d.yes == brute_oracle(i));
        CHECK_FALSE(d.witness.has_value());
        CHECK(d.pieces.empty());
        REQUIRE_FALSE(d.trace.empty());
        CHECK(d.trace[0].np_hard);
    }

    TEST_CASE("honest refusal for shapes without a procedure") {
        Edges two = {{"a", "b"}, {"b", "c"}, {"c", "a"},
                     {"x", "y"}, {"y", "z"}, {"z", "x"}};
        auto i = inst({"a", "b", "c", "x", "y", "z"}, two,
                      {{"a", "x"}, {"b", "y"}, {"c", "z"}}, 2);
        CHECK_THROWS_AS(decide(i), UnsupportedShape);
    }

    TEST_CASE("invalid instances are refused up front") {
        auto dup = inst({"1", "2", "3", "q"}, spbtest::cycle(3), {{"q", "1"}, {"1", "q"}}, 1);
        CHECK_THROWS_AS(decide(dup), ParseError);
        auto bad_omega = inst({"1", "2", "3"}, spbtest::cycle(3), {}, 0);
        CHECK_THROWS_AS(decide(bad_omega), ParseError);
    }

    TEST_CASE("mode forcing") {
        auto star = inst({"1", "2", "3", "q"}, spbtest::cycle(3), {{"q", "1"}}, 2);
        CHECK(decide(star, DecideMode::Star).yes);
        CHECK(decide(star, DecideMode::Exhaustive).yes);
        CHECK_THROWS_AS(decide(star, DecideMode::Algocon), UnsupportedOmega);

        Edges bowtie = {{"a", "b"}, {"b", "v"}, {"v", "a"},
                        {"v", "c"}, {"c", "d"}, {"d", "v"}};
        auto multi = inst({"a", "b", "v", "c", "d"}, bowtie, {}, 1);
        CHECK_THROWS_AS(decide(multi, DecideMode::Star), WrongCategory);
        CHECK(decide(multi, DecideMode::Algocon).yes);
    }

    TEST_CASE("witnesses can be switched off") {
        auto i = inst(spbtest::labels(4), spbtest::cycle(4), {{"1", "3"}, {"2", "4"}}, 2);
        SolveOptions opts;
        opts.want_witness = false;
        Decision d = decide(i, DecideMode::Auto, opts);
        CHECK(d.yes);
        CHECK_FALSE(d.witness.has_value());
        CHECK(d.pieces.empty());
    }
}

TEST_SUITE("window laws") {
    TEST_CASE("shrinking the window never flips yes to no") {
        auto vs = spbtest::labels(4);
        vs.push_back("q");
        auto base = inst(vs, spbtest::cycle(4), {}, 1);
        Edges pool = free_pairs(base);
        // all 3-subsets in one fixed order
        for (std::size_t a = 0; a < pool.size(); ++a)
            for (std::size_t b = a + 1; b < pool.size(); ++b)
                for (std::size_t c = b + 1; c < pool.size(); ++c) {
                    Edges st = {pool[a], pool[b], pool[c]};
                    bool prev = false;
                    for (int w = 3; w >= 1; --w) {
                        bool now = decide(inst(vs, spbtest::cycle(4), st, w)).yes;
                        if (prev) CHECK(now);
                        prev = now;
                    }
                }
    }

    TEST_CASE("windows beyond the stream length equal union planarity") {
        auto vs = spbtest::labels(4);
        vs.push_back("q");
        auto base = inst(vs, spbtest::cycle(4), {}, 1);
        Edges pool = free_pairs(base);
        for (std::size_t a = 0; a < pool.size(); ++a)
            for (std::size_t b = a + 1; b < pool.size(); ++b) {
                Edges st = {pool[a], pool[b]};
                auto i = inst(vs, spbtest::cycle(4), st, 2);
                CHECK(decide(i).yes == planarity_check(union_graph(i)));
            }
    }
}

TEST_SUITE("engine equivalence") {
    TEST_CASE("faithful and iterative runs match on generated instances") {
        for (std::uint64_t seed = 1; seed <= 12; ++seed) {
            auto i = gen_tree_instance(40, 18, 1, seed);
            SolveOptions a;
            a.impl = EngineImpl::Faithful;
            SolveOptions b;
            b.impl = EngineImpl::Iterative;
            Decision da = decide(i, DecideMode::Auto, a);
            Decision db = decide(i, DecideMode::Auto, b);
            CHECK(da.yes == db.yes);
            REQUIRE(da.trace.size() == db.trace.size());
            for (std::size_t k = 0; k < da.trace.size(); ++k) {
                CHECK(da.trace[k].rule == db.trace[k].rule);
                CHECK(da.trace[k].depth == db.trace[k].depth);
                CHECK(da.trace[k].blocks == db.trace[k].blocks);
                CHECK(da.trace[k].iso_iso == db.trace[k].iso_iso);
            }
        }
    }

    TEST_CASE("sampled pieces from the engine check out") {
        auto i = gen_tree_instance(120, 60, 1, 7);
        std::vector<PieceWitness> sample;
        SolveOptions opts;
        opts.impl = EngineImpl::Iterative;
        opts.sample_pieces_out = &sample;
        opts.sample_piece_cap = 10;
        Decision d = decide(i, DecideMode::Auto, opts);
        CHECK(d.yes);
        CHECK(sample.size() <= 10);
        CHECK_FALSE(sample.empty());
        for (const auto& p : sample) {
            CHECK(check_certificate(p.instance, p.certificate).accepted);
            CHECK(brute_oracle(p.instance) );
        }
    }

    TEST_CASE("the block and cluster counts sink along every branch") {
        for (std::uint64_t seed = 20; seed <= 26; ++seed) {
            auto i = gen_tree_instance(30, 14, 1, seed);
            Decision d = decide(i);
            // parent of an entry at depth k: the latest earlier entry at
            // depth k-1
            for (std::size_t k = 0; k < d.trace.size(); ++k) {
                if (d.trace[k].depth == 0) continue;
                for (std::size_t p = k; p-- > 0;) {
                    if (d.trace[p].depth != d.trace[k].depth - 1) continue;
                    auto parent = std::make_pair(d.trace[p].blocks, d.trace[p].iso_iso);
                    auto child = std::make_pair(d.trace[k].blocks, d.trace[k].iso_iso);
                    CHECK(child < parent);
                    break;
                }
            }
        }
    }
}

TEST_SUITE("generators") {
    TEST_CASE("random instances are valid and seed-stable") {
        RandomSpec spec;
        spec.vertices = 12;
        spec.stream = 6;
        spec.omega = 2;
        spec.seed = 42;
        auto a = gen_random_instance(spec);
        auto b = gen_random_instance(spec);
        CHECK(a.vertices() == b.vertices());
        CHECK(a.backbone_edges() == b.backbone_edges());
        CHECK(a.stream() == b.stream());
        CHECK(validate(a).ok());
        spec.seed = 43;
        auto c = gen_random_instance(spec);
        CHECK((a.backbone_edges() != c.backbone_edges() || a.stream() != c.stream()));
    }

    TEST_CASE("star instances have the star shape") {
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            auto i = gen_star_instance(5, 2, 4, 2, seed);
            CHECK(validate(i).ok());
            auto c = classify(i);
            CHECK(c.category == Category::Star);
            CHECK(c.block_count == 1);
        }
    }

    TEST_CASE("tree instances are trees and leaf streams stay on leaves") {
        auto i = gen_tree_instance(30, 10, 1, 5);
        CHECK(validate(i).ok());
        CHECK(i.backbone_edges().size() == 29);
        CHECK(blocks(i.backbone_graph()).nontrivial_component_count == 1);

        auto j = gen_tree_instance(30, 10, 2, 5, true);
        const Graph& g = j.backbone_graph();
        for (const auto& [u, v] : j.stream()) {
            CHECK(g.degree(g.id_of(u)) == 1);
            CHECK(g.degree(g.id_of(v)) == 1);
        }
    }

    TEST_CASE("impossible requests are refused") {
        CHECK_THROWS_AS(gen_tree_instance(3, 50, 1, 1), ShapeViolation);
    }
}
