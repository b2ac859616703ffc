#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ryserlab/planes.hpp"

using namespace ryserlab;
using planes::IncidencePlane;
using planes::TruncatedStructure;

namespace {

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return (int)out.size();
}

const long long kPlaneOrders[] = {2, 3, 4, 5, 7, 8, 9};

}  // namespace

TEST_CASE("projective planes satisfy both incidence axioms exhaustively") {
    for (long long q : kPlaneOrders) {
        IncidencePlane pg = planes::build_projective(q);
        long long expect = q * q + q + 1;
        REQUIRE((long long)pg.points.size() == expect);
        REQUIRE((long long)pg.lines.size() == expect);
        for (const auto& line : pg.lines)
            CHECK((long long)line.size() == q + 1);

        // two lines meet in exactly one point
        for (size_t i = 0; i < pg.lines.size(); i++)
            for (size_t j = i + 1; j < pg.lines.size(); j++)
                CHECK(intersection_size(pg.lines[i], pg.lines[j]) == 1);

        // two points lie on exactly one common line
        std::vector<std::vector<int>> lines_of(pg.points.size());
        for (size_t li = 0; li < pg.lines.size(); li++)
            for (int p : pg.lines[li]) lines_of[p].push_back((int)li);
        for (size_t a = 0; a < pg.points.size(); a++)
            for (size_t b = a + 1; b < pg.points.size(); b++)
                CHECK(intersection_size(lines_of[a], lines_of[b]) == 1);
    }
}

TEST_CASE("projective plane point labels are distinct normalized triples") {
    IncidencePlane pg = planes::build_projective(3);
    std::set<std::string> labels(pg.points.begin(), pg.points.end());
    CHECK(labels.size() == pg.points.size());
    CHECK(pg.points[0] == "(0:0:1)");
}

TEST_CASE("affine planes: counts, parallel classes, cross-class meets") {
    for (long long q : kPlaneOrders) {
        IncidencePlane ag = planes::build_affine(q);
        REQUIRE((long long)ag.points.size() == q * q);
        REQUIRE((long long)ag.lines.size() == q * (q + 1));
        REQUIRE((long long)ag.parallel_classes.size() == q + 1);
        for (const auto& line : ag.lines) CHECK((long long)line.size() == q);

        for (const auto& cls : ag.parallel_classes) {
            REQUIRE((long long)cls.size() == q);
            // a parallel class partitions the points
            std::set<int> covered;
            for (int li : cls)
                for (int p : ag.lines[li]) covered.insert(p);
            CHECK((long long)covered.size() == q * q);
            for (size_t i = 0; i < cls.size(); i++)
                for (size_t j = i + 1; j < cls.size(); j++)
                    CHECK(intersection_size(ag.lines[cls[i]], ag.lines[cls[j]]) == 0);
        }
        // lines from different classes meet exactly once
        for (size_t ci = 0; ci < ag.parallel_classes.size(); ci++)
            for (size_t cj = ci + 1; cj < ag.parallel_classes.size(); cj++)
                for (int li : ag.parallel_classes[ci])
                    for (int lj : ag.parallel_classes[cj])
                        CHECK(intersection_size(ag.lines[li], ag.lines[lj]) == 1);
    }
}

TEST_CASE("affine examples from small orders") {
    IncidencePlane ag2 = planes::build_affine(2);
    CHECK(ag2.points.size() == 4);
    CHECK(ag2.lines.size() == 6);
    CHECK(ag2.parallel_classes.size() == 3);

    IncidencePlane ag3 = planes::build_affine(3);
    CHECK(ag3.points.size() == 9);
    CHECK(ag3.lines.size() == 12);
    CHECK(ag3.parallel_classes.size() == 4);

    CHECK_THROWS_AS(planes::build_affine(6), NotAPrimePower);
    CHECK_THROWS_AS(planes::build_projective(10), NotAPrimePower);
}

TEST_CASE("truncated projective planes") {
    for (long long q : {2LL, 3LL, 4LL, 5LL}) {
        TruncatedStructure t = planes::truncate_projective(q);
        const auto& h = t.base;
        CHECK(h.r == q + 1);
        CHECK(h.vertex_count() == q * q + q);
        CHECK(h.edge_count() == q * q);
        for (const auto& c : h.classes) CHECK((long long)c.size() == q);
        CHECK(hg::is_uniform(h, (int)q + 1));
        CHECK(hg::is_r_partite(h));
        CHECK(hg::is_intersecting(h));
    }
    // the spec'd small cases
    auto t2 = planes::truncate_projective(2).base;
    CHECK(t2.vertex_count() == 6);
    CHECK(t2.edge_count() == 4);
    auto t3 = planes::truncate_projective(3).base;
    CHECK(t3.vertex_count() == 12);
    CHECK(t3.edge_count() == 9);
    CHECK(t3.r == 4);
}

TEST_CASE("A_p satisfies all four structure properties") {
    for (long long p : kPlaneOrders) {
        TruncatedStructure t = planes::build_Ap(p);
        const auto& h = t.base;

        // 1: (p+1)-partite with classes of size p-1
        CHECK(h.r == p + 1);
        CHECK((long long)h.classes.size() == p + 1);
        for (const auto& c : h.classes) CHECK((long long)c.size() == p - 1);
        CHECK(hg::is_r_partite(h));

        // 2: p-uniform
        CHECK(hg::is_uniform(h, (int)p));
        CHECK(h.vertex_count() == p * p - 1);
        CHECK(h.edge_count() == p * p - 1);

        // 3: p+1 parallel classes of p-1 disjoint edges; cross-class
        // intersections are exactly one vertex
        REQUIRE((long long)t.parallel_classes.size() == p + 1);
        std::vector<int> class_of(h.edge_count(), -1);
        for (size_t ci = 0; ci < t.parallel_classes.size(); ci++) {
            CHECK((long long)t.parallel_classes[ci].size() == p - 1);
            for (int e : t.parallel_classes[ci]) class_of[e] = (int)ci;
        }
        for (int e = 0; e < h.edge_count(); e++) REQUIRE(class_of[e] != -1);
        for (int a = 0; a < h.edge_count(); a++)
            for (int b = a + 1; b < h.edge_count(); b++) {
                int want = class_of[a] == class_of[b] ? 0 : 1;
                CHECK(intersection_size(h.edges[a], h.edges[b]) == want);
            }

        // 4: each edge of C_i is disjoint from V_i
        for (size_t ci = 0; ci < t.parallel_classes.size(); ci++)
            for (int e : t.parallel_classes[ci])
                CHECK(intersection_size(h.edges[e], h.classes[ci]) == 0);
    }
}

TEST_CASE("A_p small examples") {
    auto a3 = planes::build_Ap(3).base;
    CHECK(a3.vertex_count() == 8);
    CHECK(a3.edge_count() == 8);
    CHECK(a3.r == 4);

    auto a5 = planes::build_Ap(5).base;
    CHECK(a5.vertex_count() == 24);
    CHECK(a5.edge_count() == 24);
    CHECK(a5.r == 6);

    // degenerate triangle
    auto a2 = planes::build_Ap(2);
    CHECK(a2.base.vertex_count() == 3);
    CHECK(a2.base.edge_count() == 3);
    CHECK(a2.base.r == 3);
    CHECK(hg::is_uniform(a2.base, 2));
    CHECK(a2.base.meta.at("degenerate") == "1");
    CHECK(hg::is_intersecting(a2.base));

    CHECK_THROWS_AS(planes::build_Ap(6), NotAPrimePower);
}

TEST_CASE("J gadget structure") {
    for (long long p : {3LL, 4LL, 5LL, 8LL, 9LL}) {
        TruncatedStructure t = planes::build_J_gadget(p);
        const auto& h = t.base;
        long long q = p - 1;
        CHECK(h.r == q);
        CHECK(h.vertex_count() == q * q);
        CHECK(h.edge_count() == q * q);
        for (const auto& c : h.classes) CHECK((long long)c.size() == q);
        CHECK(hg::is_uniform(h, (int)q));
        CHECK(hg::is_r_partite(h));

        REQUIRE((long long)t.parallel_classes.size() == q);
        std::vector<int> class_of(h.edge_count(), -1);
        for (size_t ci = 0; ci < t.parallel_classes.size(); ci++) {
            CHECK((long long)t.parallel_classes[ci].size() == q);
            for (int e : t.parallel_classes[ci]) class_of[e] = (int)ci;
        }
        for (int a = 0; a < h.edge_count(); a++)
            for (int b = a + 1; b < h.edge_count(); b++) {
                int want = class_of[a] == class_of[b] ? 0 : 1;
                CHECK(intersection_size(h.edges[a], h.edges[b]) == want);
            }
    }

    auto j3 = planes::build_J_gadget(3).base;
    CHECK(j3.vertex_count() == 4);
    CHECK(j3.edge_count() == 4);

    CHECK_THROWS_AS(planes::build_J_gadget(2), NotAPrimePower);  // p-1 = 1
    CHECK_THROWS_AS(planes::build_J_gadget(7), NotAPrimePower);  // p-1 = 6
    CHECK_THROWS_AS(planes::build_J_gadget(15), NotAPrimePower);
}

TEST_CASE("canonical affine cover hits every line with size 2q-1") {
    for (long long q : {2LL, 3LL, 4LL, 5LL, 7LL, 8LL, 9LL, 11LL}) {
        IncidencePlane ag = planes::build_affine(q);
        auto cover = planes::canonical_affine_cover(ag);
        CHECK((long long)cover.size() == 2 * q - 1);
        std::set<int> in(cover.begin(), cover.end());
        for (const auto& line : ag.lines) {
            bool hit = false;
            for (int p : line)
                if (in.count(p)) hit = true;
            CHECK(hit);
        }
    }
    CHECK_THROWS_AS(
        planes::canonical_affine_cover(planes::build_projective(2)),
        PreconditionViolated);
}

TEST_CASE("constructions are deterministic") {
    CHECK(planes::build_projective(4) == planes::build_projective(4));
    CHECK(planes::build_affine(5) == planes::build_affine(5));
    CHECK(planes::build_Ap(4) == planes::build_Ap(4));
    CHECK(planes::build_J_gadget(5) == planes::build_J_gadget(5));
    CHECK(planes::truncate_projective(3) == planes::truncate_projective(3));
}

TEST_CASE("plane hypergraph wrappers carry the right metadata") {
    auto ag3 = planes::plane_to_hypergraph(planes::build_affine(3));
    CHECK(ag3.meta.at("construction") == "ag");
    CHECK(ag3.meta.at("tau_guarantee") == "5");
    CHECK(ag3.r == 9);
    CHECK(ag3.edge_count() == 12);
    CHECK(hg::is_r_partite(ag3));

    auto pg2 = planes::plane_to_hypergraph(planes::build_projective(2));
    CHECK(pg2.meta.at("claim_intersecting") == "1");
    CHECK(hg::is_intersecting(pg2));
}
