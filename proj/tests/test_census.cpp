#include "doctest.h"

#include "commgraph/census.hpp"

#include "helpers.hpp"

using namespace cg;

TEST_CASE("the M_3(F_2) census partitions all 510 non-scalars") {
    Field f = Field::finite(2, 1);
    CensusGraph g = census_build(f, 3);
    long long total = 0;
    for (const auto& cls : g.classes()) {
        CHECK(cls.size >= 1);
        CHECK_FALSE(cls.rep.is_scalar());
        CHECK(centralizer(cls.rep).space.signature() == cls.signature);
        total += cls.size;
    }
    CHECK(total == 510);
    CHECK(g.classes().size() > 1);

    // adjacency: symmetric, irreflexive, edges are commuting representatives
    const auto& adj = g.adjacency();
    REQUIRE(adj.size() == g.classes().size());
    for (std::size_t i = 0; i < adj.size(); ++i)
        for (int j : adj[i]) {
            CHECK(j != static_cast<int>(i));
            const Matrix& A = g.classes()[i].rep;
            const Matrix& B = g.classes()[j].rep;
            CHECK(A * B == B * A);
        }

    // membership lookup agrees with the stored partition sizes
    long long counted = 0;
    for (std::uint64_t bits = 0; bits < 512; ++bits) {
        Matrix A = cgtest::gf2_matrix_from_bits(f, 3, bits);
        if (A.is_scalar()) continue;
        int c = g.class_of(A);
        REQUIRE(c >= 0);
        REQUIRE(c < static_cast<int>(g.classes().size()));
        ++counted;
    }
    CHECK(counted == 510);
}

TEST_CASE("the commuting graph of M_3(F_2) splits into the field copies plus one bulk") {
    Field f = Field::finite(2, 1);
    CensusGraph g = census_build(f, 3);
    CHECK(g.components() == 9);

    DiameterReport dr = census_diameter(g);
    CHECK_FALSE(dr.connected);
    REQUIRE(dr.components.size() == 9);
    int singleton_classes = 0;
    long long isolated_vertices = 0;
    for (const auto& comp : dr.components) {
        if (comp.class_count == 1) {
            ++singleton_classes;
            isolated_vertices += comp.vertex_count;
            CHECK(comp.diameter == 1); // distinct members of one class are adjacent
        }
    }
    // eight copies of the degree-three extension field, six non-scalars each
    CHECK(singleton_classes == 8);
    CHECK(isolated_vertices == 48);

    REQUIRE(dr.class_eccentricity.size() == g.classes().size());
    for (std::size_t i = 0; i < g.classes().size(); ++i) {
        auto d = census_bfs(g, static_cast<int>(i));
        int ecc = 0;
        bool in_class_pair = g.classes()[i].size >= 2;
        for (int v : d)
            if (v > ecc) ecc = v;
        if (in_class_pair && ecc < 1) ecc = 1;
        CHECK(dr.class_eccentricity[i] == ecc);
    }
}

TEST_CASE("quotient distances lift to matrix distances") {
    Field f = Field::finite(2, 1);
    CensusGraph g = census_build(f, 3);
    SplitMix64 rng(97);
    const auto& classes = g.classes();
    for (int t = 0; t < 60; ++t) {
        const Matrix& A = classes[rng.bounded(classes.size())].rep;
        const Matrix& B = classes[rng.bounded(classes.size())].rep;
        DistanceResult via_census = census_distance(g, A, B);
        DistanceResult le2 = distance_le2(A, B);
        if (le2.verdict != Verdict::unknown) {
            CHECK(via_census.verdict == le2.verdict);
        } else {
            CHECK((via_census.verdict == Verdict::d3 || via_census.verdict == Verdict::d4 ||
                   via_census.verdict == Verdict::ge5 ||
                   via_census.verdict == Verdict::unreachable));
        }
    }
    // two distinct members of one class are adjacent
    for (const auto& cls : classes) {
        if (cls.size < 2) continue;
        Matrix other = cls.rep + Matrix::identity(f, 3);
        if (other.is_scalar() || g.class_of(other) != g.class_of(cls.rep)) continue;
        CHECK(census_distance(g, cls.rep, other).verdict == Verdict::d1);
        break;
    }
}

TEST_CASE("census serialization round-trips") {
    Field f = Field::finite(2, 1);
    CensusGraph g = census_build(f, 2);
    json j = g.to_json();
    CensusGraph h = CensusGraph::from_json(j);
    CHECK(h.field() == g.field());
    CHECK(h.n() == g.n());
    REQUIRE(h.classes().size() == g.classes().size());
    for (std::size_t i = 0; i < g.classes().size(); ++i) {
        CHECK(h.classes()[i].signature == g.classes()[i].signature);
        CHECK(h.classes()[i].rep == g.classes()[i].rep);
        CHECK(h.classes()[i].size == g.classes()[i].size);
    }
    CHECK(h.adjacency() == g.adjacency());
    CHECK(h.component() == g.component());
    CHECK(h.to_json() == j);

    DiameterReport dr = census_diameter(g);
    json rep = diameter_report_to_json(g, dr);
    CHECK(rep.contains("connected"));
    CHECK(rep.contains("components"));
}

TEST_CASE("the census budget guard fires on oversized requests") {
    Field f = Field::finite(2, 1);
    try {
        census_build(f, 3, Int(8));
        FAIL("budget ignored");
    } catch (const Error& e) {
        CHECK(e.code == Err::BudgetExceeded);
    }
    CHECK(census_default_budget() == (Int(1) << 24));
}
