#include "cone.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "test_support.hpp"

using namespace fanlab;
using namespace fanlab::test;

TEST_CASE("primitivize strips content and rejects zero") {
    CHECK(primitivize(iv({2, 4, -6})) == iv({1, 2, -3}));
    CHECK(primitivize(iv({-3, 0, 0})) == iv({-1, 0, 0}));
    CHECK_THROWS(primitivize(iv({0, 0})));

    RatVec q{make_rat(1, 2), make_rat(-3, 4)};
    CHECK(primitivize_rat(q) == iv({2, -3}));
}

TEST_CASE("positive octant: facets, faces, classification") {
    const Cone c = cone_from_generators(3, ivs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(c.dim == 3);
    CHECK(c.pointed);
    CHECK(c.rays.size() == 3);
    CHECK(c.perp_basis.empty());
    CHECK(c.facet_normals == ivs({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
    CHECK(dual_description(c) == ivs({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));

    const auto fs = faces(c);
    REQUIRE(fs.size() == 8);  // all generator subsets, the cone is simplicial
    CHECK(fs.front().generator_indices.empty());
    CHECK(fs.front().dim == 0);
    CHECK(fs.back().generator_indices == std::vector<std::size_t>{0, 1, 2});
    CHECK(fs.back().dim == 3);

    const ConeClass k = classify(c);
    CHECK(k.dim == 3);
    CHECK(k.strongly_convex);
    CHECK(k.simplicial);
    CHECK(k.smooth);
}

TEST_CASE("single ray in the plane needs three cutting covectors") {
    const Cone c = cone_from_generators(2, ivs({{1, 2}}));
    CHECK(c.dim == 1);
    CHECK(c.pointed);
    REQUIRE(c.rays == ivs({{1, 2}}));

    const auto desc = dual_description(c);
    CHECK(desc == ivs({{-2, 1}, {1, 2}, {2, -1}}));

    // oracle: description must cut exactly the lattice points on the ray
    for (const IntVec& v : grid_points(2, 5)) {
        const bool expect = in_cone_caratheodory(c.rays, v, 2);
        CHECK(satisfies_description(desc, v) == expect);
    }
}

TEST_CASE("quadrilateral cone over the unit square") {
    // rays (+-1, +-1, 1); the cone is z >= |x|, z >= |y|
    const std::vector<IntVec> gens = ivs({{1, 1, 1}, {1, -1, 1}, {-1, -1, 1}, {-1, 1, 1}});
    const Cone c = cone_from_generators(3, gens);
    CHECK(c.dim == 3);
    CHECK(c.pointed);
    CHECK(c.rays.size() == 4);
    CHECK(c.facet_normals == ivs({{-1, 0, 1}, {0, -1, 1}, {0, 1, 1}, {1, 0, 1}}));

    // derived check: every facet covector is nonnegative on all generators
    // and vanishes on exactly two of them
    for (const IntVec& h : c.facet_normals) {
        std::size_t zero = 0;
        for (const IntVec& g : gens) {
            const Int d = dot(h, g);
            REQUIRE(sgn(d) >= 0);
            if (sgn(d) == 0) ++zero;
        }
        CHECK(zero == 2);
    }

    // membership against the independent |x|,|y| <= z characterization
    for (const IntVec& v : grid_points(3, 3)) {
        const bool expect = sgn(v[2]) >= 0 && abs(v[0]) <= v[2] && abs(v[1]) <= v[2];
        CHECK(cone_contains(c, v) == expect);
    }

    // 1 zero face + 4 rays + 4 two-dimensional faces + the cone
    CHECK(faces(c).size() == 10);

    const ConeClass k = classify(c);
    CHECK(k.strongly_convex);
    CHECK(!k.simplicial);
    CHECK(!k.smooth);
}

TEST_CASE("redundant and duplicate generators are filtered out") {
    // (1,1) is interior, (2,0) duplicates (1,0)
    const GeneratorAnalysis a =
        analyze_generators(2, ivs({{1, 0}, {1, 1}, {0, 1}, {2, 0}}));
    CHECK(a.cone.rays == ivs({{1, 0}, {0, 1}}));
    CHECK(a.extreme == std::vector<bool>{true, false, true, true});
}

TEST_CASE("non-pointed input is detected") {
    const GeneratorAnalysis a = analyze_generators(2, ivs({{1, 0}, {-1, 0}, {0, 1}}));
    CHECK(!a.cone.pointed);
    CHECK(a.cone.dim == 2);
    CHECK(a.extreme == std::vector<bool>{false, false, false});

    // a full line
    const GeneratorAnalysis l = analyze_generators(3, ivs({{1, 2, 3}, {-1, -2, -3}}));
    CHECK(!l.cone.pointed);
    CHECK(l.cone.dim == 1);
}

TEST_CASE("zero cone") {
    const Cone z = cone_from_generators(3, {});
    CHECK(z.dim == 0);
    CHECK(z.pointed);
    CHECK(z.rays.empty());
    CHECK(z.perp_basis == ivs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(cone_contains(z, iv({0, 0, 0})));
    CHECK(!cone_contains(z, iv({1, 0, 0})));
    REQUIRE(faces(z).size() == 1);
    CHECK(faces(z).front().dim == 0);
    const ConeClass k = classify(z);
    CHECK(k.simplicial);
    CHECK(k.smooth);
}

TEST_CASE("lower-dimensional cone carries perp constraints") {
    // 2-dimensional cone inside Q^3, spanning the plane x + y - z = 0
    const Cone c = cone_from_generators(3, ivs({{1, 0, 1}, {0, 1, 1}}));
    CHECK(c.dim == 2);
    REQUIRE(c.perp_basis.size() == 1);
    CHECK(sgn(dot(c.perp_basis[0], iv({1, 0, 1}))) == 0);
    CHECK(sgn(dot(c.perp_basis[0], iv({0, 1, 1}))) == 0);

    for (const IntVec& v : grid_points(3, 2)) {
        const bool expect = in_cone_caratheodory(c.rays, v, 3);
        CHECK(cone_contains(c, v) == expect);
    }
}

TEST_CASE("intersections of adjacent cones") {
    const Cone top = cone_from_generators(3, ivs({{1, 1, 1}, {1, -1, 1}, {-1, -1, 1}, {-1, 1, 1}}));
    const Cone side = cone_from_generators(3, ivs({{1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {1, -1, -1}}));
    const Cone shared = intersect(top, side);
    CHECK(shared.dim == 2);
    CHECK(shared.rays == ivs({{1, -1, 1}, {1, 1, 1}}));  // canonical lex order
    CHECK(is_face_of(shared, top));
    CHECK(is_face_of(shared, side));

    const Cone bottom =
        cone_from_generators(3, ivs({{1, 1, -1}, {1, -1, -1}, {-1, -1, -1}, {-1, 1, -1}}));
    const Cone opposite = intersect(top, bottom);
    CHECK(opposite.dim == 0);
    CHECK(opposite.rays.empty());

    const Cone a = cone_from_generators(2, ivs({{1, 0}, {1, 2}}));
    const Cone b = cone_from_generators(2, ivs({{1, 1}, {0, 1}}));
    CHECK(intersect(a, b).rays == ivs({{1, 1}, {1, 2}}));

    CHECK(intersect(a, a).rays == ivs({{1, 0}, {1, 2}}));
}

TEST_CASE("face relation distinguishes faces from mere subcones") {
    const Cone top = cone_from_generators(3, ivs({{1, 1, 1}, {1, -1, 1}, {-1, -1, 1}, {-1, 1, 1}}));
    CHECK(is_face_of(cone_from_generators(3, ivs({{1, 1, 1}})), top));
    CHECK(is_face_of(cone_from_generators(3, {}), top));
    CHECK(is_face_of(top, top));
    // (1,0,1) lies inside but its ray is not a face
    CHECK(cone_contains(top, iv({1, 0, 1})));
    CHECK(!is_face_of(cone_from_generators(3, ivs({{1, 0, 1}})), top));
    // a 2-dimensional subcone through the interior is not a face either
    CHECK(!is_face_of(cone_from_generators(3, ivs({{1, 1, 1}, {-1, -1, 1}})), top));
}

TEST_CASE("classification of non-smooth simplicial cones") {
    const ConeClass k = classify(cone_from_generators(2, ivs({{1, 1}, {1, -1}})));
    CHECK(k.simplicial);
    CHECK(!k.smooth);  // index-2 sublattice

    CHECK(classify(cone_from_generators(2, ivs({{1, 2}}))).smooth);
    CHECK(classify(cone_from_generators(3, ivs({{1, 0, 0}, {0, 1, 2}}))).smooth);
}

TEST_CASE("dual description is exact on randomized cones") {
    Rng rng(0x5eedc0de);
    int pointed_seen = 0, nonpointed_seen = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t ambient = trial % 2 == 0 ? 2 : 3;
        const std::size_t count = static_cast<std::size_t>(rng.range(1, 5));
        std::vector<IntVec> gens;
        for (std::size_t i = 0; i < count; ++i) {
            IntVec g(ambient);
            bool zero = true;
            while (zero) {
                for (std::size_t j = 0; j < ambient; ++j) {
                    g[j] = rng.range(-3, 3);
                    if (sgn(g[j]) != 0) zero = false;
                }
            }
            gens.push_back(g);
        }
        const GeneratorAnalysis a = analyze_generators(ambient, gens);
        if (!a.cone.pointed) {
            ++nonpointed_seen;
            continue;
        }
        ++pointed_seen;
        const auto desc = dual_description(a.cone);
        for (const IntVec& v : grid_points(ambient, 3)) {
            const bool expect = in_cone_caratheodory(gens, v, ambient);
            REQUIRE(satisfies_description(desc, v) == expect);
        }
        // each extreme ray leaves the cone when removed from the generators
        for (std::size_t i = 0; i < a.cone.rays.size(); ++i) {
            std::vector<IntVec> rest;
            for (std::size_t j = 0; j < a.cone.rays.size(); ++j)
                if (j != i) rest.push_back(a.cone.rays[j]);
            CHECK(!in_cone_caratheodory(rest, a.cone.rays[i], ambient));
        }
    }
    // the generator ranges above produce a healthy mix
    CHECK(pointed_seen > 5);
    CHECK(nonpointed_seen > 0);
}

TEST_CASE("intersection agrees with pointwise membership on randomized pairs") {
    Rng rng(0x5eedc0df);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t ambient = 3;
        auto random_pointed = [&]() {
            for (;;) {
                std::vector<IntVec> gens;
                const std::size_t count = static_cast<std::size_t>(rng.range(1, 4));
                for (std::size_t i = 0; i < count; ++i) {
                    IntVec g(ambient);
                    bool zero = true;
                    while (zero) {
                        for (std::size_t j = 0; j < ambient; ++j) {
                            g[j] = rng.range(-2, 2);
                            if (sgn(g[j]) != 0) zero = false;
                        }
                    }
                    gens.push_back(g);
                }
                const Cone c = cone_from_generators(ambient, gens);
                if (c.pointed) return c;
            }
        };
        const Cone a = random_pointed();
        const Cone b = random_pointed();
        const Cone c = intersect(a, b);
        CHECK(c.pointed);
        for (const IntVec& v : grid_points(ambient, 2)) {
            const bool expect = cone_contains(a, v) && cone_contains(b, v);
            REQUIRE(cone_contains(c, v) == expect);
        }
        // intersection rays really are in both cones
        for (const IntVec& g : c.rays) {
            CHECK(cone_contains(a, g));
            CHECK(cone_contains(b, g));
        }
    }
}

TEST_CASE("faces close under the face relation") {
    const Cone c = cone_from_generators(3, ivs({{1, 1, 1}, {1, -1, 1}, {-1, -1, 1}, {-1, 1, 1}}));
    const auto fs = faces(c);
    for (const FaceRef& f : fs) {
        std::vector<IntVec> sub;
        for (std::size_t i : f.generator_indices) sub.push_back(c.rays[i]);
        const Cone fc = cone_from_generators(3, sub);
        CHECK(fc.dim == f.dim);
        CHECK(is_face_of(fc, c));
        // faces of faces are faces of the cone
        for (const FaceRef& g : faces(fc)) {
            std::vector<IntVec> sub2;
            for (std::size_t i : g.generator_indices) sub2.push_back(fc.rays[i]);
            CHECK(is_face_of(cone_from_generators(3, sub2), c));
        }
    }
}
