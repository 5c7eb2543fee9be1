#include "fixtures.hpp"

#include <map>
#include <stdexcept>

namespace fanlab {

namespace {

IntVec v(std::initializer_list<long> xs) {
    IntVec out;
    out.reserve(xs.size());
    for (long x : xs) out.emplace_back(x);
    return out;
}

Fan must_build(std::size_t r, std::vector<IntVec> rays,
               std::vector<std::vector<std::size_t>> cones, const std::string& name) {
    BuildResult b = build_fan(r, std::move(rays), std::move(cones), false, name);
    if (!b.ok()) {
        std::string msg = "fixture '" + name + "' failed to validate:";
        for (const auto& e : b.errors) msg += " " + e + ";";
        throw std::logic_error(msg);
    }
    return std::move(*b.fan);
}

// Three quadrilateral 3-cones pairwise sharing 2-faces. The second variant
// has the same face poset but rays in general position, which changes the
// support-function invariants.
Fan make_ex1_delta() {
    return must_build(3,
                      {v({1, 0, -2}), v({-1, 2, -2}), v({-1, -2, -2}), v({1, 0, 2}),
                       v({-1, 2, 2}), v({-1, -2, 2})},
                      {{0, 2, 3, 5}, {0, 1, 3, 4}, {1, 2, 4, 5}}, "ex1-delta");
}

Fan make_ex1_delta_prime() {
    return must_build(3,
                      {v({0, 1, 1}), v({0, 0, 1}), v({1, 0, 1}), v({-1, 3, 1}),
                       v({-2, -1, 1}), v({3, -1, 1})},
                      {{0, 2, 3, 5}, {0, 1, 3, 4}, {1, 2, 4, 5}}, "ex1-delta-prime");
}

// The complete fan over the faces of the cube with vertices (+-1,+-1,+-1).
Fan make_cube() {
    return must_build(3,
                      {v({1, 1, 1}), v({1, -1, 1}), v({-1, -1, 1}), v({-1, 1, 1}),
                       v({1, 1, -1}), v({1, -1, -1}), v({-1, -1, -1}), v({-1, 1, -1})},
                      {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 4, 5}, {1, 2, 5, 6},
                       {2, 3, 6, 7}, {0, 3, 4, 7}},
                      "cube");
}

// Same combinatorics, first ray nudged off the symmetric position.
Fan make_cube_prime() {
    return must_build(3,
                      {v({2, 1, 1}), v({1, -1, 1}), v({-1, -1, 1}), v({-1, 1, 1}),
                       v({1, 1, -1}), v({1, -1, -1}), v({-1, -1, -1}), v({-1, 1, -1})},
                      {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 4, 5}, {1, 2, 5, 6},
                       {2, 3, 6, 7}, {0, 3, 4, 7}},
                      "cube-prime");
}

// w = 2 wheel: central ray 0, ring rays 1..3, outer rays 4..6, one
// quadrilateral cone per ring edge.
Fan make_fig2a(const std::string& name) {
    return must_build(3,
                      {v({0, 0, 1}), v({0, 1, 1}), v({2, -1, 1}), v({-2, -1, 1}),
                       v({2, 0, 1}), v({0, -2, 1}), v({-2, 0, 1})},
                      {{0, 1, 2, 4}, {0, 2, 3, 5}, {0, 1, 3, 6}}, name);
}

Fan make_p2() {
    return must_build(2, {v({1, 0}), v({0, 1}), v({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}}, "p2");
}

Fan make_torus_r3() { return must_build(3, {}, {}, "torus-r3"); }

Fan make_two_rays_12() {
    return must_build(2, {v({1, 0}), v({1, 2})}, {{0}, {1}}, "two-rays-12");
}

const std::map<std::string, Fan>& table() {
    static const std::map<std::string, Fan> fans = [] {
        std::map<std::string, Fan> m;
        m.emplace("ex1-delta", make_ex1_delta());
        m.emplace("ex1-delta-prime", make_ex1_delta_prime());
        m.emplace("cube", make_cube());
        m.emplace("cube-prime", make_cube_prime());
        m.emplace("fig2a", make_fig2a("fig2a"));
        m.emplace("ex5", make_fig2a("ex5"));
        m.emplace("p2", make_p2());
        m.emplace("torus-r3", make_torus_r3());
        m.emplace("two-rays-12", make_two_rays_12());
        return m;
    }();
    return fans;
}

}  // namespace

const std::vector<FixtureInfo>& fixture_catalog() {
    static const std::vector<FixtureInfo> infos = {
        {"ex1-delta", "three quadrilateral 3-cones pairwise sharing 2-faces"},
        {"ex1-delta-prime", "same face poset as ex1-delta, rays in general position"},
        {"cube", "complete fan over the six faces of the cube (+-1,+-1,+-1)"},
        {"cube-prime", "cube fan with the first ray moved to (2,1,1)"},
        {"fig2a", "w = 2 wheel: three quadrilateral cones around a central ray"},
        {"ex5", "the w = 2 wheel again, input for the upper-bound walkthrough"},
        {"p2", "complete smooth fan of the projective plane"},
        {"torus-r3", "trivial fan in rank 3: only the zero cone"},
        {"two-rays-12", "two separate rays (1,0) and (1,2)"},
    };
    return infos;
}

bool has_fixture(const std::string& name) { return table().count(name) != 0; }

const Fan& fixture(const std::string& name) {
    auto it = table().find(name);
    if (it == table().end()) throw std::out_of_range("unknown fixture: " + name);
    return it->second;
}

Fan wheel_fan(std::size_t w) {
    switch (w) {
        case 2:
            return make_fig2a("wheel-2");
        case 3:
            // ring 1..4, outer 5..8 with outer_j = ring_j + ring_{j+1}
            return must_build(3,
                              {v({0, 0, 1}), v({1, 1, 1}), v({1, -1, 1}), v({-1, -1, 1}),
                               v({-1, 1, 1}), v({2, 0, 1}), v({0, -2, 1}), v({-2, 0, 1}),
                               v({0, 2, 1})},
                              {{0, 1, 2, 5}, {0, 2, 3, 6}, {0, 3, 4, 7}, {0, 1, 4, 8}},
                              "wheel-3");
        case 4:
            // five ring rays in convex position, outer rays are consecutive sums
            return must_build(
                3,
                {v({0, 0, 1}), v({2, 1, 1}), v({-1, 2, 1}), v({-2, 0, 1}), v({-1, -2, 1}),
                 v({2, -2, 1}), v({1, 3, 1}), v({-3, 2, 1}), v({-3, -2, 1}), v({1, -4, 1}),
                 v({4, -1, 1})},
                {{0, 1, 2, 6}, {0, 2, 3, 7}, {0, 3, 4, 8}, {0, 4, 5, 9}, {0, 1, 5, 10}},
                "wheel-4");
        default:
            throw std::out_of_range("wheel_fan supports w = 2, 3, 4");
    }
}

}  // namespace fanlab
