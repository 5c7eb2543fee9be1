#include "bound.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "cech.hpp"
#include "doctest.h"
#include "fangen.hpp"
#include "fixtures.hpp"
#include "test_support.hpp"

using namespace fanlab;
using fanlab::test::Rng;
using fanlab::test::octahedron_fan;
using fanlab::test::random_complete_2d;
using fanlab::test::random_single_cone_fan;
using fanlab::test::random_subdivided_octahedron;

namespace {

std::size_t kappa0(const Fan& f) {
    const std::vector<std::size_t> k = kappa(build_cech(f));
    return k.empty() ? 0 : k[0];
}

void check_trace_contract(const Fan& f, const BoundTrace& t) {
    // G and R partition the rays
    std::vector<std::size_t> all;
    all.insert(all.end(), t.g_set.begin(), t.g_set.end());
    all.insert(all.end(), t.r_set.begin(), t.r_set.end());
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> expect(f.rays.size());
    for (std::size_t i = 0; i < expect.size(); ++i) expect[i] = i;
    CHECK(all == expect);
    CHECK(t.bound == t.g_set.size());

    // bookkeeping steps bracket the walk; every cone is retired exactly once
    REQUIRE(t.steps.size() == f.maximal_cones.size() + 2);
    CHECK(t.steps.front().label == 0);
    CHECK(t.steps.back().label == 4);
    std::set<std::size_t> retired;
    for (std::size_t i = 1; i + 1 < t.steps.size(); ++i) {
        const BoundStep& s = t.steps[i];
        CHECK((s.label == 1 || s.label == 2 || s.label == 3));
        REQUIRE(s.cone.has_value());
        CHECK(retired.insert(*s.cone).second);
        // step 1 never adds to G
        if (s.label == 1) CHECK(s.to_g.empty());
    }
    CHECK(retired.size() == f.maximal_cones.size());
}

}  // namespace

TEST_CASE("walkthrough on the three-sector wheel") {
    const Fan& f = fixture("ex5");
    const BoundTrace t = kappa0_upper_bound(f);
    CHECK(t.bound == 4);
    check_trace_contract(f, t);

    // the deterministic walk: open at cone 0, grow across cone 1, close 2
    REQUIRE(t.steps.size() == 5);
    CHECK(t.steps[1].label == 3);
    CHECK(t.steps[1].cone == std::size_t{0});
    CHECK(t.steps[1].to_g == std::vector<std::size_t>{0, 1, 2});
    CHECK(t.steps[1].to_r == std::vector<std::size_t>{4});
    CHECK(t.steps[2].label == 2);
    CHECK(t.steps[2].cone == std::size_t{1});
    CHECK(t.steps[2].to_g == std::vector<std::size_t>{3});
    CHECK(t.steps[3].label == 1);
    CHECK(t.steps[3].cone == std::size_t{2});
    CHECK(t.steps[3].to_g.empty());
    CHECK(t.steps[3].to_r == std::vector<std::size_t>{6});
}

TEST_CASE("frozen bounds on the fixtures") {
    CHECK(kappa0_upper_bound(fixture("cube")).bound == 4);
    CHECK(kappa0_upper_bound(fixture("cube-prime")).bound == 4);
    CHECK(kappa0_upper_bound(fixture("ex1-delta")).bound == 4);
    CHECK(kappa0_upper_bound(fixture("ex1-delta-prime")).bound == 4);
    CHECK(kappa0_upper_bound(fixture("p2")).bound == 3);
    CHECK(kappa0_upper_bound(fixture("two-rays-12")).bound == 2);
    CHECK(kappa0_upper_bound(fixture("torus-r3")).bound == 0);
    CHECK(kappa0_upper_bound(wheel_fan(2)).bound == 4);
    CHECK(kappa0_upper_bound(wheel_fan(3)).bound == 5);
    CHECK(kappa0_upper_bound(wheel_fan(4)).bound == 6);
}

TEST_CASE("complete 2D fans: the bound equals the ray count") {
    Rng rng(0x5eed3001);
    for (std::size_t extra = 0; extra < 6; ++extra) {
        const Fan f = random_complete_2d(rng, extra);
        const BoundTrace t = kappa0_upper_bound(f);
        CHECK(t.bound == f.rays.size());
        check_trace_contract(f, t);
    }
}

TEST_CASE("bound dominates kappa_0 everywhere") {
    Rng rng(0x5eed3002);
    std::vector<Fan> fans;
    for (const auto& info : fixture_catalog()) fans.push_back(fixture(info.name));
    for (std::size_t w : {2, 3, 4}) fans.push_back(wheel_fan(w));
    fans.push_back(octahedron_fan());
    for (std::size_t i = 0; i < 4; ++i) {
        fans.push_back(random_subdivided_octahedron(rng, i + 1));
        fans.push_back(random_single_cone_fan(rng, 3, 4 + i));
        fans.push_back(random_complete_2d(rng, i));
    }
    for (const Fan& f : fans) {
        CAPTURE(f.name);
        const BoundTrace t = kappa0_upper_bound(f);
        CHECK(t.bound >= kappa0(f));
        check_trace_contract(f, t);
    }
}

TEST_CASE("deterministic: identical input, identical trace") {
    for (const char* name : {"cube", "ex1-delta", "fig2a"}) {
        const BoundTrace a = kappa0_upper_bound(fixture(name));
        const BoundTrace b = kappa0_upper_bound(fixture(name));
        CHECK(a == b);
    }
}

TEST_CASE("exhaustive mode never does worse and still bounds kappa_0") {
    Rng rng(0x5eed3003);
    std::vector<Fan> fans;
    fans.push_back(fixture("cube"));
    fans.push_back(fixture("ex5"));
    fans.push_back(fixture("ex1-delta"));
    fans.push_back(octahedron_fan());
    fans.push_back(random_subdivided_octahedron(rng, 3));
    fans.push_back(random_complete_2d(rng, 3));
    for (const Fan& f : fans) {
        CAPTURE(f.name);
        const BoundTrace def = kappa0_upper_bound(f);
        const BoundTrace ex = kappa0_upper_bound_exhaustive(f);
        CHECK(ex.bound <= def.bound);
        CHECK(ex.bound >= kappa0(f));
        check_trace_contract(f, ex);
    }
    CHECK(kappa0_upper_bound_exhaustive(fixture("cube")).bound == 4);
    CHECK(kappa0_upper_bound_exhaustive(fixture("ex5")).bound == 4);
    CHECK(kappa0_upper_bound_exhaustive(fixture("torus-r3")).bound == 0);
}

TEST_CASE("disconnected fans reopen with step 3") {
    // two separate rays: two step-3 entries, no step 2
    const BoundTrace t = kappa0_upper_bound(fixture("two-rays-12"));
    REQUIRE(t.steps.size() == 4);
    CHECK(t.steps[1].label == 3);
    CHECK(t.steps[2].label == 3);
    CHECK(t.g_set == std::vector<std::size_t>{0, 1});
    CHECK(t.r_set.empty());
}
