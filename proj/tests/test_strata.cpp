#include "strata.hpp"

#include <cstdlib>
#include <vector>

#include "cech.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "fangen.hpp"
#include "fixtures.hpp"

using namespace fanlab;
using fanlab::test::octahedron_fan;

namespace {

std::vector<RatVec> zero_offsets(const Fan& f) {
    return std::vector<RatVec>(f.rays.size(), RatVec(f.ambient_rank, Rat(0)));
}

RatVec rat_vec(std::vector<long> v) {
    RatVec out;
    for (long x : v) out.push_back(Rat(x));
    return out;
}

NeighborhoodSpec small_spec() {
    NeighborhoodSpec spec;
    spec.denominator_bound = 8;
    spec.radius_numerator = 1;
    spec.radius_denominator = 4;
    return spec;
}

std::size_t kappa0(const Fan& f) {
    const std::vector<std::size_t> k = kappa(build_cech(f));
    return k.empty() ? 0 : k[0];
}

}  // namespace

TEST_CASE("zero offsets reproduce the fan") {
    for (const char* name : {"cube", "ex1-delta", "p2", "two-rays-12"}) {
        const Fan& f = fixture(name);
        const PerturbResult p = apply_ray_offsets(f, zero_offsets(f));
        REQUIRE(p.accepted());
        CHECK(p.fan->rays == f.rays);
        CHECK(p.fan->maximal_cones == f.maximal_cones);
    }
}

TEST_CASE("moving one cube corner to (2,1,1) lands on the skew cube") {
    const Fan& f = fixture("cube");
    std::vector<RatVec> offsets = zero_offsets(f);
    offsets[0] = rat_vec({1, 0, 0});
    const PerturbResult p = apply_ray_offsets(f, offsets);
    REQUIRE(p.accepted());
    CHECK(p.fan->rays == fixture("cube-prime").rays);
    CHECK(kappa0(*p.fan) == 3);
}

TEST_CASE("moving a cube corner inside its cone is rejected") {
    // (0,0,1) is a positive combination of the other top-face rays, so it
    // stops being extreme and the rebuild fails validation
    const Fan& f = fixture("cube");
    std::vector<RatVec> offsets = zero_offsets(f);
    offsets[0] = rat_vec({-1, -1, 0});
    const PerturbResult p = apply_ray_offsets(f, offsets);
    REQUIRE_FALSE(p.accepted());
    CHECK(p.reason == RejectReason::invalid_fan);
}

TEST_CASE("a move that reorders the quadrilateral changes the poset") {
    // single cone over the unit square at height 1; dragging corner 0 to
    // (0,-5,1) keeps all four rays extreme but swaps the edge pairing
    BuildResult b = build_fan(
        3, {{1, 1, 1}, {1, -1, 1}, {-1, -1, 1}, {-1, 1, 1}}, {{0, 1, 2, 3}}, false, "square");
    REQUIRE(b.ok());
    std::vector<RatVec> offsets = zero_offsets(*b.fan);
    offsets[0] = rat_vec({-1, -6, 0});
    const PerturbResult p = apply_ray_offsets(*b.fan, offsets);
    REQUIRE_FALSE(p.accepted());
    CHECK(p.reason == RejectReason::poset_changed);
}

TEST_CASE("a ray perturbed onto the origin is rejected") {
    const Fan& f = fixture("p2");
    std::vector<RatVec> offsets = zero_offsets(f);
    offsets[0] = rat_vec({-1, 0});
    const PerturbResult p = apply_ray_offsets(f, offsets);
    REQUIRE_FALSE(p.accepted());
    CHECK(p.reason == RejectReason::zero_ray);
}

TEST_CASE("offset shape errors") {
    const Fan& f = fixture("p2");
    CHECK_THROWS_AS(apply_ray_offsets(f, {}), UsageError);
    std::vector<RatVec> bad = zero_offsets(f);
    bad[1].pop_back();
    CHECK_THROWS_AS(apply_ray_offsets(f, bad), UsageError);
}

TEST_CASE("spec validation") {
    const Fan& f = fixture("p2");
    NeighborhoodSpec spec = small_spec();
    spec.denominator_bound = 0;
    CHECK_THROWS_AS(perturb(f, spec, 1), UsageError);
    spec = small_spec();
    spec.radius_denominator = 0;
    CHECK_THROWS_AS(perturb(f, spec, 1), UsageError);
    spec = small_spec();
    spec.radius_numerator = -1;
    CHECK_THROWS_AS(perturb(f, spec, 1), UsageError);
    spec = small_spec();
    spec.frozen_rays = {3};
    CHECK_THROWS_AS(sample_strata(f, spec, 4, 1), UsageError);
}

TEST_CASE("zero radius accepts the identity every time") {
    NeighborhoodSpec spec;
    spec.denominator_bound = 5;
    spec.radius_numerator = 0;
    const Fan& f = fixture("cube");
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const PerturbResult p = perturb(f, spec, seed);
        REQUIRE(p.accepted());
        CHECK(p.fan->rays == f.rays);
    }
    const StrataSample s = sample_strata(f, spec, 20, 7);
    CHECK(s.samples_accepted == 20);
    CHECK(s.histogram == std::map<std::size_t, std::size_t>{{4, 20}});
}

TEST_CASE("perturb is deterministic in (fan, spec, seed)") {
    const Fan& f = fixture("cube");
    const NeighborhoodSpec spec = small_spec();
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const PerturbResult a = perturb(f, spec, seed);
        const PerturbResult b = perturb(f, spec, seed);
        REQUIRE(a.accepted() == b.accepted());
        if (a.accepted())
            CHECK(a.fan->rays == b.fan->rays);
        else
            CHECK(a.reason == b.reason);
    }
}

TEST_CASE("frozen rays never move") {
    const Fan& f = fixture("cube");
    NeighborhoodSpec spec = small_spec();
    spec.frozen_rays = {1, 2, 3, 4, 5, 6, 7};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const PerturbResult p = perturb(f, spec, seed);
        if (!p.accepted()) continue;
        for (std::size_t i = 1; i < 8; ++i) CHECK(p.fan->rays[i] == f.rays[i]);
    }
}

TEST_CASE("cube neighborhood: two strata, generic side dominant") {
    const StrataSample s = sample_strata(fixture("cube"), small_spec(), 200, 0xC0FFEE);
    CHECK(s.samples_requested == 200);
    CHECK(s.samples_accepted + s.rejected_combinatorics == 200);
    std::size_t reasons = 0;
    for (const auto& [reason, count] : s.rejections_by_reason) reasons += count;
    CHECK(reasons == s.rejected_combinatorics);
    std::size_t total = 0;
    for (const auto& [k, count] : s.histogram) {
        total += count;
        CHECK((k == 3 || k == 4));
        CHECK(s.witnesses.count(k) == 1);
    }
    CHECK(total == s.samples_accepted);
    CHECK(s.witnesses.size() == s.histogram.size());
    REQUIRE(s.histogram.count(3) == 1);
    CHECK(2 * s.histogram.at(3) > s.samples_accepted);
    CHECK(kappa0(fixture("cube")) == 4);
}

TEST_CASE("skew-cube example fan neighborhood has the same two strata") {
    const StrataSample s = sample_strata(fixture("ex1-delta"), small_spec(), 200, 0xC0FFEE);
    CHECK(s.samples_accepted + s.rejected_combinatorics == 200);
    REQUIRE(s.samples_accepted > 0);
    for (const auto& [k, count] : s.histogram) CHECK((k == 3 || k == 4));
    CHECK(s.histogram.count(3) == 1);
    CHECK(kappa0(fixture("ex1-delta")) == 4);
}

TEST_CASE("simplicial fans have a single stratum") {
    const StrataSample p2s = sample_strata(fixture("p2"), small_spec(), 200, 42);
    REQUIRE(p2s.samples_accepted > 0);
    CHECK(p2s.histogram == std::map<std::size_t, std::size_t>{{3, p2s.samples_accepted}});

    const Fan oct = octahedron_fan();
    const StrataSample octs = sample_strata(oct, small_spec(), 60, 42);
    REQUIRE(octs.samples_accepted > 0);
    CHECK(octs.histogram == std::map<std::size_t, std::size_t>{{6, octs.samples_accepted}});
}

TEST_CASE("wheel neighborhoods: kappa_0 is constant at w+2") {
    for (std::size_t w : {2, 3, 4}) {
        CAPTURE(w);
        NeighborhoodSpec spec;
        spec.denominator_bound = 16;
        spec.radius_numerator = 1;
        spec.radius_denominator = 8;
        const StrataSample s = sample_strata(wheel_fan(w), spec, 120, 0xA11CE + w);
        REQUIRE(s.samples_accepted >= 50);
        CHECK(s.histogram == std::map<std::size_t, std::size_t>{{w + 2, s.samples_accepted}});
    }
}

TEST_CASE("accepted perturbations satisfy the cross-checks") {
    const Fan& f = fixture("cube");
    const StrataSample s = sample_strata(f, small_spec(), 40, 0xBEEF);
    REQUIRE_FALSE(s.witnesses.empty());
    for (const auto& [k, rays] : s.witnesses) {
        BuildResult b = build_fan(3, rays, f.maximal_cones, false, "witness");
        REQUIRE(b.ok());
        CHECK(phi_kernel_dim(*b.fan) == k);
        const CechComplex cx = build_cech(*b.fan);
        const std::vector<std::size_t> kap = kappa(cx);
        long euler_c = 0;
        long euler_k = 0;
        for (std::size_t p = 0; p < kap.size(); ++p) {
            const long sgn = (p % 2 == 0) ? 1 : -1;
            euler_c += sgn * static_cast<long>(cx.cochain_dims[p]);
            euler_k += sgn * static_cast<long>(kap[p]);
        }
        CHECK(euler_c == euler_k);
        const RankIdentity ri = rank_identity(*b.fan);
        REQUIRE(ri.applicable);
        CHECK(ri.lhs == ri.rhs);
    }
}

TEST_CASE("sampling is deterministic and schedule-independent") {
    const Fan& f = fixture("cube");
    const NeighborhoodSpec spec = small_spec();
    const StrataSample base = sample_strata(f, spec, 64, 99, 1);
    CHECK(base == sample_strata(f, spec, 64, 99, 1));
    CHECK(base == sample_strata(f, spec, 64, 99, 3));
    CHECK(base == sample_strata(f, spec, 64, 99, 8));

    setenv("FANLAB_THREADS", "2", 1);
    CHECK(base == sample_strata(f, spec, 64, 99));
    setenv("FANLAB_THREADS", "not-a-number", 1);
    CHECK(base == sample_strata(f, spec, 64, 99));
    unsetenv("FANLAB_THREADS");
    CHECK(base == sample_strata(f, spec, 64, 99));

    CHECK_FALSE(base == sample_strata(f, spec, 64, 100));
}

TEST_CASE("conjecture screening accepts exactly the intended fans") {
    const NeighborhoodSpec spec = small_spec();
    CHECK_FALSE(conjecture1_report(fixture("p2"), spec, 8, 1).applicable);
    CHECK_FALSE(conjecture1_report(fixture("ex1-delta"), spec, 8, 1).applicable);
    CHECK_FALSE(conjecture1_report(fixture("torus-r3"), spec, 8, 1).applicable);
    CHECK_FALSE(conjecture1_report(octahedron_fan(), spec, 8, 1).applicable);
    CHECK_FALSE(conjecture1_report(wheel_fan(3), spec, 8, 1).applicable);

    const Conjecture1Report cube = conjecture1_report(fixture("cube"), spec, 200, 0xC0FFEE);
    REQUIRE(cube.applicable);
    CHECK(cube.sample.samples_requested == 200);
    CHECK(cube.fraction_kappa0_eq_3 > make_rat(1, 2));
    const Conjecture1Report skew = conjecture1_report(fixture("cube-prime"), spec, 50, 5);
    REQUIRE(skew.applicable);
    CHECK(skew.sample.samples_accepted > 0);
}

TEST_CASE("inapplicable reports carry no sample") {
    const Conjecture1Report r = conjecture1_report(fixture("p2"), small_spec(), 100, 3);
    CHECK_FALSE(r.applicable);
    CHECK(r.sample.samples_requested == 0);
    CHECK(r.fraction_kappa0_eq_3 == 0);
}
