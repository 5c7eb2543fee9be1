// Rational neighborhoods of a fan. A perturbation nudges each ray on the
// grid (1/D)Z^r inside a per-ray radius, keeps the same maximal-cone index
// sets, and is accepted only when the rebuilt fan validates with the same
// ray-labeled face poset. Sampling the neighborhood stratifies it by
// kappa_0.
#pragma once

#include "fan.hpp"
#include "rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace fanlab {

struct NeighborhoodSpec {
    // Offsets are multiples of 1/denominator_bound, drawn componentwise
    // and uniformly from [-radius, radius] where radius scales with the
    // ray's max-norm: |offset| <= (radius_numerator / radius_denominator)
    // * maxnorm(ray). denominator_bound >= 1, radius >= 0; a zero radius
    // makes every draw the identity.
    Int denominator_bound = 1;
    Int radius_numerator = 1;
    Int radius_denominator = 1;
    std::vector<std::size_t> frozen_rays;  // left untouched by perturbation
};

enum class RejectReason {
    zero_ray,       // a ray was perturbed onto the origin
    invalid_fan,    // the rebuilt fan failed validation
    poset_changed,  // valid fan, but the labeled face poset moved
};

const char* to_string(RejectReason r);

struct PerturbResult {
    std::optional<Fan> fan;              // engaged iff accepted
    std::optional<RejectReason> reason;  // engaged iff rejected

    bool accepted() const { return fan.has_value(); }
};

// Deterministic core of perturb: adds offsets[i] to ray i (one rational
// vector per ray, ambient_rank entries each), primitivizes, rebuilds the
// same cone index sets, and applies the acceptance test. Throws UsageError
// on a shape mismatch.
PerturbResult apply_ray_offsets(const Fan& f, const std::vector<RatVec>& offsets);

// One random perturbation. Offsets are drawn per ray (ascending index) and
// per component from the spec's grid; frozen rays get zero. Identical
// (fan, spec, seed) gives an identical result.
PerturbResult perturb(const Fan& f, const NeighborhoodSpec& spec, std::uint64_t seed);

struct StrataSample {
    std::size_t samples_requested = 0;
    std::size_t samples_accepted = 0;
    std::size_t rejected_combinatorics = 0;  // == requested - accepted
    std::map<RejectReason, std::size_t> rejections_by_reason;
    std::map<std::size_t, std::size_t> histogram;         // kappa_0 -> count
    std::map<std::size_t, std::vector<IntVec>> witnesses;  // kappa_0 -> rays of
                                                           // the first accepted
                                                           // sample in index order
    std::uint64_t seed = 0;

    bool operator==(const StrataSample&) const = default;
};

// Draws n perturbations with per-sample seeds derived from (seed, index),
// computes kappa_0 of each accepted fan, and aggregates. Deterministic for
// fixed (fan, spec, n, seed) no matter how the work is scheduled.
// max_threads = 0 consults FANLAB_THREADS, then hardware_concurrency.
StrataSample sample_strata(const Fan& f, const NeighborhoodSpec& spec, std::size_t n,
                           std::uint64_t seed, unsigned max_threads = 0);

struct Conjecture1Report {
    // applicable <=> complete, ambient rank 3, and no maximal cone
    // simplicial. When inapplicable no sampling happens.
    bool applicable = false;
    Rat fraction_kappa0_eq_3 = 0;  // accepted samples with kappa_0 == 3 / accepted
    StrataSample sample;
};

Conjecture1Report conjecture1_report(const Fan& f, const NeighborhoodSpec& spec, std::size_t n,
                                     std::uint64_t seed, unsigned max_threads = 0);

}  // namespace fanlab
