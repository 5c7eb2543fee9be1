// Greedy upper bound for kappa_0: partition the rays into a determining
// set G and a remainder R by walking the maximal cones outward from a
// starting cone. A support function is linear on each cone, so once a
// cone's known rays span it, its other rays carry no new information;
// #G bounds the dimension of the support-function space from above.
#pragma once

#include "fan.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fanlab {

struct BoundStep {
    int label = 0;                    // 0 start, 1..3 cone moves, 4 finish
    std::optional<std::size_t> cone;  // fan cone index for labels 1..3
    std::vector<std::size_t> to_g;    // ray indices moved to G, ascending
    std::vector<std::size_t> to_r;    // ray indices moved to R, ascending

    bool operator==(const BoundStep&) const = default;
};

struct BoundTrace {
    std::vector<std::size_t> g_set;  // ascending
    std::vector<std::size_t> r_set;  // ascending
    std::vector<BoundStep> steps;
    std::size_t bound = 0;  // = g_set.size(), an upper bound for kappa_0

    bool operator==(const BoundTrace&) const = default;
};

// The walk, deterministically tie-broken: cone choices prefer (for step 2)
// maximal known-ray span, then maximal cone dimension, then lowest cone
// index; step 3 prefers maximal dimension then lowest index; ray choices
// are greedy by lowest ray index subject to the span requirement. New rays
// in step 2 are drawn from the cone's unassigned rays: assigned ones are
// already spoken for, and the combined span requirement is what makes the
// final count a bound.
BoundTrace kappa0_upper_bound(const Fan& f);

// Runs the walk once per admissible starting cone (every cone of maximal
// dimension) and returns the smallest bound found, breaking ties by the
// lowest starting cone index. The default walk is the run started at the
// lowest-indexed admissible cone.
BoundTrace kappa0_upper_bound_exhaustive(const Fan& f);

}  // namespace fanlab
