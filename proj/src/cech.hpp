// Support-function cohomology of a fan.
//
// The complex is indexed by tuples of maximal cones with nonzero-dimensional
// intersection. A tuple's summand is the dual of the intersection's linear
// span, so its dimension is dim(intersection); restriction along a subtuple
// is transposed change of basis between the canonical span bases. kappa_p
// is the rank of the p-th cohomology of this complex; kappa_0 equals the
// dimension of the space of continuous piecewise-linear functions on the
// fan's support (rational coefficients).
#pragma once

#include "fan.hpp"
#include "matrix.hpp"

#include <cstddef>
#include <vector>

namespace fanlab {

struct CechCell {
    std::vector<std::size_t> tuple;  // ascending maximal-cone indices
    Cone cone;                       // their intersection
    RatMatrix span_basis;            // ambient_rank x cone.dim, canonical
    std::size_t offset = 0;          // first coordinate of this cell's summand
};

struct CechComplex {
    std::vector<std::vector<CechCell>> levels;  // only cells with dim > 0; lex tuple order
    std::vector<std::size_t> cochain_dims;      // c_p, one per level
    // differentials[p]: C^p -> C^{p+1}, shape c_{p+1} x c_p; size levels-1
    std::vector<RatMatrix> differentials;
};

CechComplex build_cech(const Fan& f);

// Cohomology ranks, one per level of the complex (possibly empty).
std::vector<std::size_t> kappa(const CechComplex& c);

// Divisor class group of the associated variety: cokernel of the map from
// the dual of the ray span lattice into Z^{#rays}.
AbelianGroup class_group(const Fan& f);

// Independent route to kappa_0: the dimension of the kernel of the map
// sending a tuple of ray values to its images in the rational class groups
// of the maximal cones. Used to cross-check the complex.
std::size_t phi_kernel_dim(const Fan& f);

struct RankIdentity {
    bool applicable = false;  // every pairwise intersection of maximal cones simplicial
    std::size_t lhs = 0;      // rho1 + support_rank + sum of per-cone ray surpluses
    std::size_t rhs = 0;      // rho2 + #rays
};

// The rank identity relating rho1 and rho2 through the per-cone surpluses
// #rays(cone) - dim(cone); valid whenever all pairwise intersections are
// simplicial (always in rank <= 3).
RankIdentity rank_identity(const Fan& f);

struct InvariantReport {
    FanStats stats;
    std::vector<std::size_t> cech_dims;
    std::vector<std::size_t> kappa;
    long euler = 0;  // alternating sum of cech_dims (= that of kappa)
    std::size_t rho0 = 0;        // ambient_rank - support_rank
    std::size_t rho1 = 0;        // kappa_0 - support_rank
    std::size_t rho1_prime = 0;  // #rays - support_rank
    std::size_t rho2 = 0;        // kappa_1
    AbelianGroup class_group;
    // complete fan whose kappa_0 is as small as possible: no strictly convex
    // support function exists, so the variety cannot be projective
    bool nonprojective_certificate = false;
};

InvariantReport invariant_report(const Fan& f);

}  // namespace fanlab
