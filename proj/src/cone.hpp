// Rational polyhedral cones in Q^r, represented exactly.
//
// A cone is stored by its extreme rays (primitive integer vectors) together
// with a cutting description: covectors spanning the orthogonal complement
// of its linear span, plus facet covectors relative to that span. So
//   v in cone  <=>  p.v == 0 for all perp covectors and h.v >= 0 for all
//                   facet covectors.
// All derived data (facets, perp basis, intersection generators) is
// canonical: primitive and lexicographically sorted, so equal cones compare
// equal field by field.
#pragma once

#include "matrix.hpp"
#include "rational.hpp"

#include <cstddef>
#include <vector>

namespace fanlab {

// v / gcd(entries). Throws on the zero vector.
IntVec primitivize(const IntVec& v);

// Clear denominators, then divide by the gcd. Throws on the zero vector.
IntVec primitivize_rat(const RatVec& v);

Int dot(const IntVec& a, const IntVec& b);

struct Cone {
    std::size_t ambient_rank = 0;
    std::size_t dim = 0;
    bool pointed = true;
    std::vector<IntVec> rays;           // extreme rays; primitive
    std::vector<IntVec> facet_normals;  // relative facets, in the span, lex sorted
    std::vector<IntVec> perp_basis;     // spans span(cone)^perp, canonical
};

struct GeneratorAnalysis {
    Cone cone;
    // Parallel to the input generator list: true iff that generator is an
    // extreme ray of the cone. Zero generators are flagged false.
    std::vector<bool> extreme;
};

// Build the cone spanned by the given integer vectors. For cones that are
// not strongly convex the extreme flags are all false and `rays` is left
// empty; dim, pointed and the cutting description are still valid.
GeneratorAnalysis analyze_generators(std::size_t ambient_rank, const std::vector<IntVec>& generators);

inline Cone cone_from_generators(std::size_t ambient_rank, const std::vector<IntVec>& generators) {
    return analyze_generators(ambient_rank, generators).cone;
}

bool cone_contains(const Cone& c, const IntVec& v);

// The complete minimal set of covectors cutting the cone out of Q^r:
// +-(perp basis) plus the relative facet normals, lex sorted.
std::vector<IntVec> dual_description(const Cone& c);

struct FaceRef {
    std::size_t dim;
    std::vector<std::size_t> generator_indices;  // positions into c.rays, ascending

    bool operator==(const FaceRef&) const = default;
};

// Every face of c (including c itself and the zero face), each identified
// by the extreme rays of c lying on it. Sorted by (dim, index set).
// Requires a pointed cone.
std::vector<FaceRef> faces(const Cone& c);

// True iff f is a face of c. Assumes both are pointed cones over the same
// ambient lattice.
bool is_face_of(const Cone& f, const Cone& c);

// Intersection of two pointed cones, itself a pointed cone with canonical
// generator order.
Cone intersect(const Cone& a, const Cone& b);

struct ConeClass {
    std::size_t dim = 0;
    bool strongly_convex = false;
    bool simplicial = false;
    bool smooth = false;
};

// simplicial: extreme ray count equals dimension. smooth: additionally the
// rays extend to a basis of the integer lattice (all Smith invariant
// factors 1).
ConeClass classify(const Cone& c);

}  // namespace fanlab
