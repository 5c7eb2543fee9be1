// Fans of strongly convex rational polyhedral cones, given by a shared ray
// list plus maximal cones as ray index sets. build_fan is the single
// entrance: everything downstream may assume a validated fan.
#pragma once

#include "cone.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fanlab {

struct Fan {
    std::size_t ambient_rank = 0;
    std::vector<IntVec> rays;                              // primitive, pairwise distinct
    std::vector<std::vector<std::size_t>> maximal_cones;   // ascending ray indices
    std::vector<Cone> cones;                               // parallel to maximal_cones
    std::string name;
};

struct BuildResult {
    std::optional<Fan> fan;
    std::vector<std::string> errors;  // empty iff fan is set

    bool ok() const { return fan.has_value(); }
};

// Validates and assembles a fan. Checks, in order: ray shape (length,
// nonzero, primitive unless normalize_rays, no duplicates), cone index
// sanity, strong convexity, listed rays being extreme, pairwise
// intersections being common faces, no maximal cone contained in another,
// and no unused rays. All errors at the failing stage are reported.
// An empty maximal cone list denotes the trivial fan {0}.
BuildResult build_fan(std::size_t ambient_rank, std::vector<IntVec> rays,
                      std::vector<std::vector<std::size_t>> maximal_cones, bool normalize_rays,
                      std::string name = "");

struct PosetFace {
    std::vector<std::size_t> rays;  // ascending fan ray indices
    std::size_t dim;

    bool operator==(const PosetFace&) const = default;
};

struct FacePoset {
    std::vector<PosetFace> faces;                 // sorted by (dim, ray set)
    std::vector<std::vector<std::size_t>> by_dim;  // face indices per dimension

    std::size_t top_dim() const { return by_dim.empty() ? 0 : by_dim.size() - 1; }
};

// All faces of all maximal cones, deduplicated; order is by inclusion of
// ray sets. Every fan contains the zero face.
FacePoset face_poset(const Fan& f);

struct FanStats {
    std::size_t ambient_rank = 0;  // r
    std::size_t support_rank = 0;  // rank of the ray matrix
    std::size_t n_rays = 0;
    std::vector<std::size_t> counts;  // faces per dimension, 0..top_dim
    std::size_t top_dim = 0;
    bool complete = false;
    bool simplicial = false;
};

// complete: some maximal cone has dimension r and every (r-1)-face of a
// dim-r cone lies in exactly two dim-r maximal cones. simplicial: every
// maximal cone is.
FanStats fan_stats(const Fan& f);

struct PosetIso {
    bool isomorphic = false;
    // witness bijection as pairs (face of a, face of b), each face given by
    // its ray index set; empty when not isomorphic
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> witness;
};

// Isomorphism of face posets as abstract partial orders (dimension is a
// poset invariant here, since both posets are graded by it).
PosetIso poset_isomorphic(const Fan& a, const Fan& b);

}  // namespace fanlab
