#include "fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace fanlab {

namespace {

std::string fmt(const char* prefix, std::size_t a) {
    std::ostringstream o;
    o << prefix << a;
    return o.str();
}

}  // namespace

BuildResult build_fan(std::size_t ambient_rank, std::vector<IntVec> rays,
                      std::vector<std::vector<std::size_t>> maximal_cones, bool normalize_rays,
                      std::string name) {
    BuildResult res;
    auto err = [&res](const std::string& m) { res.errors.push_back(m); };

    if (ambient_rank == 0) {
        err("ambient rank must be positive");
        return res;
    }

    // stage 1: ray shape
    for (std::size_t k = 0; k < rays.size(); ++k) {
        if (rays[k].size() != ambient_rank) {
            err(fmt("ray ", k) + " has wrong length");
            continue;
        }
        bool zero = true;
        for (const Int& x : rays[k])
            if (sgn(x) != 0) zero = false;
        if (zero) {
            err(fmt("ray ", k) + " is zero");
            continue;
        }
        const IntVec prim = primitivize(rays[k]);
        if (prim != rays[k]) {
            if (normalize_rays)
                rays[k] = prim;
            else
                err(fmt("ray ", k) + " not primitive");
        }
    }
    if (!res.errors.empty()) return res;
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = i + 1; j < rays.size(); ++j)
            if (rays[i] == rays[j]) err("duplicate ray (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    if (!res.errors.empty()) return res;

    // stage 2: cone index sanity
    if (maximal_cones.empty()) maximal_cones.push_back({});  // the trivial fan
    for (std::size_t c = 0; c < maximal_cones.size(); ++c) {
        std::sort(maximal_cones[c].begin(), maximal_cones[c].end());
        for (std::size_t t = 0; t < maximal_cones[c].size(); ++t) {
            if (maximal_cones[c][t] >= rays.size()) {
                err(fmt("cone ", c) + ": ray index " + std::to_string(maximal_cones[c][t]) +
                    " out of range");
                maximal_cones[c].resize(t);
                break;
            }
            if (t > 0 && maximal_cones[c][t] == maximal_cones[c][t - 1])
                err(fmt("cone ", c) + ": duplicate ray index " + std::to_string(maximal_cones[c][t]));
        }
    }
    for (std::size_t i = 0; i < maximal_cones.size(); ++i)
        for (std::size_t j = i + 1; j < maximal_cones.size(); ++j)
            if (maximal_cones[i] == maximal_cones[j])
                err("cone " + std::to_string(j) + " duplicates cone " + std::to_string(i));
    if (!res.errors.empty()) return res;

    // stage 3: per-cone geometry
    std::vector<Cone> cones;
    cones.reserve(maximal_cones.size());
    for (std::size_t c = 0; c < maximal_cones.size(); ++c) {
        std::vector<IntVec> gens;
        gens.reserve(maximal_cones[c].size());
        for (std::size_t k : maximal_cones[c]) gens.push_back(rays[k]);
        GeneratorAnalysis a = analyze_generators(ambient_rank, gens);
        if (!a.cone.pointed) {
            err(fmt("cone ", c) + " not strongly convex");
        } else {
            for (std::size_t t = 0; t < a.extreme.size(); ++t)
                if (!a.extreme[t])
                    err(fmt("cone ", c) + ": ray " + std::to_string(maximal_cones[c][t]) +
                        " not extreme");
        }
        cones.push_back(std::move(a.cone));
    }
    if (!res.errors.empty()) return res;

    // stage 4: global structure
    for (std::size_t i = 0; i < maximal_cones.size(); ++i)
        for (std::size_t j = i + 1; j < maximal_cones.size(); ++j) {
            const Cone common = intersect(cones[i], cones[j]);
            if (!is_face_of(common, cones[i]) || !is_face_of(common, cones[j]))
                err("intersection not a face (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }
    if (res.errors.empty()) {
        // with all intersections being faces, containment of ray sets means
        // containment as a face
        for (std::size_t i = 0; i < maximal_cones.size(); ++i)
            for (std::size_t j = 0; j < maximal_cones.size(); ++j) {
                if (i == j) continue;
                if (std::includes(maximal_cones[j].begin(), maximal_cones[j].end(),
                                  maximal_cones[i].begin(), maximal_cones[i].end()))
                    err("cone " + std::to_string(i) + " is a face of cone " + std::to_string(j));
            }
    }
    std::vector<bool> used(rays.size(), false);
    for (const auto& mc : maximal_cones)
        for (std::size_t k : mc) used[k] = true;
    for (std::size_t k = 0; k < rays.size(); ++k)
        if (!used[k]) err(fmt("ray ", k) + " not used in any maximal cone");
    if (!res.errors.empty()) return res;

    Fan f;
    f.ambient_rank = ambient_rank;
    f.rays = std::move(rays);
    f.maximal_cones = std::move(maximal_cones);
    f.cones = std::move(cones);
    f.name = std::move(name);
    res.fan = std::move(f);
    return res;
}

FacePoset face_poset(const Fan& f) {
    std::map<std::vector<std::size_t>, std::size_t> dim_of;
    for (std::size_t c = 0; c < f.maximal_cones.size(); ++c) {
        // cone rays are in input order, which is ascending fan-index order
        for (const FaceRef& fr : faces(f.cones[c])) {
            std::vector<std::size_t> global;
            global.reserve(fr.generator_indices.size());
            for (std::size_t pos : fr.generator_indices) global.push_back(f.maximal_cones[c][pos]);
            dim_of.emplace(std::move(global), fr.dim);
        }
    }

    FacePoset p;
    p.faces.reserve(dim_of.size());
    std::size_t top = 0;
    for (const auto& [rays, dim] : dim_of) top = std::max(top, dim);
    p.by_dim.assign(top + 1, {});
    for (const auto& [rays, dim] : dim_of) p.faces.push_back(PosetFace{rays, dim});
    std::sort(p.faces.begin(), p.faces.end(), [](const PosetFace& a, const PosetFace& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.rays < b.rays;
    });
    for (std::size_t i = 0; i < p.faces.size(); ++i) p.by_dim[p.faces[i].dim].push_back(i);
    return p;
}

FanStats fan_stats(const Fan& f) {
    FanStats st;
    st.ambient_rank = f.ambient_rank;
    st.n_rays = f.rays.size();
    st.support_rank = rank_of_vectors(f.rays, f.ambient_rank);

    const FacePoset poset = face_poset(f);
    st.top_dim = poset.top_dim();
    st.counts.resize(st.top_dim + 1);
    for (std::size_t d = 0; d <= st.top_dim; ++d) st.counts[d] = poset.by_dim[d].size();

    st.simplicial = true;
    for (const Cone& c : f.cones)
        if (!classify(c).simplicial) st.simplicial = false;

    // completeness: the top stratum has full dimension and every
    // codimension-1 face of a full-dimensional cone separates exactly two of
    // them
    st.complete = false;
    const std::size_t r = f.ambient_rank;
    if (st.top_dim == r) {
        std::vector<std::size_t> full;  // maximal cones of dimension r
        for (std::size_t c = 0; c < f.cones.size(); ++c)
            if (f.cones[c].dim == r) full.push_back(c);
        bool ok = !full.empty();
        for (std::size_t c : full) {
            if (!ok) break;
            for (const FaceRef& fr : faces(f.cones[c])) {
                if (fr.dim + 1 != r) continue;
                std::vector<std::size_t> global;
                for (std::size_t pos : fr.generator_indices) global.push_back(f.maximal_cones[c][pos]);
                std::size_t containing = 0;
                for (std::size_t c2 : full)
                    if (std::includes(f.maximal_cones[c2].begin(), f.maximal_cones[c2].end(),
                                      global.begin(), global.end()))
                        ++containing;
                if (containing != 2) {
                    ok = false;
                    break;
                }
            }
        }
        // dim-r faces other than the full cones themselves cannot occur, and
        // maximal cones of lower dimension would leave gaps caught above by
        // their neighbors only if adjacent; rule them out directly
        for (const Cone& c : f.cones)
            if (c.dim != r) ok = false;
        st.complete = ok;
    }
    return st;
}

namespace {

struct PosetView {
    std::vector<PosetFace> faces;
    std::vector<std::vector<bool>> leq;     // leq[i][j]: i <= j (ray subset)
    std::vector<std::vector<std::size_t>> up, down;  // cover lists
    std::vector<std::size_t> color;

    explicit PosetView(const FacePoset& p) : faces(p.faces) {
        const std::size_t n = faces.size();
        leq.assign(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                leq[i][j] = std::includes(faces[j].rays.begin(), faces[j].rays.end(),
                                          faces[i].rays.begin(), faces[i].rays.end());
        up.assign(n, {});
        down.assign(n, {});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && leq[i][j] && faces[j].dim == faces[i].dim + 1) {
                    up[i].push_back(j);
                    down[j].push_back(i);
                }
        // refine colors from dimensions until stable
        color.resize(n);
        for (std::size_t i = 0; i < n; ++i) color[i] = faces[i].dim;
        for (;;) {
            // signatures; new ids are assigned in sorted signature order so
            // that isomorphic posets get identical color sequences
            std::vector<std::vector<std::size_t>> sigs(n);
            std::map<std::vector<std::size_t>, std::size_t> ids;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<std::size_t> sig{color[i]};
                std::vector<std::size_t> a, b;
                for (std::size_t j : up[i]) a.push_back(color[j]);
                for (std::size_t j : down[i]) b.push_back(color[j]);
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                sig.push_back(static_cast<std::size_t>(-1));
                sig.insert(sig.end(), a.begin(), a.end());
                sig.push_back(static_cast<std::size_t>(-1));
                sig.insert(sig.end(), b.begin(), b.end());
                ids.emplace(sig, 0);
                sigs[i] = std::move(sig);
            }
            std::size_t next_id = 0;
            for (auto& [sig, id] : ids) id = next_id++;
            std::set<std::size_t> before(color.begin(), color.end());
            if (ids.size() == before.size()) break;
            for (std::size_t i = 0; i < n; ++i) color[i] = ids[sigs[i]];
        }
    }

    std::vector<std::size_t> color_histogram() const {
        std::vector<std::size_t> h;
        for (std::size_t c : color) {
            if (c >= h.size()) h.resize(c + 1, 0);
            ++h[c];
        }
        return h;
    }
};

bool extend_match(const PosetView& a, const PosetView& b, std::vector<std::size_t>& map_ab,
                  std::vector<bool>& used, std::size_t next) {
    const std::size_t n = a.faces.size();
    if (next == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
        if (used[cand] || a.color[next] != b.color[cand]) continue;
        bool ok = true;
        for (std::size_t prev = 0; prev < next && ok; ++prev) {
            const std::size_t pb = map_ab[prev];
            if (a.leq[prev][next] != b.leq[pb][cand]) ok = false;
            if (a.leq[next][prev] != b.leq[cand][pb]) ok = false;
        }
        if (!ok) continue;
        map_ab[next] = cand;
        used[cand] = true;
        if (extend_match(a, b, map_ab, used, next + 1)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace

PosetIso poset_isomorphic(const Fan& fa, const Fan& fb) {
    PosetIso out;
    const PosetView a(face_poset(fa));
    const PosetView b(face_poset(fb));
    if (a.faces.size() != b.faces.size()) return out;
    if (a.color_histogram() != b.color_histogram()) return out;

    std::vector<std::size_t> map_ab(a.faces.size());
    std::vector<bool> used(b.faces.size(), false);
    if (!extend_match(a, b, map_ab, used, 0)) return out;

    out.isomorphic = true;
    out.witness.reserve(a.faces.size());
    for (std::size_t i = 0; i < a.faces.size(); ++i)
        out.witness.emplace_back(a.faces[i].rays, b.faces[map_ab[i]].rays);
    return out;
}

}  // namespace fanlab
