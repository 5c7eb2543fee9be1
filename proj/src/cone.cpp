#include "cone.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace fanlab {

IntVec primitivize(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd_int(g, x);
    if (sgn(g) == 0) throw std::invalid_argument("primitivize: zero vector");
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

IntVec primitivize_rat(const RatVec& v) {
    Int den = 1;
    for (const Rat& q : v) den = lcm_int(den, q.get_den());
    IntVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * den;
        w[i] = scaled.get_num();  // denominator is 1 after scaling
    }
    return primitivize(w);
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

Rat dot_ri(const RatVec& a, const IntVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Facet covectors of cone(gens) inside Q^dim, assuming the generators span
// Q^dim. Every facet contains dim-1 independent generators, so enumerating
// (dim-1)-subsets finds each facet at least once; the sign screen discards
// hyperplanes that are not supporting. Results are primitive, oriented to
// be nonnegative on the cone, deduplicated and lex sorted.
std::vector<IntVec> facet_normals_of_generated(const std::vector<IntVec>& gens, std::size_t dim) {
    std::set<IntVec, decltype(&lex_less)> found(&lex_less);
    if (dim == 0) return {};

    const std::size_t k = gens.size();
    const std::size_t need = dim - 1;
    if (need > k) return {};  // cannot happen when the generators span

    std::vector<std::size_t> idx(need);
    for (std::size_t t = 0; t < need; ++t) idx[t] = t;
    bool more = true;
    while (more) {
        std::vector<IntVec> sub;
        sub.reserve(need);
        for (std::size_t t : idx) sub.push_back(gens[t]);
        if (rank_of_vectors(sub, dim) == need) {
            const RatMatrix kern =
                kernel_basis_q(need == 0 ? RatMatrix(0, dim) : RatMatrix::from_int_rows(sub, dim));
            if (kern.cols() == 1) {
                IntVec w = primitivize_rat(kern.col(0));
                bool pos = false, neg = false;
                for (const IntVec& g : gens) {
                    const int s = sgn(dot(w, g));
                    pos = pos || s > 0;
                    neg = neg || s < 0;
                    if (pos && neg) break;
                }
                if (pos != neg) {  // supporting and not orthogonal to everything
                    if (neg)
                        for (Int& x : w) x = -x;
                    found.insert(std::move(w));
                }
            }
        }
        // advance to the next ascending index subset
        more = false;
        for (std::size_t t = need; t-- > 0;) {
            if (idx[t] + (need - t) < k) {
                ++idx[t];
                for (std::size_t j = t + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
                more = true;
                break;
            }
        }
    }
    return {found.begin(), found.end()};
}

std::vector<IntVec> identity_covectors(std::size_t r) {
    std::vector<IntVec> out;
    out.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
        IntVec e(r);
        e[i] = 1;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

GeneratorAnalysis analyze_generators(std::size_t ambient_rank, const std::vector<IntVec>& generators) {
    for (const IntVec& g : generators)
        if (g.size() != ambient_rank) throw std::invalid_argument("generator length mismatch");

    GeneratorAnalysis out;
    out.cone.ambient_rank = ambient_rank;
    out.extreme.assign(generators.size(), false);

    // primitive unique directions, first-occurrence order
    std::vector<IntVec> dirs;
    std::vector<std::size_t> dir_of(generators.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < generators.size(); ++i) {
        bool zero = true;
        for (const Int& x : generators[i])
            if (sgn(x) != 0) {
                zero = false;
                break;
            }
        if (zero) continue;
        IntVec p = primitivize(generators[i]);
        auto it = std::find(dirs.begin(), dirs.end(), p);
        if (it == dirs.end()) {
            dirs.push_back(std::move(p));
            dir_of[i] = dirs.size() - 1;
        } else {
            dir_of[i] = static_cast<std::size_t>(it - dirs.begin());
        }
    }

    if (dirs.empty()) {
        out.cone.dim = 0;
        out.cone.pointed = true;
        out.cone.perp_basis = identity_covectors(ambient_rank);
        return out;
    }

    // canonical span basis: nonzero rows of the rref of the directions
    std::vector<std::size_t> piv;
    const RatMatrix rr = rref(RatMatrix::from_int_rows(dirs, ambient_rank), &piv);
    const std::size_t d = piv.size();
    out.cone.dim = d;
    RatMatrix basis(ambient_rank, d);  // columns are the basis vectors
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < ambient_rank; ++i) basis.at(i, k) = rr.at(k, i);

    // coordinates of each direction in the span basis
    const auto coords = solve(basis, RatMatrix::from_int_columns(dirs, ambient_rank));
    if (!coords) throw std::logic_error("span basis does not cover its generators");
    std::vector<IntVec> span_dirs;
    span_dirs.reserve(dirs.size());
    for (std::size_t j = 0; j < dirs.size(); ++j) span_dirs.push_back(primitivize_rat(coords->col(j)));

    const std::vector<IntVec> rel_facets = facet_normals_of_generated(span_dirs, d);
    out.cone.pointed = rank_of_vectors(rel_facets, d) == d;

    std::vector<bool> dir_extreme(dirs.size(), false);
    if (out.cone.pointed) {
        for (std::size_t j = 0; j < dirs.size(); ++j) {
            std::vector<IntVec> active;
            for (const IntVec& w : rel_facets)
                if (sgn(dot(w, span_dirs[j])) == 0) active.push_back(w);
            dir_extreme[j] = rank_of_vectors(active, d) + 1 == d;
        }
        std::vector<bool> taken(dirs.size(), false);
        for (std::size_t i = 0; i < generators.size(); ++i) {
            const std::size_t j = dir_of[i];
            if (j == static_cast<std::size_t>(-1) || !dir_extreme[j]) continue;
            out.extreme[i] = true;
            if (!taken[j]) {
                taken[j] = true;
                out.cone.rays.push_back(dirs[j]);
            }
        }
    }

    // lift relative facet covectors back to the ambient dual space: the
    // unique preimage inside the span is basis * (basis^T basis)^-1 * w
    const RatMatrix bt = basis.transposed();
    const RatMatrix gram = mul(bt, basis);
    std::set<IntVec, decltype(&lex_less)> lifted(&lex_less);
    for (const IntVec& w : rel_facets) {
        RatMatrix wcol(d, 1);
        for (std::size_t i = 0; i < d; ++i) wcol.at(i, 0) = w[i];
        const auto y = solve(gram, wcol);
        if (!y) throw std::logic_error("gram matrix not invertible");
        lifted.insert(primitivize_rat(mul(basis, *y).col(0)));
    }
    out.cone.facet_normals.assign(lifted.begin(), lifted.end());

    // perp basis: kernel of the directions, already canonical columns
    const RatMatrix perp = kernel_basis_q(RatMatrix::from_int_rows(dirs, ambient_rank));
    for (std::size_t j = 0; j < perp.cols(); ++j)
        out.cone.perp_basis.push_back(primitivize_rat(perp.col(j)));

    return out;
}

bool cone_contains(const Cone& c, const IntVec& v) {
    if (v.size() != c.ambient_rank) throw std::invalid_argument("vector length mismatch");
    for (const IntVec& p : c.perp_basis)
        if (sgn(dot(p, v)) != 0) return false;
    for (const IntVec& h : c.facet_normals)
        if (sgn(dot(h, v)) < 0) return false;
    return true;
}

std::vector<IntVec> dual_description(const Cone& c) {
    std::set<IntVec, decltype(&lex_less)> all(&lex_less);
    for (const IntVec& p : c.perp_basis) {
        all.insert(p);
        IntVec n(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) n[i] = -p[i];
        all.insert(std::move(n));
    }
    for (const IntVec& h : c.facet_normals) all.insert(h);
    return {all.begin(), all.end()};
}

std::vector<FaceRef> faces(const Cone& c) {
    if (!c.pointed) throw std::invalid_argument("faces: cone is not strongly convex");
    const std::size_t n = c.rays.size();

    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;

    std::set<std::vector<std::size_t>> seen;
    std::queue<std::vector<std::size_t>> work;
    seen.insert(all);
    work.push(all);
    while (!work.empty()) {
        const std::vector<std::size_t> cur = std::move(work.front());
        work.pop();
        for (const IntVec& h : c.facet_normals) {
            std::vector<std::size_t> next;
            for (std::size_t i : cur)
                if (sgn(dot(h, c.rays[i])) == 0) next.push_back(i);
            if (seen.insert(next).second) work.push(next);
        }
    }

    std::vector<FaceRef> out;
    out.reserve(seen.size());
    for (const auto& s : seen) {
        std::vector<IntVec> sub;
        sub.reserve(s.size());
        for (std::size_t i : s) sub.push_back(c.rays[i]);
        out.push_back(FaceRef{rank_of_vectors(sub, c.ambient_rank), s});
    }
    std::sort(out.begin(), out.end(), [](const FaceRef& a, const FaceRef& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.generator_indices < b.generator_indices;
    });
    return out;
}

bool is_face_of(const Cone& f, const Cone& c) {
    for (const IntVec& g : f.rays)
        if (!cone_contains(c, g)) return false;

    // facets of c active on all of f
    std::vector<const IntVec*> active;
    for (const IntVec& h : c.facet_normals) {
        bool on = true;
        for (const IntVec& g : f.rays)
            if (sgn(dot(h, g)) != 0) {
                on = false;
                break;
            }
        if (on) active.push_back(&h);
    }
    // rays of c on every active facet; f is a face iff that contact set is
    // exactly f's ray set
    std::set<IntVec, decltype(&lex_less)> contact(&lex_less);
    for (const IntVec& g : c.rays) {
        bool on = true;
        for (const IntVec* h : active)
            if (sgn(dot(*h, g)) != 0) {
                on = false;
                break;
            }
        if (on) contact.insert(g);
    }
    std::set<IntVec, decltype(&lex_less)> frays(&lex_less);
    for (const IntVec& g : f.rays) frays.insert(g);
    return contact == frays;
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient_rank != b.ambient_rank) throw std::invalid_argument("ambient rank mismatch");
    if (!a.pointed || !b.pointed) throw std::invalid_argument("intersect requires pointed cones");
    const std::size_t r = a.ambient_rank;

    // Gather the full cutting description of both cones. The cone they
    // generate in the dual space is full-dimensional because a is pointed,
    // so the facets of that dual cone are exactly the extreme rays of the
    // intersection.
    std::vector<IntVec> constraints;
    for (const Cone* c : {&a, &b}) {
        for (const IntVec& p : c->perp_basis) {
            constraints.push_back(p);
            IntVec n(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) n[i] = -p[i];
            constraints.push_back(std::move(n));
        }
        for (const IntVec& h : c->facet_normals) constraints.push_back(h);
    }
    std::sort(constraints.begin(), constraints.end(), lex_less);
    constraints.erase(std::unique(constraints.begin(), constraints.end()), constraints.end());

    const std::vector<IntVec> gens = facet_normals_of_generated(constraints, r);
    return cone_from_generators(r, gens);
}

ConeClass classify(const Cone& c) {
    ConeClass k;
    k.dim = c.dim;
    k.strongly_convex = c.pointed;
    k.simplicial = c.pointed && c.rays.size() == c.dim;
    k.smooth = false;
    if (k.simplicial) {
        if (c.rays.empty()) {
            k.smooth = true;
        } else {
            const SnfResult snf = smith_normal_form(IntMatrix::from_columns(c.rays, c.ambient_rank));
            k.smooth = true;
            for (const Int& d : snf.diag)
                if (d != 1 && sgn(d) != 0) k.smooth = false;
            // rank equals ray count for simplicial cones, so the number of
            // nonzero factors is c.dim; they must all be 1
            std::size_t ones = 0;
            for (const Int& d : snf.diag)
                if (d == 1) ++ones;
            k.smooth = k.smooth && ones == c.dim;
        }
    }
    return k;
}

}  // namespace fanlab
