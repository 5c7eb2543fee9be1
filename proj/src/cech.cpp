#include "cech.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fanlab {

namespace {

// Canonical basis of the linear span of a cone: nonzero rows of the rref of
// its rays, as columns of an ambient x dim matrix.
RatMatrix span_basis_of(const Cone& c) {
    if (c.rays.empty()) return RatMatrix(c.ambient_rank, 0);
    std::vector<std::size_t> piv;
    const RatMatrix rr = rref(RatMatrix::from_int_rows(c.rays, c.ambient_rank), &piv);
    RatMatrix b(c.ambient_rank, piv.size());
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (std::size_t i = 0; i < c.ambient_rank; ++i) b.at(i, k) = rr.at(k, i);
    return b;
}

}  // namespace

CechComplex build_cech(const Fan& f) {
    CechComplex out;

    // level 0: maximal cones of positive dimension
    std::vector<CechCell> level;
    for (std::size_t i = 0; i < f.cones.size(); ++i) {
        if (f.cones[i].dim == 0) continue;
        CechCell cell;
        cell.tuple = {i};
        cell.cone = f.cones[i];
        cell.span_basis = span_basis_of(cell.cone);
        level.push_back(std::move(cell));
    }

    while (!level.empty()) {
        std::size_t offset = 0;
        for (CechCell& cell : level) {
            cell.offset = offset;
            offset += cell.cone.dim;
        }
        out.cochain_dims.push_back(offset);
        out.levels.push_back(std::move(level));
        level.clear();

        // extend each cell by a larger cone index; subtuples of anything with
        // positive-dimensional intersection are themselves positive, so
        // extending stored cells reaches every next-level tuple
        for (const CechCell& cell : out.levels.back()) {
            for (std::size_t j = cell.tuple.back() + 1; j < f.cones.size(); ++j) {
                Cone meet = intersect(cell.cone, f.cones[j]);
                if (meet.dim == 0) continue;
                CechCell next;
                next.tuple = cell.tuple;
                next.tuple.push_back(j);
                next.span_basis = span_basis_of(meet);
                next.cone = std::move(meet);
                level.push_back(std::move(next));
            }
        }
        std::sort(level.begin(), level.end(),
                  [](const CechCell& a, const CechCell& b) { return a.tuple < b.tuple; });
    }

    // differentials
    for (std::size_t p = 0; p + 1 < out.levels.size(); ++p) {
        const auto& lo = out.levels[p];
        const auto& hi = out.levels[p + 1];
        std::map<std::vector<std::size_t>, std::size_t> lo_index;
        for (std::size_t i = 0; i < lo.size(); ++i) lo_index.emplace(lo[i].tuple, i);

        RatMatrix d(out.cochain_dims[p + 1], out.cochain_dims[p]);
        for (const CechCell& u : hi) {
            for (std::size_t q = 0; q < u.tuple.size(); ++q) {
                std::vector<std::size_t> sub = u.tuple;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(q));
                const auto it = lo_index.find(sub);
                if (it == lo_index.end()) throw std::logic_error("missing subtuple cell");
                const CechCell& t = lo[it->second];

                // basis change: columns of u's span written in t's span basis
                const auto x = solve(t.span_basis, u.span_basis);
                if (!x) throw std::logic_error("span of a tuple not inside its subtuple's span");
                // functionals restrict by the transpose; alternate signs by
                // the dropped position
                const int sign = q % 2 == 0 ? 1 : -1;
                for (std::size_t a = 0; a < u.cone.dim; ++a)
                    for (std::size_t b = 0; b < t.cone.dim; ++b)
                        d.at(u.offset + a, t.offset + b) += Rat(sign) * x->at(b, a);
            }
        }
        out.differentials.push_back(std::move(d));
    }
    return out;
}

std::vector<std::size_t> kappa(const CechComplex& c) {
    const std::size_t levels = c.levels.size();
    std::vector<std::size_t> out(levels);
    std::vector<std::size_t> d_rank(levels, 0);  // rank of delta^p
    for (std::size_t p = 0; p + 1 < levels; ++p) d_rank[p] = rank_q(c.differentials[p]);
    for (std::size_t p = 0; p < levels; ++p) {
        const std::size_t ker = c.cochain_dims[p] - d_rank[p];
        const std::size_t im = p == 0 ? 0 : d_rank[p - 1];
        out[p] = ker - im;
    }
    return out;
}

AbelianGroup class_group(const Fan& f) {
    const std::size_t n = f.rays.size();
    if (n == 0) return AbelianGroup{};

    const IntMatrix rays = IntMatrix::from_columns(f.rays, f.ambient_rank);
    const SnfResult snf = smith_normal_form(rays);
    std::size_t s = 0;
    for (const Int& d : snf.diag)
        if (sgn(d) != 0) ++s;

    // The first s coordinates of left * ray give the ray's coordinates in a
    // basis of the saturated span lattice; the remaining coordinates vanish.
    IntMatrix pairing(n, s);
    for (std::size_t i = 0; i < n; ++i) {
        const IntVec c = mul(snf.left, f.rays[i]);
        for (std::size_t j = s; j < c.size(); ++j)
            if (sgn(c[j]) != 0) throw std::logic_error("ray outside its own span lattice");
        for (std::size_t j = 0; j < s; ++j) pairing.at(i, j) = c[j];
    }
    return cokernel_structure(pairing);
}

std::size_t phi_kernel_dim(const Fan& f) {
    const std::size_t n = f.rays.size();
    if (n == 0) return 0;

    // Rows accumulate per maximal cone: the quotient of the cone's ray
    // coordinates by the restrictions of global linear functionals.
    std::vector<RatVec> rows;
    for (std::size_t ci = 0; ci < f.maximal_cones.size(); ++ci) {
        const Cone& cone = f.cones[ci];
        const std::size_t k = cone.rays.size();
        const std::size_t d = cone.dim;
        if (k == 0 || k == d) continue;  // nothing to cut out

        const RatMatrix basis = span_basis_of(cone);
        const auto coords = solve(basis, RatMatrix::from_int_columns(cone.rays, f.ambient_rank));
        if (!coords) throw std::logic_error("cone rays outside their span");
        // pivot rays: a deterministic subset of d rays spanning the cone
        std::vector<std::size_t> pivots;
        rref(*coords, &pivots);
        std::vector<bool> is_pivot(k, false);
        for (std::size_t p : pivots) is_pivot[p] = true;

        RatMatrix ct(d, d);  // pivot columns of the coordinate matrix
        for (std::size_t t = 0; t < d; ++t)
            for (std::size_t i = 0; i < d; ++i) ct.at(i, t) = coords->at(i, pivots[t]);

        for (std::size_t jf = 0; jf < k; ++jf) {
            if (is_pivot[jf]) continue;
            // value at the free ray minus the linear functional interpolating
            // the pivot values
            RatMatrix rhs(d, 1);
            for (std::size_t i = 0; i < d; ++i) rhs.at(i, 0) = coords->at(i, jf);
            const auto w = solve(ct, rhs);
            if (!w) throw std::logic_error("pivot rays do not span");
            RatVec row(n);
            row[f.maximal_cones[ci][jf]] += 1;
            for (std::size_t t = 0; t < d; ++t)
                row[f.maximal_cones[ci][pivots[t]]] -= w->at(t, 0);
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return n;
    return n - rank_q(RatMatrix::from_rows(rows, n));
}

RankIdentity rank_identity(const Fan& f) {
    RankIdentity out;
    out.applicable = true;
    for (std::size_t i = 0; i < f.cones.size() && out.applicable; ++i)
        for (std::size_t j = i + 1; j < f.cones.size(); ++j) {
            const Cone meet = intersect(f.cones[i], f.cones[j]);
            if (!classify(meet).simplicial) {
                out.applicable = false;
                break;
            }
        }

    const InvariantReport rep = invariant_report(f);
    std::size_t surplus = 0;
    for (const Cone& c : f.cones) surplus += c.rays.size() - c.dim;
    out.lhs = rep.rho1 + rep.stats.support_rank + surplus;
    out.rhs = rep.rho2 + f.rays.size();
    return out;
}

InvariantReport invariant_report(const Fan& f) {
    InvariantReport rep;
    rep.stats = fan_stats(f);

    const CechComplex complex = build_cech(f);
    rep.cech_dims = complex.cochain_dims;
    rep.kappa = kappa(complex);
    rep.euler = 0;
    for (std::size_t p = 0; p < rep.cech_dims.size(); ++p) {
        const long c = static_cast<long>(rep.cech_dims[p]);
        rep.euler += p % 2 == 0 ? c : -c;
    }

    const std::size_t k0 = rep.kappa.empty() ? 0 : rep.kappa[0];
    const std::size_t k1 = rep.kappa.size() > 1 ? rep.kappa[1] : 0;
    rep.rho0 = rep.stats.ambient_rank - rep.stats.support_rank;
    rep.rho1 = k0 - rep.stats.support_rank;
    rep.rho1_prime = rep.stats.n_rays - rep.stats.support_rank;
    rep.rho2 = k1;
    rep.class_group = class_group(f);
    rep.nonprojective_certificate = rep.stats.complete && k0 == rep.stats.support_rank;
    return rep;
}

}  // namespace fanlab
