#include "bound.hpp"

#include <algorithm>

#include "matrix.hpp"

namespace fanlab {

namespace {

enum class Mark : unsigned char { none, g, r };

struct Walk {
    const Fan& f;
    std::vector<bool> alive;      // cone still in the worklist
    std::size_t alive_count;
    std::vector<Mark> mark;       // per ray
    BoundTrace trace;

    explicit Walk(const Fan& fan)
        : f(fan),
          alive(fan.maximal_cones.size(), true),
          alive_count(fan.maximal_cones.size()),
          mark(fan.rays.size(), Mark::none) {}

    std::vector<std::size_t> known_rays(std::size_t c) const {
        std::vector<std::size_t> out;
        for (std::size_t ray : f.maximal_cones[c])
            if (mark[ray] != Mark::none) out.push_back(ray);
        return out;
    }

    std::size_t rank_of(const std::vector<std::size_t>& rays) const {
        std::vector<IntVec> vecs;
        vecs.reserve(rays.size());
        for (std::size_t ray : rays) vecs.push_back(f.rays[ray]);
        return rank_of_vectors(vecs, f.ambient_rank);
    }

    // Greedily extend `picked` (by ascending ray index from `candidates`)
    // until the span of the union reaches `target` dimensions.
    void extend_to_rank(std::vector<std::size_t>& picked,
                        const std::vector<std::size_t>& candidates, std::size_t target) const {
        std::size_t rank = rank_of(picked);
        for (std::size_t ray : candidates) {
            if (rank == target) break;
            if (std::find(picked.begin(), picked.end(), ray) != picked.end()) continue;
            picked.push_back(ray);
            const std::size_t next = rank_of(picked);
            if (next > rank)
                rank = next;
            else
                picked.pop_back();
        }
    }

    void move_rest_to_r(std::size_t c, BoundStep& step) {
        for (std::size_t ray : f.maximal_cones[c]) {
            if (mark[ray] != Mark::none) continue;
            mark[ray] = Mark::r;
            step.to_r.push_back(ray);
        }
    }

    void retire(std::size_t c, BoundStep step) {
        alive[c] = false;
        --alive_count;
        std::sort(step.to_g.begin(), step.to_g.end());
        std::sort(step.to_r.begin(), step.to_r.end());
        trace.steps.push_back(std::move(step));
    }

    // Step 1: as long as some cone's known rays already span it, its other
    // rays are forced; sweep in ascending cone order, restarting after
    // every removal.
    void step1() {
        for (std::size_t c = 0; c < alive.size();) {
            if (!alive[c] || rank_of(known_rays(c)) != f.cones[c].dim) {
                ++c;
                continue;
            }
            BoundStep step{1, c, {}, {}};
            move_rest_to_r(c, step);
            retire(c, std::move(step));
            c = 0;
        }
    }

    // Step 2: pick the cone touching the known region with the largest
    // known span e (then largest dimension, then lowest index); e rays
    // already determine that span, so only d - e new picks go to G.
    bool step2() {
        std::size_t best = alive.size();
        std::size_t best_e = 0, best_d = 0;
        for (std::size_t c = 0; c < alive.size(); ++c) {
            if (!alive[c]) continue;
            const std::vector<std::size_t> known = known_rays(c);
            if (known.empty()) continue;
            const std::size_t e = rank_of(known);
            const std::size_t d = f.cones[c].dim;
            if (best == alive.size() || e > best_e || (e == best_e && d > best_d)) {
                best = c;
                best_e = e;
                best_d = d;
            }
        }
        if (best == alive.size()) return false;

        std::vector<std::size_t> tau = {};
        extend_to_rank(tau, known_rays(best), best_e);
        const std::size_t before = tau.size();
        std::vector<std::size_t> fresh;
        for (std::size_t ray : f.maximal_cones[best])
            if (mark[ray] == Mark::none) fresh.push_back(ray);
        extend_to_rank(tau, fresh, f.cones[best].dim);

        BoundStep step{2, best, {}, {}};
        for (std::size_t i = before; i < tau.size(); ++i) {
            mark[tau[i]] = Mark::g;
            step.to_g.push_back(tau[i]);
        }
        move_rest_to_r(best, step);
        retire(best, std::move(step));
        return true;
    }

    // Step 3: open a fresh component at a cone of maximal dimension.
    void step3(std::optional<std::size_t> forced_start) {
        std::size_t best = alive.size();
        if (forced_start && alive[*forced_start]) {
            best = *forced_start;
        } else {
            for (std::size_t c = 0; c < alive.size(); ++c) {
                if (!alive[c]) continue;
                if (best == alive.size() || f.cones[c].dim > f.cones[best].dim) best = c;
            }
        }

        std::vector<std::size_t> tau;
        std::vector<std::size_t> fresh;
        for (std::size_t ray : f.maximal_cones[best])
            if (mark[ray] == Mark::none) fresh.push_back(ray);
        extend_to_rank(tau, fresh, f.cones[best].dim);

        BoundStep step{3, best, {}, {}};
        for (std::size_t ray : tau) {
            mark[ray] = Mark::g;
            step.to_g.push_back(ray);
        }
        move_rest_to_r(best, step);
        retire(best, std::move(step));
    }

    BoundTrace run(std::optional<std::size_t> forced_start) {
        trace.steps.push_back(BoundStep{0, std::nullopt, {}, {}});
        bool first = true;
        while (alive_count > 0) {
            step3(first ? forced_start : std::nullopt);
            first = false;
            step1();
            while (step2()) step1();
        }
        trace.steps.push_back(BoundStep{4, std::nullopt, {}, {}});
        for (std::size_t ray = 0; ray < mark.size(); ++ray) {
            if (mark[ray] == Mark::g) trace.g_set.push_back(ray);
            if (mark[ray] == Mark::r) trace.r_set.push_back(ray);
        }
        trace.bound = trace.g_set.size();
        return std::move(trace);
    }
};

}  // namespace

BoundTrace kappa0_upper_bound(const Fan& f) { return Walk(f).run(std::nullopt); }

BoundTrace kappa0_upper_bound_exhaustive(const Fan& f) {
    if (f.maximal_cones.empty()) return kappa0_upper_bound(f);
    std::size_t top = 0;
    for (const Cone& c : f.cones) top = std::max(top, c.dim);

    std::optional<BoundTrace> best;
    for (std::size_t c = 0; c < f.cones.size(); ++c) {
        if (f.cones[c].dim != top) continue;
        BoundTrace t = Walk(f).run(c);
        if (!best || t.bound < best->bound) best = std::move(t);
    }
    return std::move(*best);
}

}  // namespace fanlab
