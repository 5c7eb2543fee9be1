#include "strata.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <utility>

#include "cech.hpp"
#include "cone.hpp"
#include "errors.hpp"

namespace fanlab {

namespace {

struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Stream for sample i of a run; mixing keeps neighboring indices unrelated.
std::uint64_t sample_seed(std::uint64_t seed, std::size_t index) {
    return mix64(seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1));
}

// Uniform integer in [0, m), m >= 1, by rejection on the top bit window.
Int bounded_int(SplitMix64& g, const Int& m) {
    if (m == 1) return Int(0);
    const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    for (;;) {
        Int r = 0;
        for (std::size_t w = 0; w < words; ++w) {
            r <<= 64;
            Int word(static_cast<unsigned long>(g.next()));
            r += word;
        }
        r >>= words * 64 - bits;
        if (r < m) return r;
    }
}

Int maxnorm(const IntVec& v) {
    Int m = 0;
    for (const Int& x : v) {
        Int a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

void validate_spec(const NeighborhoodSpec& spec, std::size_t n_rays) {
    if (spec.denominator_bound < 1) throw UsageError("denominator bound must be at least 1");
    if (spec.radius_denominator < 1) throw UsageError("radius denominator must be positive");
    if (spec.radius_numerator < 0) throw UsageError("radius must be nonnegative");
    for (std::size_t i : spec.frozen_rays) {
        if (i >= n_rays)
            throw UsageError("frozen ray index " + std::to_string(i) + " out of range");
    }
}

std::vector<RatVec> draw_offsets(const Fan& f, const NeighborhoodSpec& spec, SplitMix64& g) {
    std::vector<bool> frozen(f.rays.size(), false);
    for (std::size_t i : spec.frozen_rays) frozen[i] = true;

    std::vector<RatVec> offsets(f.rays.size(), RatVec(f.ambient_rank, Rat(0)));
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        if (frozen[i]) continue;
        // grid reach: floor(radius * maxnorm * D) steps of 1/D either way
        Int k_max = spec.radius_numerator * maxnorm(f.rays[i]) * spec.denominator_bound /
                    spec.radius_denominator;
        if (k_max == 0) continue;
        Int m = 2 * k_max + 1;
        for (std::size_t j = 0; j < f.ambient_rank; ++j) {
            Int k = bounded_int(g, m) - k_max;
            offsets[i][j] = make_rat(k, spec.denominator_bound);
        }
    }
    return offsets;
}

PerturbResult apply_with_poset(const Fan& f, const std::vector<RatVec>& offsets,
                               const std::vector<PosetFace>& original_faces) {
    if (offsets.size() != f.rays.size())
        throw UsageError("need one offset vector per ray");
    for (const RatVec& o : offsets) {
        if (o.size() != f.ambient_rank) throw UsageError("offset has wrong length");
    }

    std::vector<IntVec> rays;
    rays.reserve(f.rays.size());
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        RatVec v(f.ambient_rank);
        bool zero = true;
        for (std::size_t j = 0; j < f.ambient_rank; ++j) {
            v[j] = Rat(f.rays[i][j]) + offsets[i][j];
            if (sign(v[j]) != 0) zero = false;
        }
        if (zero) return PerturbResult{std::nullopt, RejectReason::zero_ray};
        rays.push_back(primitivize_rat(v));
    }

    BuildResult built = build_fan(f.ambient_rank, std::move(rays), f.maximal_cones,
                                  /*normalize_rays=*/false, f.name);
    if (!built.ok()) return PerturbResult{std::nullopt, RejectReason::invalid_fan};
    if (face_poset(*built.fan).faces != original_faces)
        return PerturbResult{std::nullopt, RejectReason::poset_changed};
    return PerturbResult{std::move(built.fan), std::nullopt};
}

}  // namespace

const char* to_string(RejectReason r) {
    switch (r) {
        case RejectReason::zero_ray: return "zero ray";
        case RejectReason::invalid_fan: return "invalid fan";
        case RejectReason::poset_changed: return "face poset changed";
    }
    return "unknown";
}

PerturbResult apply_ray_offsets(const Fan& f, const std::vector<RatVec>& offsets) {
    return apply_with_poset(f, offsets, face_poset(f).faces);
}

PerturbResult perturb(const Fan& f, const NeighborhoodSpec& spec, std::uint64_t seed) {
    validate_spec(spec, f.rays.size());
    SplitMix64 g{mix64(seed ^ 0x6A09E667F3BCC909ULL)};
    return apply_with_poset(f, draw_offsets(f, spec, g), face_poset(f).faces);
}

namespace {

struct SampleOutcome {
    bool accepted = false;
    RejectReason reason = RejectReason::zero_ray;
    std::size_t kappa0 = 0;
    std::vector<IntVec> rays;
};

unsigned resolve_threads(unsigned requested, std::size_t n) {
    if (n <= 1) return 1;
    unsigned t = requested;
    if (t == 0) {
        if (const char* env = std::getenv("FANLAB_THREADS")) {
            char* end = nullptr;
            unsigned long v = std::strtoul(env, &end, 10);
            if (end != env && *end == '\0' && v >= 1 && v <= 1024)
                t = static_cast<unsigned>(v);
        }
    }
    if (t == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        t = hw == 0 ? 1 : (hw < 8 ? hw : 8);
    }
    return n < t ? static_cast<unsigned>(n) : t;
}

}  // namespace

StrataSample sample_strata(const Fan& f, const NeighborhoodSpec& spec, std::size_t n,
                           std::uint64_t seed, unsigned max_threads) {
    validate_spec(spec, f.rays.size());
    const std::vector<PosetFace> original_faces = face_poset(f).faces;

    std::vector<SampleOutcome> outcomes(n);
    auto evaluate = [&](std::size_t i) {
        SplitMix64 g{mix64(sample_seed(seed, i) ^ 0x6A09E667F3BCC909ULL)};
        PerturbResult p = apply_with_poset(f, draw_offsets(f, spec, g), original_faces);
        SampleOutcome out;
        if (p.accepted()) {
            out.accepted = true;
            const std::vector<std::size_t> k = kappa(build_cech(*p.fan));
            out.kappa0 = k.empty() ? 0 : k[0];
            out.rays = std::move(p.fan->rays);
        } else {
            out.reason = *p.reason;
        }
        outcomes[i] = std::move(out);
    };

    const unsigned threads = resolve_threads(max_threads, n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) evaluate(i);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            try {
                for (;;) {
                    std::size_t i = cursor.fetch_add(1);
                    if (i >= n) return;
                    evaluate(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                cursor.store(n);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    StrataSample result;
    result.samples_requested = n;
    result.seed = seed;
    for (SampleOutcome& out : outcomes) {
        if (!out.accepted) {
            ++result.rejected_combinatorics;
            ++result.rejections_by_reason[out.reason];
            continue;
        }
        ++result.samples_accepted;
        ++result.histogram[out.kappa0];
        result.witnesses.try_emplace(out.kappa0, std::move(out.rays));
    }
    return result;
}

Conjecture1Report conjecture1_report(const Fan& f, const NeighborhoodSpec& spec, std::size_t n,
                                     std::uint64_t seed, unsigned max_threads) {
    Conjecture1Report report;
    const FanStats stats = fan_stats(f);
    bool all_nonsimplicial = true;
    for (const Cone& c : f.cones) {
        if (classify(c).simplicial) all_nonsimplicial = false;
    }
    report.applicable =
        stats.complete && f.ambient_rank == 3 && !f.cones.empty() && all_nonsimplicial;
    if (!report.applicable) return report;

    report.sample = sample_strata(f, spec, n, seed, max_threads);
    if (report.sample.samples_accepted > 0) {
        std::size_t hits = 0;
        if (auto it = report.sample.histogram.find(3); it != report.sample.histogram.end())
            hits = it->second;
        report.fraction_kappa0_eq_3 =
            make_rat(Int(static_cast<unsigned long>(hits)),
                     Int(static_cast<unsigned long>(report.sample.samples_accepted)));
    }
    return report;
}

}  // namespace fanlab
