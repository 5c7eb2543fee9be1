#include "json_io.hpp"

#include <cstdint>
#include <sstream>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "json.hpp"

namespace fanlab {

namespace {

using njson = nlohmann::ordered_json;

njson json_int(const Int& x) {
    // decimal string fallback keeps values beyond int64 exact
    if (x.fits_slong_p()) return njson(static_cast<std::int64_t>(x.get_si()));
    return njson(x.get_str());
}

njson json_group(const AbelianGroup& g) {
    njson j;
    j["free_rank"] = g.free_rank;
    njson torsion = njson::array();
    for (const Int& t : g.torsion) torsion.push_back(json_int(t));
    j["torsion"] = std::move(torsion);
    return j;
}

njson fan_to_json(const Fan& f) {
    njson j;
    j["ambient_rank"] = f.ambient_rank;
    njson rays = njson::array();
    for (const IntVec& ray : f.rays) {
        njson row = njson::array();
        for (const Int& x : ray) row.push_back(json_int(x));
        rays.push_back(std::move(row));
    }
    j["rays"] = std::move(rays);
    j["maximal_cones"] = f.maximal_cones;
    if (!f.name.empty()) j["name"] = f.name;
    return j;
}

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw InvalidFanError("schema error: " + path + " (" + what + ")");
}

Int require_int(const njson& j, const std::string& path) {
    if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    schema_error(path, "expected an exact integer");
}

std::size_t require_index(const njson& j, const std::string& path) {
    if (!j.is_number_unsigned()) schema_error(path, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

std::string render_seq(const std::vector<std::size_t>& v) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    out << "]";
    return out.str();
}

// two-column table with the names left-aligned in a shared gutter
struct Table {
    std::vector<std::pair<std::string, std::string>> rows;

    void add(std::string name, std::string value) {
        rows.emplace_back(std::move(name), std::move(value));
    }

    std::string str() const {
        std::size_t width = 0;
        for (const auto& [name, value] : rows) width = std::max(width, name.size());
        std::ostringstream out;
        for (const auto& [name, value] : rows)
            out << name << std::string(width - name.size() + 2, ' ') << value << "\n";
        return out.str();
    }
};

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

const char* const tool_version = "0.1.0";

Fan parse_fan_json(const std::string& text, bool normalize) {
    njson j;
    try {
        j = njson::parse(text);
    } catch (const njson::parse_error& e) {
        schema_error("$", "invalid JSON at byte " + std::to_string(e.byte));
    }
    if (!j.is_object()) schema_error("$", "expected an object");
    for (const auto& [key, value] : j.items()) {
        if (key != "ambient_rank" && key != "rays" && key != "maximal_cones" && key != "name")
            schema_error("$." + key, "unknown key");
    }
    if (!j.contains("ambient_rank")) schema_error("$.ambient_rank", "missing");
    if (!j.contains("rays")) schema_error("$.rays", "missing");
    if (!j.contains("maximal_cones")) schema_error("$.maximal_cones", "missing");

    const std::size_t rank = require_index(j["ambient_rank"], "$.ambient_rank");

    const njson& jrays = j["rays"];
    if (!jrays.is_array()) schema_error("$.rays", "expected an array");
    std::vector<IntVec> rays;
    rays.reserve(jrays.size());
    for (std::size_t i = 0; i < jrays.size(); ++i) {
        const std::string path = "$.rays[" + std::to_string(i) + "]";
        const njson& row = jrays[i];
        if (!row.is_array() || row.size() != rank)
            schema_error(path, "expected " + std::to_string(rank) + " integers");
        IntVec ray(rank);
        for (std::size_t k = 0; k < rank; ++k)
            ray[k] = require_int(row[k], path + "[" + std::to_string(k) + "]");
        rays.push_back(std::move(ray));
    }

    const njson& jcones = j["maximal_cones"];
    if (!jcones.is_array()) schema_error("$.maximal_cones", "expected an array");
    std::vector<std::vector<std::size_t>> cones;
    cones.reserve(jcones.size());
    for (std::size_t c = 0; c < jcones.size(); ++c) {
        const std::string path = "$.maximal_cones[" + std::to_string(c) + "]";
        const njson& row = jcones[c];
        if (!row.is_array()) schema_error(path, "expected an array of ray indices");
        std::vector<std::size_t> cone;
        cone.reserve(row.size());
        for (std::size_t k = 0; k < row.size(); ++k)
            cone.push_back(require_index(row[k], path + "[" + std::to_string(k) + "]"));
        cones.push_back(std::move(cone));
    }

    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) schema_error("$.name", "expected a string");
        name = j["name"].get<std::string>();
    }

    if (!normalize) {
        for (std::size_t i = 0; i < rays.size(); ++i) {
            Int g = 0;
            for (const Int& x : rays[i]) g = gcd_int(g, x);
            if (sign(g) > 0 && g != 1)
                throw InvalidFanError("ray " + std::to_string(i) +
                                      " not primitive (use --normalize)");
        }
    }

    BuildResult built = build_fan(rank, std::move(rays), std::move(cones), normalize, name);
    if (!built.ok()) {
        std::string msg;
        for (const std::string& e : built.errors) {
            if (!msg.empty()) msg += "; ";
            msg += e;
        }
        throw InvalidFanError(msg);
    }
    return std::move(*built.fan);
}

std::string emit_fan_json(const Fan& f) { return fan_to_json(f).dump(2) + "\n"; }

std::string fan_digest(const Fan& f) {
    const std::uint64_t h = fnv1a64(fan_to_json(f).dump());
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 0; i < 16; ++i) out[15 - i] = hex[(h >> (4 * i)) & 0xF];
    return out;
}

std::string emit_report_json(const InvariantReport& rep, const std::string& digest) {
    njson j;
    j["tool_version"] = tool_version;
    j["input_digest"] = digest;
    j["r"] = rep.stats.ambient_rank;
    j["s"] = rep.stats.support_rank;
    j["n_rays"] = rep.stats.n_rays;
    j["counts"] = rep.stats.counts;
    j["top_dim"] = rep.stats.top_dim;
    j["complete"] = rep.stats.complete;
    j["simplicial"] = rep.stats.simplicial;
    j["rho0"] = rep.rho0;
    j["rho1"] = rep.rho1;
    j["rho1_prime"] = rep.rho1_prime;
    j["rho2"] = rep.rho2;
    j["kappa"] = rep.kappa;
    j["cech_dims"] = rep.cech_dims;
    j["euler"] = rep.euler;
    j["class_group"] = json_group(rep.class_group);
    j["nonprojective_certificate"] = rep.nonprojective_certificate;
    return j.dump(2) + "\n";
}

std::string emit_report_text(const InvariantReport& rep) {
    Table t;
    t.add("r", std::to_string(rep.stats.ambient_rank));
    t.add("s", std::to_string(rep.stats.support_rank));
    t.add("n_rays", std::to_string(rep.stats.n_rays));
    t.add("counts", render_seq(rep.stats.counts));
    t.add("top_dim", std::to_string(rep.stats.top_dim));
    t.add("complete", rep.stats.complete ? "true" : "false");
    t.add("simplicial", rep.stats.simplicial ? "true" : "false");
    t.add("rho0", std::to_string(rep.rho0));
    t.add("rho1", std::to_string(rep.rho1));
    t.add("rho1_prime", std::to_string(rep.rho1_prime));
    t.add("rho2", std::to_string(rep.rho2));
    t.add("kappa", render_seq(rep.kappa));
    t.add("cech_dims", render_seq(rep.cech_dims));
    t.add("euler", std::to_string(rep.euler));
    t.add("class_group", rep.class_group.to_string());
    t.add("nonprojective_certificate", rep.nonprojective_certificate ? "true" : "false");
    return t.str();
}

std::string emit_brauer_json(const BrauerReport& rep, const std::string& digest) {
    njson j;
    j["tool_version"] = tool_version;
    j["input_digest"] = digest;
    j["nu"] = json_int(rep.nu);
    njson factors = njson::array();
    for (const Int& a : rep.factors) factors.push_back(json_int(a));
    j["invariant_factors"] = std::move(factors);
    j["h1"] = json_group(rep.h1);
    j["brauer"] = json_group(rep.brauer);
    return j.dump(2) + "\n";
}

std::string emit_brauer_text(const BrauerReport& rep) {
    Table t;
    t.add("nu", rep.nu.get_str());
    std::ostringstream factors;
    factors << "(";
    for (std::size_t i = 0; i < rep.factors.size(); ++i)
        factors << (i ? ", " : "") << rep.factors[i].get_str();
    factors << ")";
    t.add("invariant_factors", factors.str());
    t.add("h1", rep.h1.to_string());
    t.add("brauer", rep.brauer.to_string());
    return t.str();
}

std::string emit_bound_json(const BoundTrace& trace, const std::string& digest) {
    njson j;
    j["tool_version"] = tool_version;
    j["input_digest"] = digest;
    j["bound"] = trace.bound;
    j["g_set"] = trace.g_set;
    j["r_set"] = trace.r_set;
    njson steps = njson::array();
    for (const BoundStep& s : trace.steps) {
        njson step;
        step["step"] = s.label;
        if (s.cone) step["cone"] = *s.cone;
        step["to_g"] = s.to_g;
        step["to_r"] = s.to_r;
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    return j.dump(2) + "\n";
}

std::string emit_bound_text(const BoundTrace& trace) {
    std::ostringstream out;
    out << "bound  " << trace.bound << "\n";
    out << "g_set  " << render_seq(trace.g_set) << "\n";
    out << "r_set  " << render_seq(trace.r_set) << "\n";
    for (const BoundStep& s : trace.steps) {
        out << "step " << s.label;
        if (s.cone) out << ": cone " << *s.cone;
        if (!s.to_g.empty()) out << ", to_g " << render_seq(s.to_g);
        if (!s.to_r.empty()) out << ", to_r " << render_seq(s.to_r);
        out << "\n";
    }
    return out.str();
}

namespace {

njson histogram_json(const std::map<std::size_t, std::size_t>& histogram) {
    njson j = njson::object();
    for (const auto& [k, count] : histogram) j[std::to_string(k)] = count;
    return j;
}

}  // namespace

std::string emit_strata_json(const StrataSample& sample, const std::string& digest) {
    njson j;
    j["tool_version"] = tool_version;
    j["input_digest"] = digest;
    j["seed"] = sample.seed;
    j["samples_requested"] = sample.samples_requested;
    j["samples_accepted"] = sample.samples_accepted;
    j["rejected_combinatorics"] = sample.rejected_combinatorics;
    njson rejections = njson::object();
    for (const auto& [reason, count] : sample.rejections_by_reason)
        rejections[to_string(reason)] = count;
    j["rejections_by_reason"] = std::move(rejections);
    j["histogram"] = histogram_json(sample.histogram);
    njson witnesses = njson::object();
    for (const auto& [k, rays] : sample.witnesses) {
        njson rows = njson::array();
        for (const IntVec& ray : rays) {
            njson row = njson::array();
            for (const Int& x : ray) row.push_back(json_int(x));
            rows.push_back(std::move(row));
        }
        witnesses[std::to_string(k)] = std::move(rows);
    }
    j["witnesses"] = std::move(witnesses);
    return j.dump(2) + "\n";
}

std::string emit_strata_text(const StrataSample& sample) {
    Table t;
    t.add("seed", std::to_string(sample.seed));
    t.add("samples_requested", std::to_string(sample.samples_requested));
    t.add("samples_accepted", std::to_string(sample.samples_accepted));
    t.add("rejected_combinatorics", std::to_string(sample.rejected_combinatorics));
    for (const auto& [reason, count] : sample.rejections_by_reason)
        t.add(std::string("  rejected: ") + to_string(reason), std::to_string(count));
    for (const auto& [k, count] : sample.histogram)
        t.add("kappa_0 = " + std::to_string(k), std::to_string(count));
    std::ostringstream out;
    out << t.str();
    for (const auto& [k, rays] : sample.witnesses) {
        out << "witness kappa_0 = " << k << ":";
        for (const IntVec& ray : rays) {
            out << " (";
            for (std::size_t i = 0; i < ray.size(); ++i)
                out << (i ? "," : "") << ray[i].get_str();
            out << ")";
        }
        out << "\n";
    }
    return out.str();
}

std::string emit_conjecture_json(const Conjecture1Report& rep, const std::string& digest) {
    njson j;
    j["tool_version"] = tool_version;
    j["input_digest"] = digest;
    j["applicable"] = rep.applicable;
    njson fraction;
    fraction["numerator"] = json_int(rep.fraction_kappa0_eq_3.get_num());
    fraction["denominator"] = json_int(rep.fraction_kappa0_eq_3.get_den());
    j["fraction_kappa0_eq_3"] = std::move(fraction);
    j["histogram"] = histogram_json(rep.sample.histogram);
    return j.dump(2) + "\n";
}

std::string emit_conjecture_text(const Conjecture1Report& rep) {
    if (!rep.applicable)
        return "applicable  false\n";
    Table t;
    t.add("applicable", "true");
    t.add("fraction_kappa0_eq_3", to_string(rep.fraction_kappa0_eq_3));
    t.add("samples_accepted", std::to_string(rep.sample.samples_accepted));
    for (const auto& [k, count] : rep.sample.histogram)
        t.add("kappa_0 = " + std::to_string(k), std::to_string(count));
    return t.str();
}

namespace {

[[noreturn]] void field_schema_error(const std::string& path, const std::string& what) {
    throw UsageError("schema error: " + path + " (" + what + ")");
}

AbelianGroup parse_group(const njson& j, const std::string& path) {
    if (!j.is_object()) field_schema_error(path, "expected an object");
    for (const auto& [key, value] : j.items()) {
        if (key != "free_rank" && key != "torsion") field_schema_error(path + "." + key, "unknown key");
    }
    std::size_t free_rank = 0;
    std::vector<Int> orders;
    if (j.contains("free_rank")) {
        if (!j["free_rank"].is_number_unsigned())
            field_schema_error(path + ".free_rank", "expected a nonnegative integer");
        free_rank = j["free_rank"].get<std::size_t>();
    }
    if (j.contains("torsion")) {
        if (!j["torsion"].is_array()) field_schema_error(path + ".torsion", "expected an array");
        std::size_t i = 0;
        for (const njson& entry : j["torsion"]) {
            const std::string p = path + ".torsion[" + std::to_string(i++) + "]";
            if (!entry.is_number_unsigned()) field_schema_error(p, "expected a positive integer");
            Int order(static_cast<unsigned long>(entry.get<std::uint64_t>()));
            if (order < 1) field_schema_error(p, "expected a positive integer");
            orders.push_back(order);
        }
    }
    return abelian_from_cyclic(orders, free_rank);
}

}  // namespace

FieldDescriptor parse_field_json(const std::string& text) {
    njson j;
    try {
        j = njson::parse(text);
    } catch (const njson::parse_error& e) {
        field_schema_error("$", "invalid JSON at byte " + std::to_string(e.byte));
    }
    if (!j.is_object()) field_schema_error("$", "expected an object");
    for (const auto& [key, value] : j.items()) {
        if (key != "characteristic" && key != "has_primitive_root" && key != "h1_nu" &&
            key != "brauer_nu")
            field_schema_error("$." + key, "unknown key");
    }
    FieldDescriptor k;
    if (j.contains("characteristic")) {
        if (!j["characteristic"].is_number_unsigned())
            field_schema_error("$.characteristic", "expected a nonnegative integer");
        k.characteristic = Int(static_cast<unsigned long>(j["characteristic"].get<std::uint64_t>()));
    }
    if (j.contains("has_primitive_root")) {
        if (!j["has_primitive_root"].is_boolean())
            field_schema_error("$.has_primitive_root", "expected a boolean");
        k.has_primitive_root = j["has_primitive_root"].get<bool>();
    }
    if (j.contains("h1_nu")) k.h1_nu = parse_group(j["h1_nu"], "$.h1_nu");
    if (j.contains("brauer_nu")) k.brauer_nu = parse_group(j["brauer_nu"], "$.brauer_nu");
    return k;
}

}  // namespace fanlab
