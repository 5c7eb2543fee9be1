#include "fanlab/fanlab.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <utility>

#include "bound.hpp"
#include "brauer.hpp"
#include "cech.hpp"
#include "errors.hpp"
#include "fixtures.hpp"
#include "json.hpp"
#include "json_io.hpp"
#include "strata.hpp"

struct fanlab_fan {
    fanlab::Fan fan;
};

namespace {

using namespace fanlab;

char* dup_cstring(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(char** out_error, const std::string& msg) {
    if (out_error != nullptr) *out_error = dup_cstring(msg);
}

template <typename Body>
fanlab_status guarded(char** out_error, Body&& body) {
    try {
        return body();
    } catch (const InvalidFanError& e) {
        set_error(out_error, e.what());
        return FANLAB_ERR_INVALID_FAN;
    } catch (const UsageError& e) {
        set_error(out_error, e.what());
        return FANLAB_ERR_USAGE;
    } catch (const HypothesisError& e) {
        set_error(out_error, e.what());
        return FANLAB_ERR_HYPOTHESIS;
    } catch (const std::exception& e) {
        set_error(out_error, e.what());
        return FANLAB_ERR_INTERNAL;
    } catch (...) {
        set_error(out_error, "unknown error");
        return FANLAB_ERR_INTERNAL;
    }
}

void require(bool ok, const char* msg) {
    if (!ok) throw UsageError(msg);
}

Int parse_decimal(const char* text, const char* what) {
    require(text != nullptr && *text != '\0', "missing decimal integer");
    Int value;
    if (value.set_str(text, 10) != 0)
        throw UsageError(std::string(what) + " must be a decimal integer");
    return value;
}

FieldDescriptor resolve_field(const char* field) {
    require(field != nullptr, "null field descriptor");
    const std::string spec(field);
    if (spec == "acl") return FieldDescriptor::algebraically_closed_preset();
    if (spec == "real") return FieldDescriptor::real_preset();
    if (!spec.empty() && spec.front() == '{') return parse_field_json(spec);
    throw UsageError("field must be acl, real, or a JSON field descriptor");
}

fanlab_status deliver(const std::string& text, char** out) {
    char* s = dup_cstring(text);
    if (s == nullptr) return FANLAB_ERR_INTERNAL;
    *out = s;
    return FANLAB_OK;
}

}  // namespace

extern "C" {

const char* fanlab_version(void) { return fanlab::tool_version; }

void fanlab_string_free(char* s) { std::free(s); }

void fanlab_fan_free(fanlab_fan* fan) { delete fan; }

fanlab_status fanlab_fan_from_json(const char* json, size_t len, int normalize,
                                   fanlab_fan** out_fan, char** out_error) {
    return guarded(out_error, [&]() -> fanlab_status {
        require(json != nullptr, "null fan text");
        require(out_fan != nullptr, "null output parameter");
        *out_fan = nullptr;
        const std::string text(json, len == 0 ? std::strlen(json) : len);
        Fan fan = parse_fan_json(text, normalize != 0);
        *out_fan = new fanlab_fan{std::move(fan)};
        return FANLAB_OK;
    });
}

fanlab_status fanlab_fan_to_json(const fanlab_fan* fan, char** out_json, char** out_error) {
    return guarded(out_error, [&]() -> fanlab_status {
        require(fan != nullptr, "null fan handle");
        require(out_json != nullptr, "null output parameter");
        return deliver(emit_fan_json(fan->fan), out_json);
    });
}

fanlab_status fanlab_invariants(const fanlab_fan* fan, int as_json, char** out,
                                char** out_error) {
    return guarded(out_error, [&]() -> fanlab_status {
        require(fan != nullptr, "null fan handle");
        require(out != nullptr, "null output parameter");
        const InvariantReport rep = invariant_report(fan->fan);
        return deliver(as_json != 0 ? emit_report_json(rep, fan_digest(fan->fan))
                                    : emit_report_text(rep),
                       out);
    });
}

fanlab_status fanlab_brauer(const fanlab_fan* fan, const char* nu, const char* field,
                            int as_json, char** out, char** out_error) {
    return guarded(out_error, [&]() -> fanlab_status {
        require(fan != nullptr, "null fan handle");
        require(out != nullptr, "null output parameter");
        const FieldDescriptor k = resolve_field(field);
        const Int nu_value = parse_decimal(nu, "nu");
        const BrauerReport rep = brauer_report(fan->fan, nu_value, k);
        return deliver(as_json != 0 ? emit_brauer_json(rep, fan_digest(fan->fan))
                                    : emit_brauer_text(rep),
                       out);
    });
}

fanlab_status fanlab_bound(const fanlab_fan* fan, int exhaustive, int as_json, char** out,
                           char** out_error) {
    return guarded(out_error, [&]() -> fanlab_status {
        require(fan != nullptr, "null fan handle");
        require(out != nullptr, "null output parameter");
        const BoundTrace trace = exhaustive != 0 ? kappa0_upper_bound_exhaustive(fan->fan)
                                                 : kappa0_upper_bound(fan->fan);
        return deliver(as_json != 0 ? emit_bound_json(trace, fan_digest(fan->fan))
                                    : emit_bound_text(trace),
                       out);
    });
}

fanlab_status fanlab_strata(const fanlab_fan* fan, uint64_t samples, uint64_t seed,
                            const char* denominator_bound, const char* radius_numerator,
                            const char* radius_denominator, int conjecture,
                            unsigned max_threads, int as_json, char** out, char** out_error) {
    return guarded(out_error, [&]() -> fanlab_status {
        require(fan != nullptr, "null fan handle");
        require(out != nullptr, "null output parameter");
        NeighborhoodSpec spec;
        spec.denominator_bound = parse_decimal(denominator_bound, "denominator bound");
        spec.radius_numerator = parse_decimal(radius_numerator, "radius numerator");
        spec.radius_denominator = parse_decimal(radius_denominator, "radius denominator");
        const std::string digest = fan_digest(fan->fan);
        if (conjecture != 0) {
            const Conjecture1Report rep =
                conjecture1_report(fan->fan, spec, samples, seed, max_threads);
            return deliver(
                as_json != 0 ? emit_conjecture_json(rep, digest) : emit_conjecture_text(rep),
                out);
        }
        const StrataSample sample = sample_strata(fan->fan, spec, samples, seed, max_threads);
        return deliver(
            as_json != 0 ? emit_strata_json(sample, digest) : emit_strata_text(sample), out);
    });
}

fanlab_status fanlab_fixture_list(int as_json, char** out, char** out_error) {
    return guarded(out_error, [&]() -> fanlab_status {
        require(out != nullptr, "null output parameter");
        if (as_json != 0) {
            nlohmann::ordered_json list = nlohmann::ordered_json::array();
            for (const FixtureInfo& info : fixture_catalog()) {
                nlohmann::ordered_json entry;
                entry["name"] = info.name;
                entry["description"] = info.description;
                list.push_back(std::move(entry));
            }
            return deliver(list.dump(2) + "\n", out);
        }
        std::size_t width = 0;
        for (const FixtureInfo& info : fixture_catalog())
            width = std::max(width, info.name.size());
        std::string text;
        for (const FixtureInfo& info : fixture_catalog()) {
            text += info.name;
            text += std::string(width - info.name.size() + 2, ' ');
            text += info.description;
            text += "\n";
        }
        return deliver(text, out);
    });
}

fanlab_status fanlab_fixture(const char* name, char** out_json, char** out_error) {
    return guarded(out_error, [&]() -> fanlab_status {
        require(name != nullptr, "null fixture name");
        require(out_json != nullptr, "null output parameter");
        if (!has_fixture(name)) throw UsageError("unknown fixture: " + std::string(name));
        return deliver(emit_fan_json(fixture(name)), out_json);
    });
}

}  // extern "C"
