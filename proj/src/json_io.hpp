// JSON interchange and human-readable rendering.
//
// Fan files are strict JSON objects {ambient_rank, rays, maximal_cones,
// name?}: unknown keys are rejected, every number must be an exact integer
// (floats never appear in any file), and emission is canonical, so
// parse then emit is the identity on emitted files. Report emitters pair
// each payload with the tool version and the digest of the input fan.
#pragma once

#include "bound.hpp"
#include "brauer.hpp"
#include "cech.hpp"
#include "fan.hpp"
#include "strata.hpp"

#include <string>

namespace fanlab {

extern const char* const tool_version;

// Throws InvalidFanError: "schema error: <path> (...)" for shape problems,
// "ray N not primitive (use --normalize)" when normalize is off, and the
// joined build_fan diagnostics for geometric failures.
Fan parse_fan_json(const std::string& text, bool normalize);

std::string emit_fan_json(const Fan& f);

// FNV-1a 64 over the compact canonical fan JSON; 16 lowercase hex digits.
std::string fan_digest(const Fan& f);

std::string emit_report_json(const InvariantReport& rep, const std::string& digest);
std::string emit_report_text(const InvariantReport& rep);

std::string emit_brauer_json(const BrauerReport& rep, const std::string& digest);
std::string emit_brauer_text(const BrauerReport& rep);

std::string emit_bound_json(const BoundTrace& trace, const std::string& digest);
std::string emit_bound_text(const BoundTrace& trace);

std::string emit_strata_json(const StrataSample& sample, const std::string& digest);
std::string emit_strata_text(const StrataSample& sample);

std::string emit_conjecture_json(const Conjecture1Report& rep, const std::string& digest);
std::string emit_conjecture_text(const Conjecture1Report& rep);

// Field descriptor files for `brauer --field custom=<file>`: strict JSON
// {characteristic?, has_primitive_root?, h1_nu?, brauer_nu?} where each
// group is {free_rank?, torsion?}; torsion lists cyclic orders and is
// brought to invariant-factor form. Throws UsageError on schema problems.
FieldDescriptor parse_field_json(const std::string& text);

}  // namespace fanlab
