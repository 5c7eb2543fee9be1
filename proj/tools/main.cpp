// Command-line front end. Links the shared C API only; all mathematics
// stays behind the library boundary. Exit codes: 0 success, 1 invalid fan,
// 2 usage error, 3 hypothesis violation. Results go to stdout, every
// diagnostic to stderr.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fanlab/fanlab.h"

namespace {

struct Str {
    char* value = nullptr;

    Str() = default;
    Str(const Str&) = delete;
    Str& operator=(const Str&) = delete;
    ~Str() { fanlab_string_free(value); }
    const char* c_str() const { return value == nullptr ? "" : value; }
};

struct Handle {
    fanlab_fan* fan = nullptr;

    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() { fanlab_fan_free(fan); }
};

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    out = buffer.str();
    return true;
}

int report(fanlab_status status, const Str& error) {
    if (status != FANLAB_OK) std::cerr << error.c_str() << "\n";
    return static_cast<int>(status);
}

// loads the fan file; on failure prints the diagnostic and fills exit_code
bool load_fan(const std::string& path, bool normalize, Handle& handle, int& exit_code) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "cannot read file: " << path << "\n";
        exit_code = static_cast<int>(FANLAB_ERR_USAGE);
        return false;
    }
    Str error;
    const fanlab_status status =
        fanlab_fan_from_json(text.c_str(), text.size(), normalize ? 1 : 0, &handle.fan,
                             &error.value);
    if (status != FANLAB_OK) {
        exit_code = report(status, error);
        return false;
    }
    return true;
}

int emit(fanlab_status status, const Str& output, const Str& error) {
    if (status == FANLAB_OK) std::cout << output.c_str();
    return report(status, error);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of rational polyhedral fans"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(fanlab_version()));

    std::string file;
    bool normalize = false;
    bool as_json = false;

    auto add_fan_arg = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "fan file (JSON)")->required();
        cmd->add_flag("--normalize", normalize, "divide rays by their content first");
    };

    CLI::App* validate = app.add_subcommand("validate", "check a fan file");
    add_fan_arg(validate);

    CLI::App* invariants = app.add_subcommand("invariants", "full invariant report");
    add_fan_arg(invariants);
    invariants->add_flag("--json", as_json, "emit JSON instead of the table");

    std::string nu;
    std::string field;
    CLI::App* brauer = app.add_subcommand("brauer", "Brauer-group data over a ground field");
    add_fan_arg(brauer);
    brauer->add_option("--nu", nu, "torsion order (decimal, >= 2)")->required();
    brauer->add_option("--field", field, "acl, real, or custom=<descriptor file>")->required();
    brauer->add_flag("--json", as_json, "emit JSON instead of the table");

    bool exhaustive = false;
    CLI::App* bound = app.add_subcommand("bound", "greedy upper bound for kappa_0");
    add_fan_arg(bound);
    bound->add_flag("--exhaustive", exhaustive, "try every top-dimensional starting cone");
    bound->add_flag("--json", as_json, "emit JSON instead of the table");

    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string den = "8";
    std::string radius = "1/8";
    bool conjecture = false;
    CLI::App* strata = app.add_subcommand("strata", "sample the neighborhood strata");
    add_fan_arg(strata);
    strata->add_option("--samples", samples, "number of perturbations")->required();
    strata->add_option("--seed", seed, "PRNG seed (default 0)");
    strata->add_option("--den", den, "offset denominator bound (default 8)");
    strata->add_option("--radius", radius, "per-ray radius P/Q relative to max-norm");
    strata->add_flag("--conjecture", conjecture, "emit the completeness screening report");
    strata->add_flag("--json", as_json, "emit JSON instead of the table");

    CLI::App* fixtures = app.add_subcommand("fixtures", "built-in example fans");
    fixtures->require_subcommand(1);
    CLI::App* fixtures_list = fixtures->add_subcommand("list", "catalog of names");
    fixtures_list->add_flag("--json", as_json, "emit JSON instead of the table");
    std::string fixture_name;
    CLI::App* fixtures_emit = fixtures->add_subcommand("emit", "write one fan file to stdout");
    fixtures_emit->add_option("name", fixture_name, "fixture name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(FANLAB_ERR_USAGE);
    }

    int exit_code = 0;
    Handle fan;

    if (validate->parsed()) {
        if (!load_fan(file, normalize, fan, exit_code)) return exit_code;
        std::cout << "ok\n";
        return 0;
    }

    if (invariants->parsed()) {
        if (!load_fan(file, normalize, fan, exit_code)) return exit_code;
        Str out;
        Str err;
        return emit(fanlab_invariants(fan.fan, as_json ? 1 : 0, &out.value, &err.value), out,
                    err);
    }

    if (brauer->parsed()) {
        if (!load_fan(file, normalize, fan, exit_code)) return exit_code;
        std::string field_spec = field;
        if (field.rfind("custom=", 0) == 0) {
            const std::string path = field.substr(7);
            if (!read_file(path, field_spec)) {
                std::cerr << "cannot read file: " << path << "\n";
                return static_cast<int>(FANLAB_ERR_USAGE);
            }
        }
        Str out;
        Str err;
        return emit(fanlab_brauer(fan.fan, nu.c_str(), field_spec.c_str(), as_json ? 1 : 0,
                                  &out.value, &err.value),
                    out, err);
    }

    if (bound->parsed()) {
        if (!load_fan(file, normalize, fan, exit_code)) return exit_code;
        Str out;
        Str err;
        return emit(fanlab_bound(fan.fan, exhaustive ? 1 : 0, as_json ? 1 : 0, &out.value,
                                 &err.value),
                    out, err);
    }

    if (strata->parsed()) {
        if (!load_fan(file, normalize, fan, exit_code)) return exit_code;
        std::string radius_num = radius;
        std::string radius_den = "1";
        if (const std::size_t slash = radius.find('/'); slash != std::string::npos) {
            radius_num = radius.substr(0, slash);
            radius_den = radius.substr(slash + 1);
        }
        Str out;
        Str err;
        return emit(fanlab_strata(fan.fan, samples, seed, den.c_str(), radius_num.c_str(),
                                  radius_den.c_str(), conjecture ? 1 : 0, 0, as_json ? 1 : 0,
                                  &out.value, &err.value),
                    out, err);
    }

    if (fixtures_list->parsed()) {
        Str out;
        Str err;
        return emit(fanlab_fixture_list(as_json ? 1 : 0, &out.value, &err.value), out, err);
    }

    if (fixtures_emit->parsed()) {
        Str out;
        Str err;
        return emit(fanlab_fixture(fixture_name.c_str(), &out.value, &err.value), out, err);
    }

    return static_cast<int>(FANLAB_ERR_USAGE);
}
