// Error categories that cross the library boundary. Invalid input fans are
// reported through BuildResult instead; these exceptions cover the two
// remaining classes: operations invoked outside their mathematical scope
// and malformed requests.
#pragma once

#include <stdexcept>
#include <string>

namespace fanlab {

// A mathematical hypothesis of the requested computation fails (e.g. a
// Brauer group request on a fan with singular cones).
struct HypothesisError : std::runtime_error {
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

// The request itself is malformed (bad parameter combination).
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// A fan file (or inline fan description) does not describe a valid fan:
// schema violations, non-primitive rays without the normalize option, or
// any build_fan failure surfaced through a parsing entry point.
struct InvalidFanError : std::runtime_error {
    explicit InvalidFanError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fanlab
