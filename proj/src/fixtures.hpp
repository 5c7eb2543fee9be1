// Built-in example fans, available to the CLI (`fixtures list/emit`) and
// reused heavily by the tests. Each is validated at construction.
#pragma once

#include "fan.hpp"

#include <string>
#include <vector>

namespace fanlab {

struct FixtureInfo {
    std::string name;
    std::string description;
};

const std::vector<FixtureInfo>& fixture_catalog();

bool has_fixture(const std::string& name);

// Returns the named built-in fan; throws std::out_of_range for unknown names.
const Fan& fixture(const std::string& name);

// Wheel fans: w+1 quadrilateral cones arranged around one shared central
// ray. Supported for w = 2, 3, 4; w = 2 coincides with the fig2a fixture.
Fan wheel_fan(std::size_t w);

}  // namespace fanlab
