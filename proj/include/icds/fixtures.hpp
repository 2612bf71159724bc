#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "icds/structure.hpp"

namespace icds::fixtures {

// Four coats: two blue single-breasted, one grey double-breasted, one grey
// single-breasted. A fair coin picks the colour; the coat within a colour
// is chosen by an unknown procedure. Propositions: g (grey), d
// (double-breasted).

// Worlds s1..s4 (s1, s2 blue; s3 grey single; s4 grey double), chi generated
// by {s1,s2} and {s3,s4} at 1/2 each.
ProbabilityStructure coats_ds();

// Worlds w1 (blue) and w2 (grey) at 1/2 each; psi has basis ~g&~d, g,
// ~g&d.
ProbabilityStructure coats_ic();

// Names accepted by example_by_name(), in listing order.
const std::vector<std::string>& example_names();

// Throws icds::Error listing the valid names.
ProbabilityStructure example_by_name(std::string_view name);

}  // namespace icds::fixtures
