#pragma once

#include <string>
#include <vector>

#include "monoidal/program.hpp"

namespace monoidal::fixtures {

/// d = 3: blow up (x, y) dividing by x, then (y', z) dividing by z, forever.
TransformProgram construction_3_4();
/// d = 3: cycle [({1,2}, 1), ({2,3}, 2)]; m_S = xS.
TransformProgram example_5_6();
/// d = 3: quadratic transforms dividing by x forever.
TransformProgram pure_quadratic();
/// d = 4: cycle [({1,2}, 1), ({2,3}, 3), ({2,4}, 4)].
TransformProgram quadratic_extended_d4();

const std::vector<std::string>& names();
/// Throws InputError for unknown names.
TransformProgram by_name(const std::string& name);

}  // namespace monoidal::fixtures
