#include "monoidal/fixtures.hpp"

namespace monoidal::fixtures {

namespace {

TransformProgram make(std::string name, std::vector<std::string> vars,
                      std::vector<TransformStep> cycle) {
  TransformProgram p;
  p.dimension = vars.size();
  p.variables = std::move(vars);
  p.cycle = std::move(cycle);
  p.name = std::move(name);
  return p;
}

}  // namespace

TransformProgram construction_3_4() {
  return make("construction-3-4", {"x", "y", "z"}, {{{0, 1}, 0}, {{1, 2}, 2}});
}

TransformProgram example_5_6() {
  return make("example-5-6", {"x", "y", "z"}, {{{0, 1}, 0}, {{1, 2}, 1}});
}

TransformProgram pure_quadratic() {
  return make("pure-quadratic", {"x", "y", "z"}, {{{0, 1, 2}, 0}});
}

TransformProgram quadratic_extended_d4() {
  return make("quadratic-extended-d4", {"x", "y", "z", "w"}, {{{0, 1}, 0}, {{1, 2}, 2}, {{1, 3}, 3}});
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"construction-3-4", "example-5-6", "pure-quadratic",
                                          "quadratic-extended-d4"};
  return n;
}

TransformProgram by_name(const std::string& name) {
  if (name == "construction-3-4") return construction_3_4();
  if (name == "example-5-6") return example_5_6();
  if (name == "pure-quadratic") return pure_quadratic();
  if (name == "quadratic-extended-d4") return quadratic_extended_d4();
  throw InputError("unknown fixture '" + name + "'");
}

}  // namespace monoidal::fixtures
