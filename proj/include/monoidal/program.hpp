#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monoidal/lattice.hpp"

namespace monoidal {

/// One monomial local monoidal transform: blow up the prime generated by the
/// `locus` parameters and divide by the `divisor` parameter. Indices are
/// 0-based positions in the current frame.
struct TransformStep {
  std::vector<std::size_t> locus;
  std::size_t divisor = 0;

  friend bool operator==(const TransformStep&, const TransformStep&) = default;
};

/// Eventually periodic sequence of transforms: the prefix runs once, then the
/// cycle repeats forever.
struct TransformProgram {
  std::size_t dimension = 0;
  std::vector<std::string> variables;
  std::vector<TransformStep> prefix;
  std::vector<TransformStep> cycle;
  std::string name;

  std::size_t prefix_length() const { return prefix.size(); }
  std::size_t period() const { return cycle.size(); }
  /// Step applied to pass from stage n to stage n + 1.
  const TransformStep& step(std::size_t n) const;
  /// Cycle position of stage n (n >= prefix_length()).
  std::size_t position(std::size_t n) const { return (n - prefix.size()) % cycle.size(); }
  /// First stage at or after n that sits at cycle position 0.
  std::size_t boundary_at_or_after(std::size_t n) const;

  friend bool operator==(const TransformProgram& a, const TransformProgram& b) {
    return a.dimension == b.dimension && a.variables == b.variables && a.prefix == b.prefix &&
           a.cycle == b.cycle;
  }
};

struct Violation {
  std::string where;  // e.g. "cycle step 2"
  std::string message;
};

std::vector<Violation> validate(const TransformProgram& program);
/// Throws InputError listing every violation.
void require_valid(const TransformProgram& program);
bool step_valid(const TransformStep& step, std::size_t dimension);

struct StageView {
  std::size_t n = 0;
  Frame frame = Frame::identity(0);
  /// Generators of the locus ideal p_n and the divisor x_n, when the step
  /// leaving this stage is known.
  std::vector<ExponentVector> locus_monomials;
  std::optional<ExponentVector> divisor_monomial;
};

StageView initial_view(std::size_t dimension);
/// Advances one stage. The result carries no locus data until a step is
/// attached with `attach_step`.
StageView apply_step(const StageView& view, const TransformStep& step);
void attach_step(StageView& view, const TransformStep& step);
StageView expand(const TransformProgram& program, std::size_t n);
/// Frames for stages 0..n inclusive.
std::vector<Frame> expand_frames(const TransformProgram& program, std::size_t n);

/// Dual coordinate update for a tracked monomial: c_x += sum of c_j, j in L \ {x}.
void advance_coords(IntVec& c, const TransformStep& step);

/// Smallest locus size over all steps; the extension lies in M_i(R).
std::size_t classify_M_i(const TransformProgram& program);

/// ord_{R_n}(w): sum of stage-n coordinates.
Integer ord_n(const TransformProgram& program, std::size_t n, const ExponentVector& w);

/// Distinct divisor monomials over the prefix and one full cycle.
std::vector<ExponentVector> program_divisors(const TransformProgram& program);
/// Membership of w in R_0 with the program's divisor monomials inverted.
bool in_inverted_hull(const TransformProgram& program, const ExponentVector& w);

}  // namespace monoidal
