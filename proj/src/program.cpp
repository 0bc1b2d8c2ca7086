#include "monoidal/program.hpp"

#include <algorithm>
#include <set>

namespace monoidal {

const TransformStep& TransformProgram::step(std::size_t n) const {
  if (n < prefix.size()) return prefix[n];
  return cycle[position(n)];
}

std::size_t TransformProgram::boundary_at_or_after(std::size_t n) const {
  if (n <= prefix.size()) return prefix.size();
  std::size_t pos = position(n);
  return pos == 0 ? n : n + (cycle.size() - pos);
}

bool step_valid(const TransformStep& step, std::size_t dimension) {
  if (step.locus.size() < 2) return false;
  std::set<std::size_t> seen;
  for (std::size_t j : step.locus) {
    if (j >= dimension || !seen.insert(j).second) return false;
  }
  return seen.count(step.divisor) == 1;
}

namespace {

void check_step(const TransformStep& s, std::size_t d, const std::string& where,
                std::vector<Violation>& out) {
  if (s.locus.size() < 2) out.push_back({where, "locus must have size >= 2"});
  std::set<std::size_t> seen;
  for (std::size_t j : s.locus) {
    if (j >= d) out.push_back({where, "locus index " + std::to_string(j + 1) + " out of range"});
    if (!seen.insert(j).second) out.push_back({where, "locus index " + std::to_string(j + 1) + " repeated"});
  }
  if (s.divisor >= d) {
    out.push_back({where, "divisor index " + std::to_string(s.divisor + 1) + " out of range"});
  } else if (!seen.count(s.divisor)) {
    out.push_back({where, "divisor must belong to locus"});
  }
}

}  // namespace

std::vector<Violation> validate(const TransformProgram& program) {
  std::vector<Violation> out;
  const std::size_t d = program.dimension;
  if (d < 2) out.push_back({"program", "dimension must be >= 2"});
  if (!program.variables.empty() && program.variables.size() != d) {
    out.push_back({"program", "expected " + std::to_string(d) + " variable names"});
  }
  if (program.cycle.empty()) out.push_back({"program", "cycle must be nonempty"});
  for (std::size_t i = 0; i < program.prefix.size(); ++i)
    check_step(program.prefix[i], d, "prefix step " + std::to_string(i + 1), out);
  for (std::size_t i = 0; i < program.cycle.size(); ++i)
    check_step(program.cycle[i], d, "cycle step " + std::to_string(i + 1), out);
  return out;
}

void require_valid(const TransformProgram& program) {
  auto v = validate(program);
  if (v.empty()) return;
  std::string msg = "invalid program:";
  for (const auto& x : v) msg += " [" + x.where + ": " + x.message + "]";
  throw InputError(msg);
}

StageView initial_view(std::size_t dimension) {
  StageView v;
  v.frame = Frame::identity(dimension);
  return v;
}

StageView apply_step(const StageView& view, const TransformStep& step) {
  if (!step_valid(step, view.frame.dimension())) throw InputError("invalid transform step");
  StageView next;
  next.n = view.n + 1;
  next.frame = view.frame.transformed(step.locus, step.divisor);
  return next;
}

void attach_step(StageView& view, const TransformStep& step) {
  view.locus_monomials.clear();
  for (std::size_t j : step.locus) view.locus_monomials.push_back(view.frame.column(j));
  view.divisor_monomial = view.frame.column(step.divisor);
}

StageView expand(const TransformProgram& program, std::size_t n) {
  require_valid(program);
  StageView v = initial_view(program.dimension);
  for (std::size_t s = 0; s < n; ++s) v = apply_step(v, program.step(s));
  attach_step(v, program.step(n));
  return v;
}

std::vector<Frame> expand_frames(const TransformProgram& program, std::size_t n) {
  require_valid(program);
  std::vector<Frame> frames;
  frames.reserve(n + 1);
  frames.push_back(Frame::identity(program.dimension));
  for (std::size_t s = 0; s < n; ++s) {
    const auto& st = program.step(s);
    frames.push_back(frames.back().transformed(st.locus, st.divisor));
  }
  return frames;
}

void advance_coords(IntVec& c, const TransformStep& step) {
  for (std::size_t j : step.locus) {
    if (j != step.divisor) c[step.divisor] += c[j];
  }
}

std::size_t classify_M_i(const TransformProgram& program) {
  require_valid(program);
  std::size_t m = program.dimension;
  for (const auto& s : program.prefix) m = std::min(m, s.locus.size());
  for (const auto& s : program.cycle) m = std::min(m, s.locus.size());
  return m;
}

Integer ord_n(const TransformProgram& program, std::size_t n, const ExponentVector& w) {
  if (w.size() != program.dimension) throw InputError("monomial has wrong length");
  IntVec c = w.entries();
  for (std::size_t s = 0; s < n; ++s) advance_coords(c, program.step(s));
  Integer total = 0;
  for (const auto& x : c) total += x;
  return total;
}

std::vector<ExponentVector> program_divisors(const TransformProgram& program) {
  require_valid(program);
  std::vector<ExponentVector> out;
  StageView v = initial_view(program.dimension);
  const std::size_t stages = program.prefix_length() + program.period();
  for (std::size_t s = 0; s < stages; ++s) {
    const auto& st = program.step(s);
    const ExponentVector& x = v.frame.column(st.divisor);
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    v = apply_step(v, st);
  }
  return out;
}

bool in_inverted_hull(const TransformProgram& program, const ExponentVector& w) {
  if (w.size() != program.dimension) throw InputError("monomial has wrong length");
  ExponentVector sum(program.dimension);
  for (const auto& x : program_divisors(program)) sum += x;
  // Need k >= 0 with w + k*sum >= 0 componentwise.
  Integer k = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (sgn(w[i]) >= 0) continue;
    if (sgn(sum[i]) <= 0) return false;
    Integer need = (-w[i] + sum[i] - 1) / sum[i];
    if (need > k) k = need;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (sgn(w[i] + k * sum[i]) < 0) return false;
  }
  return true;
}

}  // namespace monoidal
