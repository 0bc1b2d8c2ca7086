#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monoidal/dynamics.hpp"

namespace monoidal {

/// w lies in S = union of the R_n.
Verdict member_S(const CycleDynamics& dyn, const ExponentVector& w, const Limits& limits = {});
/// a divides b in S.
Verdict divides_S(const CycleDynamics& dyn, const ExponentVector& a, const ExponentVector& b,
                  const Limits& limits = {});

/// Common monomial that moves every vector into the base cone:
/// shift_i = max(0, -v_i) over all inputs.
ExponentVector normalizing_shift(const std::vector<ExponentVector>& vs);

enum class TraceStatus { Stabilized, Diverges, Unknown };
std::string_view to_string(TraceStatus s);

struct TraceEntry {
  std::size_t stage = 0;
  IntVec gcd;         // d_n in stage-n coordinates
  IntVec residual_a;  // a / d_n
  IntVec residual_b;  // b / d_n
};

/// Per-stage gcd of a pair. The pair is first multiplied by `shift` so both
/// lie in R_0; `gcd` is reported for the original pair.
struct GcdTrace {
  ExponentVector a;
  ExponentVector b;
  ExponentVector shift;
  std::vector<TraceEntry> entries;
  TraceStatus status = TraceStatus::Unknown;
  std::size_t stable_stage = 0;  // last stage where d_n changed, when Stabilized
  std::optional<Certificate> certificate;
  std::size_t cutoff = 0;
  ExponentVector gcd;  // d at the last recorded stage, as a monomial of the original pair
};

GcdTrace gcd_trace(const CycleDynamics& dyn, const ExponentVector& a, const ExponentVector& b,
                   const Limits& limits = {});

/// Whether some residual ideal J_n = (a/d_n, b/d_n) is primitive. Recomputes
/// residuals from fresh stage coordinates, independently of gcd_trace.
Verdict primitive_residual(const CycleDynamics& dyn, const ExponentVector& a, const ExponentVector& b,
                           const Limits& limits = {});

struct Intersection {
  enum class Kind { Principal, NotFinitelyGenerated, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<ExponentVector> generator;
  std::optional<GcdTrace> diverging;  // certificate for NotFinitelyGenerated
  std::size_t cutoff = 0;
  std::string note;
};

std::string_view to_string(Intersection::Kind k);

/// Intersection of the principal ideals a_i S.
Intersection intersect_principal(const CycleDynamics& dyn, const std::vector<ExponentVector>& as,
                                 const Limits& limits = {});

}  // namespace monoidal
