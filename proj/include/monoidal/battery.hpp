#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monoidal/report.hpp"

namespace monoidal {

/// member_S statuses for every vector of a box [lo, hi]^d, for repeated
/// brute-force lookups. Vectors outside the box are decided directly.
class MembershipTable {
 public:
  MembershipTable(const CycleDynamics& dyn, long lo, long hi, const Limits& limits = {});
  Status status(const ExponentVector& w) const;
  Status divides(const ExponentVector& a, const ExponentVector& b) const { return status(b - a); }
  /// Fast path for small exponents; `w` must lie inside the box.
  Status status_in_box(const std::vector<long>& w) const;
  long lo() const { return lo_; }
  long hi() const { return hi_; }

 private:
  const CycleDynamics& dyn_;
  Limits limits_;
  long lo_, hi_;
  std::vector<std::int8_t> table_;
};

/// All vectors of [lo, hi]^d in lexicographic order.
std::vector<ExponentVector> box_vectors(std::size_t d, long lo, long hi);

struct OracleTally {
  std::size_t pairs = 0;
  std::size_t principal = 0;
  std::size_t not_finitely_generated = 0;
  std::size_t unknown = 0;
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::size_t undecided = 0;
};

/// For each pair from `monomials` decided Principal(g): every w in [-w_box, w_box]^d
/// is divisible by g exactly when it is divisible by both members of the pair.
OracleTally intersection_box_oracle(const CycleDynamics& dyn, const std::vector<ExponentVector>& monomials,
                                    long w_box, const Limits& limits = {});

struct HullTally {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::size_t unknown = 0;
};

/// member_S(w) against in_inverted_hull(w) together with membership in every
/// chain-prime localization, over [-box, box]^d.
HullTally hull_identity(const CycleDynamics& dyn, long box, const Limits& limits = {});

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FixtureRun {
  std::string fixture;
  std::vector<Check> checks;
  double elapsed_ms = 0;
  bool passed() const;
};

FixtureRun run_fixture(const std::string& name, const ClassifyOptions& options = {});
Json to_json(const FixtureRun& run);

}  // namespace monoidal
