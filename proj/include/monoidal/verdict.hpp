#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "monoidal/lattice.hpp"

namespace monoidal {

enum class Status { Yes, No, Unknown };

std::string_view to_string(Status s);

/// Positive evidence: a stage and coordinates that one lattice call re-checks.
struct Witness {
  std::size_t stage = 0;
  IntVec coords;
  std::optional<ExponentVector> monomial;
  std::string detail;
};

enum class CertificateKind {
  Recurrence,        // state recurs at the same cycle position, zero increment
  AffineDrift,       // state moves by a fixed increment every period
  PolynomialGrowth,  // binomial expansion in the period count has a negative leading term
  SupportCycle,      // the coordinate support pattern recurs without the event happening
  Derived,           // follows from other certified verdicts (see detail)
};

std::string_view to_string(CertificateKind k);

/// Negative evidence. `state` is the coordinate vector at `stage` (cycle
/// position `cycle_position`); `increment` the per-period change.
struct Certificate {
  CertificateKind kind = CertificateKind::Derived;
  std::size_t stage = 0;
  std::size_t cycle_position = 0;
  std::size_t period = 0;
  IntVec state;
  IntVec increment;
  std::optional<std::size_t> coordinate;
  std::size_t degree = 0;
  std::string detail;
};

struct Verdict {
  Status status = Status::Unknown;
  std::optional<Witness> witness;
  std::optional<Certificate> certificate;
  std::optional<std::size_t> cutoff;
  std::string note;

  static Verdict yes(Witness w, std::string note = {});
  static Verdict no(Certificate c, std::string note = {});
  static Verdict unknown(std::size_t cutoff, std::string note = {});

  bool is_yes() const { return status == Status::Yes; }
  bool is_no() const { return status == Status::No; }
  bool is_unknown() const { return status == Status::Unknown; }
};

/// Search limits shared by every decision procedure.
struct Limits {
  std::size_t cutoff = 256;   // stage bound for iterative searches
  std::size_t periods = 3;    // periods used for window confirmations
};

}  // namespace monoidal
