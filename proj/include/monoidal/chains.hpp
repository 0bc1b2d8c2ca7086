#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monoidal/union.hpp"

namespace monoidal {

/// Union of an ascending family of locus ideals p_{n_i}, equal to the union
/// of the principal ideals x_{n_i} S. For periodic programs the family is
/// given by cycle positions: n_i runs over prefix + q + k * period.
struct ChainPrime {
  std::string label;
  std::vector<std::size_t> positions;
  std::size_t prefix = 0;
  std::size_t period = 1;
  std::vector<std::size_t> stages;               // recorded n_i, ascending
  std::vector<ExponentVector> divisor_monomials;  // x_{n_i}
  std::vector<std::vector<ExponentVector>> loci;  // generators of p_{n_i}

  bool is_chain_stage(std::size_t n) const;
  /// First chain stage at or after n.
  std::size_t next_chain_stage(std::size_t n) const;
};

struct ChainReport {
  std::vector<ChainPrime> chains;
  std::vector<std::size_t> chain_of_position;  // index into chains, or npos when unabsorbed
  std::vector<bool> ascending;                 // position's own loci ascend over the window
  std::vector<std::size_t> unabsorbed;         // positions not accounted for by any chain
  std::size_t periods = 0;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Monomial-ideal containment at a fixed stage: every generator g of the
/// smaller ideal has coords(g - h) >= 0 for some generator h of the larger.
bool ideal_contained(const Frame& frame, const std::vector<ExponentVector>& smaller,
                     const std::vector<ExponentVector>& larger);

ChainReport detect_chains(const CycleDynamics& dyn, std::size_t periods = 3);

/// Ideals of S that chain questions are asked about.
struct Ideal {
  enum class Kind { Zero, Principal, PowerIntersection, Chain, Maximal };
  Kind kind = Kind::Zero;
  ExponentVector generator;  // Principal, PowerIntersection
  ChainPrime chain;          // Chain
  std::string label;

  static Ideal zero();
  static Ideal principal(ExponentVector t);
  /// The intersection of the powers t^n S.
  static Ideal power_intersection(ExponentVector t);
  static Ideal of_chain(ChainPrime q);
  static Ideal maximal();
};

std::string describe(const Ideal& I);

Verdict ideal_member(const CycleDynamics& dyn, const Ideal& I, const ExponentVector& w,
                     const Limits& limits = {});
Verdict chainprime_member(const CycleDynamics& dyn, const ChainPrime& Q, const ExponentVector& w,
                          const Limits& limits = {});

/// Whether every parameter of R_{n_i} lies in Q for infinitely many chain stages.
Verdict chainprime_maximal(const CycleDynamics& dyn, const ChainPrime& Q, const Limits& limits = {});

struct ChainCount {
  Verdict verdict;
  std::size_t count = 0;
  ChainReport report;
};

ChainCount finitely_many_chains(const CycleDynamics& dyn, std::size_t periods = 3);

/// One entry of a claimed strictly ascending chain of primes, with an element
/// of the ideal that lies outside the previous entry.
struct ChainLink {
  Ideal ideal;
  ExponentVector witness;
};

struct PrimeChainCheck {
  Verdict verdict;
  std::size_t height_bound = 0;
  std::vector<std::string> steps;
};

PrimeChainCheck verify_prime_chain(const CycleDynamics& dyn, const std::vector<ChainLink>& links,
                                   const Limits& limits = {});

struct QuadraticCheck {
  Verdict verdict;
  std::vector<Status> position_inside;  // per cycle position: loci persistently inside Q
};

/// Yes when no cycle position has its loci inside Q; No when some position's
/// loci lie in Q in every checked period.
QuadraticCheck quadratic_test(const CycleDynamics& dyn, const Ideal& Q, const Limits& limits = {});

/// Whether the maximal ideal of S is a chain-prime.
Verdict sbid_check(const CycleDynamics& dyn, const Limits& limits = {});

}  // namespace monoidal
