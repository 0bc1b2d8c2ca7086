#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "monoidal/program.hpp"
#include "monoidal/verdict.hpp"

namespace monoidal {

/// Linear coordinate dynamics of a program. Each step acts on coordinates by a
/// nonnegative unimodular matrix; one full cycle acts by M. When M - I is
/// nilpotent (every shipped fixture) M^k c is a polynomial in k with exact
/// binomial expansion sum_j C(k, j) N^j c, N = M - I, which turns eventual
/// sign questions into leading-term questions.
class CycleDynamics {
 public:
  explicit CycleDynamics(TransformProgram program);

  const TransformProgram& program() const { return program_; }
  std::size_t dimension() const { return program_.dimension; }
  std::size_t prefix_length() const { return program_.prefix_length(); }
  std::size_t period() const { return program_.period(); }
  bool unipotent() const { return unipotent_; }

  /// Coordinates at stage `to` of the monomial whose stage-`from` coordinates are c.
  IntVec advance(IntVec c, std::size_t from, std::size_t to) const;
  /// M c, for coordinates taken at a cycle boundary.
  IntVec period_map(IntVec c) const;
  /// N^j c for j = 0, 1, ... up to the last nonzero term. Unipotent only.
  std::vector<IntVec> binomial_terms(const IntVec& c) const;
  /// sum_j C(k, j) terms[j] = M^k c.
  static IntVec evaluate(const std::vector<IntVec>& terms, const Integer& k);
  /// Highest j with terms[j][i] != 0, or -1 when the coordinate is identically zero.
  static long degree(const std::vector<IntVec>& terms, std::size_t i);

 private:
  TransformProgram program_;
  bool unipotent_ = false;
};

/// Scalar polynomial in the period count k, in the binomial basis:
/// p(k) = sum_j coeffs[j] * C(k, j).
struct BinomialPoly {
  std::vector<Integer> coeffs;

  long degree() const;
  /// Sign of p(k) for all large k.
  int eventual_sign() const;
  /// p(k) has its eventual sign for every k >= settle_bound().
  Integer settle_bound() const;
  Integer operator()(const Integer& k) const;
};

/// Coordinate i of a vector expansion as a scalar polynomial.
BinomialPoly coordinate_poly(const std::vector<IntVec>& terms, std::size_t i);

using Mask = std::vector<bool>;

/// Decides whether the coordinates c0 (given at stage 0) eventually become
/// nonnegative, on every coordinate or only on the masked ones. Masked
/// questions are only checked at cycle boundaries after the prefix, where the
/// mask is meaningful. Membership is monotone along the sequence, so a
/// negative leading term or a recurring negative state certifies No.
Verdict eventually_nonnegative(const CycleDynamics& dyn, const IntVec& c0, const Limits& limits,
                               const Mask* mask = nullptr);

using Support = std::uint64_t;
Support support_of(const IntVec& c);
/// Support after one step: the divisor coordinate switches on when any other
/// locus coordinate is positive.
Support advance_support(Support s, const TransformStep& step);
Support locus_mask(const TransformStep& step);

struct SupportHit {
  bool reached = false;
  std::size_t stage = 0;      // stage where the event occurred, or where the state recurred
  std::size_t first_seen = 0;  // for recurrences: earlier stage with the same state
  Support support = 0;
  Support other = 0;
};

/// Follows the support of a nonnegative coordinate vector from stage `start`
/// and reports the first stage n where `hits(n, support)` holds. Ends with
/// reached = false once the (position, support) state recurs.
SupportHit support_search(const CycleDynamics& dyn, Support s, std::size_t start,
                          const std::function<bool(std::size_t, Support)>& hits);

/// Same for a pair of supports; the event is that they intersect.
SupportHit support_pair_search(const CycleDynamics& dyn, Support a, Support b, std::size_t start);

}  // namespace monoidal
