#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace monoidal {

using Integer = mpz_class;
using IntVec = std::vector<Integer>;

/// Raised for malformed input: dimension mismatches, violated preconditions,
/// unparsable program files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponents of a Laurent monomial in the ambient variables. Entries may be
/// negative.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t d) : entries_(d) {}
  explicit ExponentVector(IntVec entries) : entries_(std::move(entries)) {}
  ExponentVector(std::initializer_list<long> xs);

  static ExponentVector unit(std::size_t d, std::size_t i);

  std::size_t size() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer& operator[](std::size_t i) { return entries_[i]; }
  const IntVec& entries() const { return entries_; }

  bool is_zero() const;
  bool is_nonnegative() const;

  ExponentVector& operator+=(const ExponentVector& o);
  ExponentVector& operator-=(const ExponentVector& o);

  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  friend ExponentVector operator-(const ExponentVector& a);
  friend ExponentVector operator*(const Integer& k, const ExponentVector& a);
  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const ExponentVector& a, const ExponentVector& b);

  std::string to_string() const;

 private:
  IntVec entries_;
};

/// Coordinates of a monomial in the parameters of a fixed stage.
struct Coordinates {
  IntVec entries;
  std::size_t stage = 0;

  bool all_nonnegative() const;
  bool is_zero() const;
  Integer total() const;
};

/// Columns are the exponent vectors of a regular system of parameters.
/// Always unimodular.
class Frame {
 public:
  static Frame identity(std::size_t d);
  /// Throws InputError unless the columns are square and |det| = 1.
  static Frame from_columns(std::vector<ExponentVector> columns);

  std::size_t dimension() const { return cols_.size(); }
  const ExponentVector& column(std::size_t j) const { return cols_[j]; }
  const std::vector<ExponentVector>& columns() const { return cols_; }

  /// Frame · c.
  ExponentVector apply(const IntVec& c) const;
  Integer determinant() const;

  /// Monomial transform: every locus column except the divisor is divided by
  /// the divisor column. Indices are 0-based.
  Frame transformed(const std::vector<std::size_t>& locus, std::size_t divisor) const;

  friend bool operator==(const Frame& a, const Frame& b) { return a.cols_ == b.cols_; }

 private:
  explicit Frame(std::vector<ExponentVector> cols) : cols_(std::move(cols)) {}
  std::vector<ExponentVector> cols_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. `rows` is square.
Integer determinant(std::vector<IntVec> rows);

/// Unique integer solution of frame · c = w.
Coordinates coords(const Frame& frame, const ExponentVector& w, std::size_t stage = 0);
bool in_cone(const Frame& frame, const ExponentVector& w);

/// gcd / lcm of two stage-n monomials: componentwise min / max of coordinates.
ExponentVector stage_gcd(const Frame& frame, const ExponentVector& a, const ExponentVector& b);
ExponentVector stage_lcm(const Frame& frame, const ExponentVector& a, const ExponentVector& b);

// Small helpers over coordinate vectors.
bool all_nonnegative(const IntVec& v);
bool all_zero(const IntVec& v);
IntVec componentwise_min(const IntVec& a, const IntVec& b);
IntVec componentwise_max(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec subtract(const IntVec& a, const IntVec& b);
IntVec to_intvec(std::initializer_list<long> xs);
std::string to_string(const IntVec& v);

}  // namespace monoidal
