#include "monoidal/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace monoidal {

ExponentVector::ExponentVector(std::initializer_list<long> xs) {
  entries_.reserve(xs.size());
  for (long x : xs) entries_.emplace_back(x);
}

ExponentVector ExponentVector::unit(std::size_t d, std::size_t i) {
  ExponentVector e(d);
  e[i] = 1;
  return e;
}

bool ExponentVector::is_zero() const { return all_zero(entries_); }
bool ExponentVector::is_nonnegative() const { return all_nonnegative(entries_); }

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
  if (o.size() != size()) throw InputError("exponent vectors of different lengths");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& o) {
  if (o.size() != size()) throw InputError("exponent vectors of different lengths");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

ExponentVector operator-(const ExponentVector& a) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

ExponentVector operator*(const Integer& k, const ExponentVector& a) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

bool operator<(const ExponentVector& a, const ExponentVector& b) {
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                      b.entries_.end());
}

std::string ExponentVector::to_string() const { return monoidal::to_string(entries_); }

bool Coordinates::all_nonnegative() const { return monoidal::all_nonnegative(entries); }
bool Coordinates::is_zero() const { return all_zero(entries); }

Integer Coordinates::total() const {
  Integer s = 0;
  for (const auto& e : entries) s += e;
  return s;
}

Frame Frame::identity(std::size_t d) {
  std::vector<ExponentVector> cols;
  cols.reserve(d);
  for (std::size_t j = 0; j < d; ++j) cols.push_back(ExponentVector::unit(d, j));
  return Frame(std::move(cols));
}

Frame Frame::from_columns(std::vector<ExponentVector> columns) {
  const std::size_t d = columns.size();
  for (const auto& c : columns) {
    if (c.size() != d) throw InputError("frame must be square");
  }
  Frame f(std::move(columns));
  Integer det = f.determinant();
  if (det != 1 && det != -1) throw InputError("frame is not unimodular (det = " + det.get_str() + ")");
  return f;
}

ExponentVector Frame::apply(const IntVec& c) const {
  const std::size_t d = dimension();
  if (c.size() != d) throw InputError("coordinate length does not match frame dimension");
  ExponentVector w(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (c[j] == 0) continue;
    for (std::size_t i = 0; i < d; ++i) w[i] += cols_[j][i] * c[j];
  }
  return w;
}

Integer Frame::determinant() const {
  const std::size_t d = dimension();
  std::vector<IntVec> rows(d, IntVec(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) rows[i][j] = cols_[j][i];
  return monoidal::determinant(std::move(rows));
}

Frame Frame::transformed(const std::vector<std::size_t>& locus, std::size_t divisor) const {
  std::vector<ExponentVector> cols = cols_;
  for (std::size_t j : locus) {
    if (j != divisor) cols[j] -= cols_[divisor];
  }
  return Frame(std::move(cols));
}

Integer determinant(std::vector<IntVec> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& r : a) {
    if (r.size() != n) throw InputError("determinant of a non-square matrix");
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Coordinates coords(const Frame& frame, const ExponentVector& w, std::size_t stage) {
  const std::size_t d = frame.dimension();
  if (w.size() != d) {
    throw InputError("vector of length " + std::to_string(w.size()) + " against frame of dimension " +
                     std::to_string(d));
  }
  // Gaussian elimination over Q on [F | w]; unimodularity makes the answer integral.
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = frame.column(j)[i];
    m[i][d] = w[i];
  }
  for (std::size_t k = 0; k < d; ++k) {
    std::size_t p = k;
    while (p < d && m[p][k] == 0) ++p;
    if (p == d) throw InputError("singular frame");
    std::swap(m[k], m[p]);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == k || m[i][k] == 0) continue;
      mpq_class f = m[i][k] / m[k][k];
      for (std::size_t j = k; j <= d; ++j) m[i][j] -= f * m[k][j];
    }
  }
  Coordinates c;
  c.stage = stage;
  c.entries.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    mpq_class v = m[i][d] / m[i][i];
    v.canonicalize();
    if (v.get_den() != 1) throw InputError("non-integral coordinates: frame is not unimodular");
    c.entries[i] = v.get_num();
  }
  return c;
}

bool in_cone(const Frame& frame, const ExponentVector& w) { return coords(frame, w).all_nonnegative(); }

namespace {

std::pair<IntVec, IntVec> cone_coords(const Frame& frame, const ExponentVector& a, const ExponentVector& b) {
  auto ca = coords(frame, a).entries;
  auto cb = coords(frame, b).entries;
  if (!all_nonnegative(ca) || !all_nonnegative(cb)) {
    throw InputError("stage gcd/lcm requires both monomials in the stage ring");
  }
  return {std::move(ca), std::move(cb)};
}

}  // namespace

ExponentVector stage_gcd(const Frame& frame, const ExponentVector& a, const ExponentVector& b) {
  auto [ca, cb] = cone_coords(frame, a, b);
  return frame.apply(componentwise_min(ca, cb));
}

ExponentVector stage_lcm(const Frame& frame, const ExponentVector& a, const ExponentVector& b) {
  auto [ca, cb] = cone_coords(frame, a, b);
  return frame.apply(componentwise_max(ca, cb));
}

bool all_nonnegative(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) >= 0; });
}

bool all_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntVec componentwise_min(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
  return r;
}

IntVec componentwise_max(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? b[i] : a[i];
  return r;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec subtract(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec to_intvec(std::initializer_list<long> xs) {
  IntVec r;
  r.reserve(xs.size());
  for (long x : xs) r.emplace_back(x);
  return r;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

}  // namespace monoidal
