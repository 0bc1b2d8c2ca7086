#include "monoidal/union.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

namespace monoidal {

namespace {

std::size_t state_key(const TransformProgram& p, std::size_t n) {
  return n < p.prefix_length() ? n : p.prefix_length() + p.position(n);
}

IntVec concat(const IntVec& a, const IntVec& b) {
  IntVec out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::size_t lowest_bit(Support s) {
  std::size_t i = 0;
  while (!(s & (Support{1} << i))) ++i;
  return i;
}

void check_dimension(const CycleDynamics& dyn, const ExponentVector& w) {
  if (w.size() != dyn.dimension()) {
    throw InputError("monomial of length " + std::to_string(w.size()) + " in a program of dimension " +
                     std::to_string(dyn.dimension()));
  }
}

// One period of the residual map from boundary stage n, applied to the pair
// R = (ra, rb) and to a drift direction D. Each step advances both residuals
// and removes their componentwise minimum. When every minimum selects
// consistently along R + tD for all t >= 0, the map is affine on that ray:
// F(R + tD) = F(R) + t D'. Returns D' and the gcd added along R, or nothing
// when some selection could flip.
struct RayImage {
  IntVec da, db;
  bool gcd_grows = false;
};

std::optional<RayImage> period_on_ray(const TransformProgram& p, std::size_t n, IntVec ra, IntVec rb,
                                      IntVec da, IntVec db) {
  RayImage out;
  for (std::size_t s = n; s < n + p.period(); ++s) {
    const TransformStep& st = p.step(s);
    advance_coords(ra, st);
    advance_coords(rb, st);
    advance_coords(da, st);
    advance_coords(db, st);
    for (std::size_t i = 0; i < ra.size(); ++i) {
      Integer g, dg;
      if (ra[i] < rb[i]) {
        if (da[i] > db[i]) return std::nullopt;
        g = ra[i];
        dg = da[i];
      } else if (rb[i] < ra[i]) {
        if (db[i] > da[i]) return std::nullopt;
        g = rb[i];
        dg = db[i];
      } else {
        g = ra[i];
        dg = da[i] < db[i] ? da[i] : db[i];
      }
      if (sgn(g) > 0) out.gcd_grows = true;
      ra[i] -= g;
      rb[i] -= g;
      da[i] -= dg;
      db[i] -= dg;
    }
  }
  out.da = std::move(da);
  out.db = std::move(db);
  return out;
}

// Residual pairs at consecutive boundaries n - P and n differ by a drift that
// the period map reproduces along the whole ray, with gcd growth every period.
bool drifts_forever(const TransformProgram& p, std::size_t n_prev, const IntVec& ra_prev, const IntVec& rb_prev,
                    const IntVec& ra, const IntVec& rb) {
  IntVec da = subtract(ra, ra_prev), db = subtract(rb, rb_prev);
  if (all_zero(da) && all_zero(db)) return false;
  auto img = period_on_ray(p, n_prev, ra_prev, rb_prev, da, db);
  return img && img->gcd_grows && img->da == da && img->db == db;
}

}  // namespace

Verdict member_S(const CycleDynamics& dyn, const ExponentVector& w, const Limits& limits) {
  check_dimension(dyn, w);
  Verdict v = eventually_nonnegative(dyn, w.entries(), limits);
  if (v.witness) v.witness->monomial = w;
  return v;
}

Verdict divides_S(const CycleDynamics& dyn, const ExponentVector& a, const ExponentVector& b,
                  const Limits& limits) {
  check_dimension(dyn, a);
  check_dimension(dyn, b);
  return member_S(dyn, b - a, limits);
}

ExponentVector normalizing_shift(const std::vector<ExponentVector>& vs) {
  if (vs.empty()) return {};
  ExponentVector m(vs.front().size());
  for (const auto& v : vs) {
    if (v.size() != m.size()) throw InputError("monomials of different lengths");
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (-v[i] > m[i]) m[i] = -v[i];
    }
  }
  return m;
}

std::string_view to_string(TraceStatus s) {
  switch (s) {
    case TraceStatus::Stabilized: return "stabilized";
    case TraceStatus::Diverges: return "diverges";
    case TraceStatus::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(Intersection::Kind k) {
  switch (k) {
    case Intersection::Kind::Principal: return "principal";
    case Intersection::Kind::NotFinitelyGenerated: return "not-finitely-generated";
    case Intersection::Kind::Unknown: return "unknown";
  }
  return "unknown";
}

GcdTrace gcd_trace(const CycleDynamics& dyn, const ExponentVector& a, const ExponentVector& b,
                   const Limits& limits) {
  check_dimension(dyn, a);
  check_dimension(dyn, b);
  const TransformProgram& p = dyn.program();
  GcdTrace tr;
  tr.a = a;
  tr.b = b;
  tr.shift = normalizing_shift({a, b});
  tr.cutoff = limits.cutoff;

  Frame frame = Frame::identity(dyn.dimension());
  IntVec ca = (a + tr.shift).entries();
  IntVec cb = (b + tr.shift).entries();
  IntVec d = componentwise_min(ca, cb);
  IntVec ra = subtract(ca, d);
  IntVec rb = subtract(cb, d);
  ExponentVector gmon = frame.apply(d);
  tr.entries.push_back({0, d, ra, rb});

  std::map<std::tuple<std::size_t, IntVec, IntVec>, std::pair<std::size_t, IntVec>> seen;
  std::optional<TraceEntry> last_boundary;
  for (std::size_t n = 0;; ++n) {
    SupportHit hit = support_pair_search(dyn, support_of(ra), support_of(rb), n);
    if (!hit.reached) {
      tr.status = TraceStatus::Stabilized;
      Certificate cert;
      cert.kind = CertificateKind::SupportCycle;
      cert.stage = n;
      cert.cycle_position = n < p.prefix_length() ? 0 : p.position(n);
      cert.period = hit.stage - hit.first_seen;
      cert.state = concat(ra, rb);
      cert.increment = IntVec(dyn.dimension());
      cert.detail = "residual supports stay disjoint; support state recurs at stage " +
                    std::to_string(hit.stage);
      tr.certificate = std::move(cert);
      break;
    }
    if (n >= p.prefix_length()) {
      auto key = std::make_tuple(state_key(p, n), ra, rb);
      auto it = seen.find(key);
      if (it != seen.end()) {
        const auto& [n0, d0] = it->second;
        Certificate cert;
        cert.kind = CertificateKind::AffineDrift;
        cert.stage = n0;
        cert.cycle_position = p.position(n0);
        cert.period = n - n0;
        cert.state = concat(ra, rb);
        cert.increment = subtract(d, dyn.advance(d0, n0, n));
        cert.detail = "residual pair recurs with nonzero gcd increment";
        tr.status = TraceStatus::Diverges;
        tr.certificate = std::move(cert);
        break;
      }
      seen.emplace(std::move(key), std::make_pair(n, d));
      if (p.position(n) == 0) {
        if (last_boundary &&
            drifts_forever(p, last_boundary->stage, last_boundary->residual_a, last_boundary->residual_b, ra, rb)) {
          Certificate cert;
          cert.kind = CertificateKind::AffineDrift;
          cert.stage = last_boundary->stage;
          cert.cycle_position = 0;
          cert.period = p.period();
          cert.state = concat(last_boundary->residual_a, last_boundary->residual_b);
          cert.increment = subtract(concat(ra, rb), cert.state);
          cert.detail = "residual pair drifts affinely and the gcd grows every period";
          tr.status = TraceStatus::Diverges;
          tr.certificate = std::move(cert);
          break;
        }
        last_boundary = TraceEntry{n, d, ra, rb};
      }
    }
    if (n >= limits.cutoff) break;

    const TransformStep& st = p.step(n);
    advance_coords(ra, st);
    advance_coords(rb, st);
    advance_coords(d, st);
    frame = frame.transformed(st.locus, st.divisor);
    IntVec g = componentwise_min(ra, rb);
    if (!all_zero(g)) {
      d = add(d, g);
      ra = subtract(ra, g);
      rb = subtract(rb, g);
      gmon += frame.apply(g);
      tr.stable_stage = n + 1;
    }
    tr.entries.push_back({n + 1, d, ra, rb});
  }
  tr.gcd = gmon - tr.shift;
  return tr;
}

Verdict primitive_residual(const CycleDynamics& dyn, const ExponentVector& a, const ExponentVector& b,
                           const Limits& limits) {
  check_dimension(dyn, a);
  check_dimension(dyn, b);
  const TransformProgram& p = dyn.program();
  const ExponentVector m = normalizing_shift({a, b});
  const ExponentVector as = a + m;
  const ExponentVector bs = b + m;

  Frame frame = Frame::identity(dyn.dimension());
  std::map<std::tuple<std::size_t, IntVec, IntVec>, std::size_t> seen;
  std::optional<std::pair<IntVec, IntVec>> last_boundary;
  for (std::size_t n = 0; n <= limits.cutoff; ++n) {
    IntVec ca = coords(frame, as, n).entries;
    IntVec cb = coords(frame, bs, n).entries;
    IntVec dmin = componentwise_min(ca, cb);
    IntVec ra = subtract(ca, dmin);
    IntVec rb = subtract(cb, dmin);
    if (all_zero(ra) || all_zero(rb)) {
      return Verdict::yes({n, concat(ra, rb), std::nullopt, "unit residual"});
    }
    SupportHit hit = support_pair_search(dyn, support_of(ra), support_of(rb), n);
    if (!hit.reached) {
      return Verdict::yes({n, concat(ra, rb), std::nullopt, "residual supports never meet"});
    }
    if (n >= p.prefix_length()) {
      auto key = std::make_tuple(state_key(p, n), ra, rb);
      auto it = seen.find(key);
      if (it != seen.end()) {
        Certificate cert;
        cert.kind = CertificateKind::Recurrence;
        cert.stage = it->second;
        cert.cycle_position = p.position(n);
        cert.period = n - it->second;
        cert.state = concat(ra, rb);
        cert.increment = IntVec(2 * dyn.dimension());
        std::size_t j = lowest_bit(hit.support & hit.other);
        cert.coordinate = j;
        cert.detail = "parameter " + std::to_string(j + 1) + " of stage " + std::to_string(hit.stage) +
                      " divides both residuals; the residual pair recurs";
        return Verdict::no(std::move(cert));
      }
      seen.emplace(std::move(key), n);
      if (p.position(n) == 0) {
        if (last_boundary && drifts_forever(p, n - p.period(), last_boundary->first, last_boundary->second, ra, rb)) {
          Certificate cert;
          cert.kind = CertificateKind::AffineDrift;
          cert.stage = n - p.period();
          cert.cycle_position = 0;
          cert.period = p.period();
          cert.state = concat(last_boundary->first, last_boundary->second);
          cert.increment = subtract(concat(ra, rb), cert.state);
          std::size_t j = lowest_bit(hit.support & hit.other);
          cert.coordinate = j;
          cert.detail = "parameter " + std::to_string(j + 1) + " of stage " + std::to_string(hit.stage) +
                        " divides both residuals; the residual pair drifts and meets again every period";
          return Verdict::no(std::move(cert));
        }
        last_boundary = std::make_pair(ra, rb);
      }
    }
    const TransformStep& st = p.step(n);
    frame = frame.transformed(st.locus, st.divisor);
  }
  return Verdict::unknown(limits.cutoff);
}

Intersection intersect_principal(const CycleDynamics& dyn, const std::vector<ExponentVector>& as,
                                 const Limits& limits) {
  if (as.empty()) throw InputError("intersection of an empty family");
  for (const auto& a : as) check_dimension(dyn, a);
  Intersection out;
  out.cutoff = limits.cutoff;
  if (as.size() == 1) {
    out.kind = Intersection::Kind::Principal;
    out.generator = as.front();
    return out;
  }
  bool all_stable = true;
  for (std::size_t i = 0; i < as.size(); ++i) {
    for (std::size_t j = i + 1; j < as.size(); ++j) {
      GcdTrace tr = gcd_trace(dyn, as[i], as[j], limits);
      if (tr.status == TraceStatus::Diverges) {
        out.kind = Intersection::Kind::NotFinitelyGenerated;
        out.note = "gcd of pair " + std::to_string(i + 1) + "," + std::to_string(j + 1) + " diverges";
        out.diverging = std::move(tr);
        return out;
      }
      all_stable = all_stable && tr.status == TraceStatus::Stabilized;
    }
  }
  if (!all_stable) {
    out.note = "a pairwise gcd trace reached the cutoff";
    return out;
  }
  // lcm(g, a) = g * a / gcd(g, a); g generates the intersection of the ideals so far.
  ExponentVector g = as.front();
  for (std::size_t i = 1; i < as.size(); ++i) {
    GcdTrace tr = gcd_trace(dyn, g, as[i], limits);
    if (tr.status == TraceStatus::Diverges) {
      out.kind = Intersection::Kind::NotFinitelyGenerated;
      out.note = "gcd of the partial lcm with monomial " + std::to_string(i + 1) + " diverges";
      out.diverging = std::move(tr);
      return out;
    }
    if (tr.status != TraceStatus::Stabilized) {
      out.note = "partial lcm trace reached the cutoff";
      return out;
    }
    g = g + as[i] - tr.gcd;
  }
  out.kind = Intersection::Kind::Principal;
  out.generator = g;
  return out;
}

}  // namespace monoidal
