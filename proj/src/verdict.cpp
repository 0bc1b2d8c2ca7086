#include "monoidal/verdict.hpp"

#include <utility>

namespace monoidal {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Yes: return "yes";
    case Status::No: return "no";
    case Status::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::Recurrence: return "recurrence";
    case CertificateKind::AffineDrift: return "affine-drift";
    case CertificateKind::PolynomialGrowth: return "polynomial-growth";
    case CertificateKind::SupportCycle: return "support-cycle";
    case CertificateKind::Derived: return "derived";
  }
  return "derived";
}

Verdict Verdict::yes(Witness w, std::string note) {
  Verdict v;
  v.status = Status::Yes;
  v.witness = std::move(w);
  v.note = std::move(note);
  return v;
}

Verdict Verdict::no(Certificate c, std::string note) {
  Verdict v;
  v.status = Status::No;
  v.certificate = std::move(c);
  v.note = std::move(note);
  return v;
}

Verdict Verdict::unknown(std::size_t cutoff, std::string note) {
  Verdict v;
  v.status = Status::Unknown;
  v.cutoff = cutoff;
  v.note = std::move(note);
  return v;
}

}  // namespace monoidal
