#include "polecover/bounds.hpp"

#include <algorithm>
#include <optional>

#include "polecover/error.hpp"

namespace polecover {

long riemann_hurwitz(const BranchSignature& sig) {
  if (sig.degree < 1) throw Error(ErrorCode::InadmissibleSignature, "degree must be positive");
  if (sig.base_genus < 0) throw Error(ErrorCode::InadmissibleSignature, "negative base genus");
  const long deg = static_cast<long>(sig.degree);
  long euler = deg * (2 * sig.base_genus - 2);
  for (const auto& e : sig.entries) {
    if (e.local_degree < 2) throw Error(ErrorCode::InadmissibleSignature, "local degrees must be at least 2");
    if (e.sheets * e.local_degree != sig.degree) throw Error(ErrorCode::InadmissibleSignature, "s_i d_i differs from the degree");
    euler += static_cast<long>(e.sheets) * (static_cast<long>(e.local_degree) - 1);
  }
  if (euler % 2 != 0) throw Error(ErrorCode::InadmissibleSignature, "2g-2 = " + std::to_string(euler) + " is odd");
  const long genus = euler / 2 + 1;
  if (genus < 0) throw Error(ErrorCode::InadmissibleSignature, "negative genus");
  return genus;
}

std::string_view to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::Ok: return "Ok";
    case BoundStatus::OkExtremal: return "OkExtremal";
    case BoundStatus::Violation: return "Violation";
  }
  return "?";
}

BoundVerdict check_translation_bound(long genus, Tristate large, std::uint64_t aut_size) {
  if (genus <= 1) throw Error(ErrorCode::BoundNotApplicable, "translation bounds need genus at least 2");
  BoundVerdict v;
  v.bound = static_cast<std::uint64_t>(84 * (genus - 1));
  if (large == Tristate::False) {
    v.bound = std::min(v.bound, static_cast<std::uint64_t>(4 * genus - 4));
    v.used_non_large_bound = true;
  }
  if (aut_size > v.bound)
    v.status = BoundStatus::Violation;
  else if (aut_size == v.bound)
    v.status = BoundStatus::OkExtremal;
  else
    v.status = BoundStatus::Ok;
  return v;
}

namespace {

struct SignatureSearch {
  long genus;
  std::size_t max_entries;
  long base_genus = 0;
  std::vector<std::uint64_t> chosen;
  AdmissibleMaximum best;

  void leaf(const Rational& t) {
    if (sgn(t) <= 0) return;
    const Rational deg_q = Rational(2 * genus - 2) / t;
    if (deg_q.get_den() != 1) return;
    const Integer& deg_z = deg_q.get_num();
    if (!deg_z.fits_ulong_p()) return;
    const std::uint64_t deg = deg_z.get_ui();
    for (auto d : chosen)
      if (deg % d != 0) return;
    if (deg < best.degree) return;
    if (deg > best.degree) {
      best.degree = deg;
      best.attained_by.clear();
    }
    best.attained_by.push_back({base_genus, chosen, deg});
  }

  // t = 2 g_Y - 2 + sum over chosen of (1 - 1/d).
  void extend(const Rational& t) {
    leaf(t);
    if (chosen.size() >= max_entries) return;
    // Any completion with r more entries, the next one d and all later ones
    // >= d, satisfies d <= deg <= (2g-2)/(t + r (1 - 1/d)), i.e.
    // d <= (2g-2+r)/(t+r). The bound is loosest at the smallest admissible r.
    const std::size_t room = max_entries - chosen.size();
    std::optional<Rational> cap;
    for (std::size_t r = 1; r <= room; ++r) {
      const Rational denom = t + Rational(static_cast<long>(r));
      if (sgn(denom) <= 0) continue;
      const Rational c = Rational(2 * genus - 2 + static_cast<long>(r)) / denom;
      if (!cap || c > *cap) cap = c;
    }
    if (!cap) return;
    const std::uint64_t start = chosen.empty() ? 2 : chosen.back();
    for (std::uint64_t d = start; Rational(static_cast<long>(d)) <= *cap; ++d) {
      chosen.push_back(d);
      extend(t + Rational(1) - Rational(1, static_cast<long>(d)));
      chosen.pop_back();
    }
  }
};

}  // namespace

AdmissibleMaximum max_admissible_degree(long genus, bool large) {
  if (genus <= 1) throw Error(ErrorCode::BoundNotApplicable, "admissible degrees are unbounded for genus <= 1");
  SignatureSearch search{genus, static_cast<std::size_t>(2 * genus + 2), 0, {}, {}};
  const long lo = large ? 0 : 1;
  const long hi = large ? 0 : genus;
  for (long gy = lo; gy <= hi; ++gy) {
    search.base_genus = gy;
    search.extend(Rational(2 * gy - 2));
  }
  return search.best;
}

std::string signature_string(const AdmissibleSignature& sig) {
  std::string out = "(" + std::to_string(sig.base_genus) + ";";
  for (std::size_t k = 0; k < sig.local_degrees.size(); ++k) {
    out += (k == 0 ? " " : ",") + std::to_string(sig.local_degrees[k]);
  }
  return out + ")";
}

}  // namespace polecover
