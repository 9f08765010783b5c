#include "polecover/realize.hpp"

#include <algorithm>

#include "polecover/error.hpp"

namespace polecover {

bool RealizationCertificate::all_checks_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

SphereDifferential asymmetric_second_kind_base() {
  return SphereDifferential(GaussianRational(-6), {{GaussianRational(Rational(-1, 3)), 1},
                                                   {GaussianRational(Rational(1, 2)), 1},
                                                   {GaussianRational(0), -2},
                                                   {GaussianRational(1), -3},
                                                   {GaussianRational(-1), -4}});
}

namespace {

bool is_constant_base(const SphereDifferential& xi) { return xi.factors().empty(); }

}  // namespace

RealizationCertificate certify(CoveredSurface surface) {
  RealizationCertificate cert{std::move(surface), {}, {}, {}, {}, false, {}, {}};
  const CoveredSurface& s = cert.surface;
  auto check = [&](std::string name, bool ok) { cert.checks.push_back({std::move(name), ok}); };

  check("riemann_hurwitz_equals_gauss_bonnet", s.riemann_hurwitz_euler() == s.gauss_bonnet_sum() &&
                                                    s.gauss_bonnet_sum() == 2 * s.genus() - 2);

  BranchSignature sig{s.deck_order(), 0, {}};
  for (const auto& b : s.branches())
    if (b.local_degree >= 2) sig.entries.push_back({b.sheets, b.local_degree});
  check("signature_genus_agrees", riemann_hurwitz(sig) == s.genus());

  GaussianRational residue_sum;
  bool round_trip = true;
  for (const auto& b : s.branches()) {
    residue_sum += GaussianRational(Rational(static_cast<long>(b.sheets))) * b.upstairs_residue;
    round_trip = round_trip && quotient_order(b.upstairs_order, static_cast<long>(b.local_degree)) == b.base_order;
  }
  check("upstairs_residues_sum_to_zero", residue_sum.is_zero());
  check("quotient_orders_round_trip", round_trip);
  check("kind_preserved", s.kind() == kind_of(s.spec().base));

  cert.periods = period_lattice(s);
  check("period_lattice_in_base_image", cert.periods.lattice.is_sublattice_of(base_period_lattice(s).lattice));
  if (s.kind() == DifferentialKind::Second) check("second_kind_periods_trivial", cert.periods.is_zero());

  cert.aut = translation_group(s);
  check("aut_bounds_ordered", cert.aut.lower <= cert.aut.upper);
  cert.rigid_base = is_constant_base(s.spec().base);
  if (s.genus() >= 2) {
    cert.bound = check_translation_bound(s.genus(), is_large(s, cert.aut), cert.aut.upper);
    check("translation_bound_respected", cert.bound->status != BoundStatus::Violation);
  }

  if (s.kind() == DifferentialKind::Second) {
    cert.projective = extend_to_bps(s);
    const CertifiedAut projective_aut = projective_automorphism_count(s, cert.aut);
    check("projective_count_unchanged", projective_aut.lower == cert.aut.lower && projective_aut.upper == cert.aut.upper &&
                                            projective_aut.status == cert.aut.status);
    check("holonomy_trivial", cert.projective->holonomy_trivial);
  }

  cert.notes.push_back("orders descend by d (k + 1) = m + 1; an upstairs order m is not in general a multiple of d");
  if (cert.aut.status == AutStatus::Exact && cert.aut.witness.trivial())
    cert.notes.push_back(cert.rigid_base
                             ? "no nontrivial base symmetry and the base c dz is not a pullback of degree >= 2: Aut equals the deck group"
                             : "no nontrivial base symmetry: Aut equals the deck group when the deck group is normal in Aut");
  return cert;
}

RealizationCertificate realize_group(const PermGroup& group, std::span<const Permutation> generators,
                                     const RealizeOptions& options) {
  if (generators.empty()) throw Error(ErrorCode::InvalidInput, "generator list is empty");
  if (!group.generated_by(generators)) throw Error(ErrorCode::NotGenerating, "generators do not generate the group");

  std::vector<Permutation> h;
  for (const auto& g : generators)
    if (!g.is_identity()) h.push_back(g);

  CoverSpec spec{SphereDifferential(), {}, group, {}};
  if (h.empty()) {
    // Trivial group: dz has a continuous symmetry group, so use a rigid base instead.
    spec.base = asymmetric_second_kind_base();
    spec.marks = spec.base.singular_points();
    spec.monodromy.assign(spec.marks.size(), group.identity());
  } else {
    const std::size_t distinct = h.size();
    for (std::size_t k = 0; h.size() < 3; ++k) h.push_back(h[k % distinct]);
    long offset = 0;
    if (options.third_kind) {
      if (options.residue.is_zero()) throw Error(ErrorCode::InvalidInput, "third-kind base needs a nonzero residue");
      spec.base = SphereDifferential(options.residue, {{GaussianRational(0), -1}, {GaussianRational(1), -1}});
      spec.marks = {ProjectivePoint(0), ProjectivePoint(1)};
      spec.monodromy = {group.identity(), group.identity()};
      offset = 2;
    }
    Permutation product = group.identity();
    for (std::size_t i = 0; i < h.size(); ++i) {
      spec.marks.emplace_back(static_cast<long>(i) + offset);
      spec.monodromy.push_back(h[i]);
      product = product * h[i];
    }
    spec.marks.push_back(ProjectivePoint::infinity());
    spec.monodromy.push_back(product.inverse());
  }

  RealizationCertificate cert = certify(covered_surface(std::move(spec)));
  ensure(cert.aut.status == AutStatus::Exact && cert.aut.value() == group.order(),
         "realization was not certified with Aut equal to the group");
  ensure(cert.all_checks_passed(), "a realization cross-check failed");
  return cert;
}

std::optional<RealizationCertificate> realize_hurwitz(const PermGroup& group) {
  const std::uint64_t orders[] = {2, 3, 7};
  const auto tuple = find_generating_tuple(group, orders);
  if (!tuple) return std::nullopt;
  CoverSpec spec{SphereDifferential(), {ProjectivePoint(0), ProjectivePoint(1), ProjectivePoint::infinity()}, group, *tuple};
  RealizationCertificate cert = certify(covered_surface(std::move(spec)));
  const long g = cert.surface.genus();
  ensure(cert.aut.status == AutStatus::Exact, "Hurwitz cover not certified exactly despite distinct mark degrees");
  ensure(g >= 2 && cert.aut.value() == static_cast<std::uint64_t>(84 * (g - 1)), "Hurwitz cover misses 84(g-1)");
  ensure(cert.bound && cert.bound->status == BoundStatus::OkExtremal, "Hurwitz cover is not extremal");
  ensure(cert.all_checks_passed(), "a Hurwitz cross-check failed");
  return cert;
}

}  // namespace polecover
