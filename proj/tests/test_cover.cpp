#include <gtest/gtest.h>

#include <map>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "polecover/cover.hpp"
#include "polecover/error.hpp"

namespace pc = polecover;
using pc::CoverSpec;
using pc::DiffFactor;
using pc::GaussianRational;
using pc::Permutation;
using pc::ProjectivePoint;
using pc::SphereDifferential;

namespace {

const ProjectivePoint kInf = ProjectivePoint::infinity();

CoverSpec klein_spec() {
  const auto psl = pc::testing::psl27();
  const std::uint64_t orders[] = {2, 3, 7};
  const auto tuple = pc::find_generating_tuple(psl, orders);
  return {SphereDifferential(), {ProjectivePoint(0), ProjectivePoint(1), kInf}, psl, *tuple};
}

CoverSpec z2_over_third_kind() {
  const auto z2 = pc::testing::cyclic_group(2);
  const Permutation t = z2.generators()[0];
  return {SphereDifferential(1, {{0, -1}}), {ProjectivePoint(0), kInf}, z2, {t, t}};
}

CoverSpec cyclic_over_third_kind(std::size_t n) {
  const auto g = pc::testing::cyclic_group(n);
  const Permutation x = g.generators()[0];
  return {SphereDifferential(1, {{0, -1}}), {ProjectivePoint(0), kInf}, g, {x, x.inverse()}};
}

/// Z/2 over dz / (z (z - 1) (z + 1)), branched over all four singular points.
CoverSpec symmetric_spec() {
  const auto z2 = pc::testing::cyclic_group(2);
  const Permutation t = z2.generators()[0];
  return {SphereDifferential(1, {{-1, -1}, {0, -1}, {1, -1}}),
          {ProjectivePoint(-1), ProjectivePoint(0), ProjectivePoint(1), kInf},
          z2,
          {t, t, t, t}};
}

pc::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const pc::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return pc::ErrorCode::InternalInconsistency;
}

}  // namespace

TEST(CoveredSurface, KleinQuartic) {
  const auto x = pc::covered_surface(klein_spec());
  EXPECT_EQ(x.genus(), 3);
  EXPECT_EQ(x.deck_order(), 168u);
  const std::map<long, std::uint64_t> expected = {{1, 84}, {2, 56}, {-8, 24}};
  EXPECT_EQ(x.singularity_table(), expected);
  EXPECT_EQ(x.kind(), pc::DifferentialKind::Second);
  EXPECT_EQ(x.riemann_hurwitz_euler(), 4);
  EXPECT_EQ(x.gauss_bonnet_sum(), 4);
}

TEST(CoveredSurface, TrivialGroupIsTheBase) {
  const auto xi = SphereDifferential(1, {{0, -1}, {1, -1}, {3, -1}});
  const auto trivial = pc::PermGroup::generate(1, {});
  const auto id = trivial.identity();
  const auto x = pc::covered_surface({xi, {ProjectivePoint(0), ProjectivePoint(1), ProjectivePoint(3), kInf}, trivial, {id, id, id, id}});
  EXPECT_EQ(x.genus(), 0);
  for (const auto& b : x.branches()) {
    EXPECT_EQ(b.upstairs_order, xi.order_at(b.mark));
    EXPECT_EQ(b.upstairs_residue, xi.residue_at(b.mark));
  }
}

TEST(CoveredSurface, DoubleCoverOfThirdKind) {
  const auto x = pc::covered_surface(z2_over_third_kind());
  EXPECT_EQ(x.genus(), 0);
  ASSERT_EQ(x.branches().size(), 2u);
  EXPECT_EQ(x.branches()[0].upstairs_order, -1);
  EXPECT_EQ(x.branches()[1].upstairs_order, -1);
  EXPECT_EQ(x.branches()[0].upstairs_residue, GaussianRational(2));
  EXPECT_EQ(x.branches()[1].upstairs_residue, GaussianRational(-2));
  EXPECT_EQ(x.kind(), pc::DifferentialKind::Third);
  // Direct substitution z = w^2.
  const auto pulled = pc::oracle::power_map_pullback(SphereDifferential(1, {{0, -1}}).density(), 2);
  EXPECT_EQ(pc::oracle::residue_by_derivatives(pulled, ProjectivePoint(0)), GaussianRational(2));
}

TEST(CoveredSurface, RejectsMalformedSpecs) {
  auto spec = klein_spec();
  spec.monodromy.pop_back();
  EXPECT_EQ(code_of([&] { pc::covered_surface(spec); }), pc::ErrorCode::InvalidSpec);

  spec = klein_spec();
  std::swap(spec.monodromy[0], spec.monodromy[1]);
  EXPECT_EQ(code_of([&] { pc::covered_surface(spec); }), pc::ErrorCode::InvalidSpec);

  spec = klein_spec();
  spec.marks[1] = spec.marks[0];
  EXPECT_EQ(code_of([&] { pc::covered_surface(spec); }), pc::ErrorCode::InvalidSpec);

  // The pole of dz/z at 0 is not marked.
  spec = z2_over_third_kind();
  spec.marks[0] = ProjectivePoint(5);
  EXPECT_EQ(code_of([&] { pc::covered_surface(spec); }), pc::ErrorCode::InvalidSpec);

  // Identity monodromy does not generate Z/2.
  spec = z2_over_third_kind();
  spec.monodromy = {spec.group.identity(), spec.group.identity()};
  EXPECT_EQ(code_of([&] { pc::covered_surface(spec); }), pc::ErrorCode::InvalidSpec);

  spec = z2_over_third_kind();
  spec.monodromy[0] = Permutation::from_cycles(2, {});
  spec.monodromy[1] = Permutation::from_cycles(3, {{0, 1, 2}});
  EXPECT_EQ(code_of([&] { pc::covered_surface(spec); }), pc::ErrorCode::InvalidSpec);

  spec = z2_over_third_kind();
  spec.marks.clear();
  spec.monodromy.clear();
  EXPECT_EQ(code_of([&] { pc::covered_surface(spec); }), pc::ErrorCode::InvalidSpec);
}

TEST(PeriodLattice, SecondKindIsZero) {
  EXPECT_TRUE(pc::period_lattice(pc::covered_surface(klein_spec())).is_zero());
}

TEST(PeriodLattice, CyclicCoversOfThirdKind) {
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto periods = pc::period_lattice(pc::covered_surface(cyclic_over_third_kind(n)));
    const auto pulled = pc::oracle::power_map_pullback(SphereDifferential(1, {{0, -1}}).density(), static_cast<long>(n));
    const GaussianRational r = pc::oracle::residue_by_derivatives(pulled, ProjectivePoint(0));
    EXPECT_EQ(periods.generators(), std::vector<GaussianRational>{r}) << n;
    EXPECT_EQ(r, GaussianRational(static_cast<long>(n)));
  }
}

TEST(PeriodLattice, TwoMarksWithOppositeResidues) {
  const auto z2 = pc::testing::cyclic_group(2);
  const Permutation t = z2.generators()[0];
  const CoverSpec spec{SphereDifferential(1, {{0, -1}, {1, -1}}), {ProjectivePoint(0), ProjectivePoint(1)}, z2, {t, t}};
  const auto x = pc::covered_surface(spec);
  const auto periods = pc::period_lattice(x);
  EXPECT_EQ(periods.generators(), std::vector<GaussianRational>{GaussianRational(2)});
  // Oracle: the even-sum lattice mapped by (n1, n2) -> -n1 + n2.
  const Permutation both[] = {t, t};
  const auto kernel = pc::oracle::kernel_lattice_by_enumeration(z2, both, 4);
  std::vector<std::vector<pc::Rational>> images;
  for (const auto& row : kernel.basis()) images.push_back({pc::Rational(-row[0] + row[1]), pc::Rational(0)});
  EXPECT_EQ(periods.lattice, pc::rational_span(2, images));
}

TEST(TranslationGroup, KleinIsExact) {
  const auto x = pc::covered_surface(klein_spec());
  const auto aut = pc::translation_group(x);
  EXPECT_EQ(aut.status, pc::AutStatus::Exact);
  EXPECT_EQ(aut.lower, 168u);
  EXPECT_EQ(aut.upper, 168u);
  EXPECT_EQ(aut.value(), static_cast<std::uint64_t>(84 * (x.genus() - 1)));
  EXPECT_TRUE(aut.witness.trivial());
  EXPECT_EQ(pc::is_large(x, aut), pc::Tristate::True);
}

TEST(TranslationGroup, TrivialGroupOverAsymmetricBase) {
  const auto xi = SphereDifferential(1, {{0, -1}, {1, -1}, {3, -1}});
  const auto trivial = pc::PermGroup::generate(1, {});
  const auto id = trivial.identity();
  const auto x = pc::covered_surface({xi, {ProjectivePoint(0), ProjectivePoint(1), ProjectivePoint(3), kInf}, trivial, {id, id, id, id}});
  const auto aut = pc::translation_group(x);
  EXPECT_EQ(aut.status, pc::AutStatus::Exact);
  EXPECT_EQ(aut.value(), 1u);
  EXPECT_EQ(pc::is_large(x, aut), pc::Tristate::True);
}

TEST(TranslationGroup, SymmetricBaseIsBounded) {
  const auto x = pc::covered_surface(symmetric_spec());
  const auto aut = pc::translation_group(x);
  EXPECT_EQ(aut.status, pc::AutStatus::Bounded);
  EXPECT_EQ(aut.lower, 2u);
  EXPECT_EQ(aut.upper, 4u);
  EXPECT_EQ(aut.witness.order, 2u);
  EXPECT_EQ(pc::is_large(x, aut), pc::Tristate::Unknown);
}

TEST(TranslationGroup, InfiniteBaseSymmetryRefused) {
  const auto x = pc::covered_surface(z2_over_third_kind());
  EXPECT_EQ(code_of([&] { pc::translation_group(x); }), pc::ErrorCode::UncertifiableBase);
}

TEST(QuotientOrder, Examples) {
  EXPECT_EQ(pc::quotient_order(1, 2), 0);
  EXPECT_EQ(pc::quotient_order(-8, 7), -2);
  EXPECT_EQ(pc::quotient_order(5, 1), 5);
  EXPECT_EQ(pc::quotient_order(2, 3), 0);
  EXPECT_EQ(code_of([] { pc::quotient_order(2, 2); }), pc::ErrorCode::NotAQuotientOrder);
  EXPECT_EQ(code_of([] { pc::quotient_order(1, 0); }), pc::ErrorCode::InvalidInput);
}

TEST(CoveredSurface, RandomSpecsSatisfyBothGenusFormulas) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const CoverSpec spec = pc::testing::random_cover_spec(rng);
    const auto x = pc::covered_surface(spec);
    const long order = static_cast<long>(spec.group.order());
    // Independent recomputation from the spec alone.
    long rh = -2 * order, gb = 0;
    GaussianRational residue_sum;
    bool base_all_zero = true, up_all_zero = true;
    for (std::size_t i = 0; i < spec.marks.size(); ++i) {
      const long d = static_cast<long>(pc::element_order(spec.monodromy[i]));
      const long s = order / d;
      const long k = spec.base.order_at(spec.marks[i]);
      const GaussianRational res = spec.base.residue_at(spec.marks[i]);
      rh += s * (d - 1);
      gb += s * (d * (k + 1) - 1);
      residue_sum += GaussianRational(s) * GaussianRational(d) * res;
      base_all_zero = base_all_zero && res.is_zero();
      up_all_zero = up_all_zero && x.branches()[i].upstairs_residue.is_zero();
      EXPECT_EQ(pc::quotient_order(x.branches()[i].upstairs_order, d), k);
    }
    EXPECT_EQ(rh, gb);
    EXPECT_EQ(x.riemann_hurwitz_euler(), rh);
    EXPECT_EQ(2 * x.genus() - 2, rh);
    EXPECT_TRUE(residue_sum.is_zero());
    EXPECT_EQ(base_all_zero, up_all_zero);
    EXPECT_EQ(x.kind(), pc::kind_of(spec.base));

    const auto periods = pc::period_lattice(x);
    const auto base = pc::base_period_lattice(x);
    EXPECT_TRUE(periods.lattice.is_sublattice_of(base.lattice));
    if (!base.is_zero()) {
      const pc::Integer index = periods.lattice.index_in(base.lattice);
      EXPECT_TRUE(mpz_divisible_p(pc::Integer(static_cast<unsigned long>(order)).get_mpz_t(), index.get_mpz_t()));
    } else {
      EXPECT_TRUE(periods.is_zero());
    }
  }
}
