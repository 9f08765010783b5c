#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "polecover/cover.hpp"
#include "polecover/error.hpp"
#include "polecover/haupt.hpp"

namespace pc = polecover;
using pc::GaussianRational;
using pc::HauptVerdict;
using pc::ImageRank;
using pc::IntegerMatrix;
using pc::PeriodCharacter;
using pc::Rational;

namespace {

const GaussianRational I = GaussianRational::imaginary_unit();

PeriodCharacter closed(std::vector<GaussianRational> alpha, std::vector<GaussianRational> beta) {
  PeriodCharacter chi;
  chi.genus = static_cast<long>(alpha.size());
  chi.alpha = std::move(alpha);
  chi.beta = std::move(beta);
  return chi;
}

IntegerMatrix matrix(std::initializer_list<std::initializer_list<long>> rows) {
  IntegerMatrix m;
  for (const auto& r : rows) {
    m.emplace_back();
    for (long x : r) m.back().emplace_back(x);
  }
  return m;
}

GaussianRational random_value(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

PeriodCharacter random_character(long g, std::mt19937_64& rng) {
  PeriodCharacter chi;
  chi.genus = g;
  for (long k = 0; k < g; ++k) {
    chi.alpha.push_back(random_value(rng));
    chi.beta.push_back(random_value(rng));
  }
  return chi;
}

/// Rank and covolume from an independent 2x2 determinant search over pairs of values.
Rational max_pair_area(const PeriodCharacter& chi) {
  std::vector<GaussianRational> values = chi.alpha;
  values.insert(values.end(), chi.beta.begin(), chi.beta.end());
  Rational best(0);
  for (const auto& a : values)
    for (const auto& b : values) {
      Rational area = a.re() * b.im() - a.im() * b.re();
      if (area < 0) area = -area;
      if (area > best) best = area;
    }
  return best;
}

}  // namespace

TEST(Volume, Examples) {
  EXPECT_EQ(pc::volume(closed({1}, {I})), 1);
  EXPECT_EQ(pc::volume(closed({1}, {1})), 0);
  EXPECT_EQ(pc::volume(closed({1, 1}, {I, I})), 2);
  EXPECT_EQ(pc::volume(closed({1}, {-I})), -1);
}

TEST(Volume, AdditiveUnderDirectSum) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_character(1 + t % 3, rng), y = random_character(1 + (t / 3) % 3, rng);
    const auto s = pc::direct_sum(x, y);
    EXPECT_EQ(s.genus, x.genus + y.genus);
    EXPECT_EQ(pc::volume(s), pc::volume(x) + pc::volume(y));
  }
}

TEST(SymplecticChange, Examples) {
  const auto chi = closed({1}, {I});
  const auto same = pc::symplectic_change(chi, matrix({{1, 0}, {0, 1}}));
  EXPECT_EQ(same.alpha, chi.alpha);
  EXPECT_EQ(same.beta, chi.beta);

  const auto rot = pc::symplectic_change(chi, matrix({{0, 1}, {-1, 0}}));
  EXPECT_EQ(rot.alpha, std::vector<GaussianRational>{I});
  EXPECT_EQ(rot.beta, std::vector<GaussianRational>{GaussianRational(-1)});

  // v' = M v: the upper shear adds beta to alpha; its transpose adds alpha to beta.
  const auto shear = pc::symplectic_change(chi, matrix({{1, 1}, {0, 1}}));
  EXPECT_EQ(shear.alpha, std::vector<GaussianRational>{GaussianRational(1, 1)});
  EXPECT_EQ(shear.beta, std::vector<GaussianRational>{I});
  const auto lower = pc::symplectic_change(chi, matrix({{1, 0}, {1, 1}}));
  EXPECT_EQ(lower.alpha, std::vector<GaussianRational>{GaussianRational(1)});
  EXPECT_EQ(lower.beta, std::vector<GaussianRational>{GaussianRational(1, 1)});
}

TEST(SymplecticChange, PeripheralUnchanged) {
  PeriodCharacter chi = closed({1}, {I});
  chi.peripheral = {GaussianRational(2), GaussianRational(-2)};
  EXPECT_EQ(pc::symplectic_change(chi, matrix({{0, 1}, {-1, 0}})).peripheral, chi.peripheral);
}

TEST(SymplecticChange, RejectsNonSymplectic) {
  try {
    pc::symplectic_change(closed({1}, {I}), matrix({{2, 0}, {0, 1}}));
    FAIL();
  } catch (const pc::Error& e) {
    EXPECT_EQ(e.code(), pc::ErrorCode::NotSymplectic);
  }
  EXPECT_THROW(pc::symplectic_change(closed({1}, {I}), matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), pc::Error);
}

TEST(SymplecticChange, GeneratorsAreSymplectic) {
  for (long g = 1; g <= 3; ++g) {
    const auto gens = pc::symplectic_generators(g);
    EXPECT_FALSE(gens.empty());
    for (const auto& m : gens) EXPECT_TRUE(pc::is_symplectic(m));
    EXPECT_TRUE(pc::is_symplectic(pc::symplectic_form(g)));
  }
}

TEST(SymplecticChange, VolumeAndImageInvariant) {
  std::mt19937_64 rng(99);
  for (long g = 1; g <= 3; ++g) {
    for (int t = 0; t < 200; ++t) {
      const auto chi = random_character(g, rng);
      const auto m = pc::random_symplectic(g, rng);
      ASSERT_TRUE(pc::is_symplectic(m));
      const auto moved = pc::symplectic_change(chi, m);
      EXPECT_EQ(pc::volume(moved), pc::volume(chi));
      const auto a = pc::image_lattice_status(chi), b = pc::image_lattice_status(moved);
      EXPECT_EQ(a.rank, b.rank);
      EXPECT_EQ(a.covolume, b.covolume);
    }
  }
}

TEST(ImageLattice, Examples) {
  const auto unit = pc::image_lattice_status(closed({1}, {I}));
  EXPECT_EQ(unit.rank, ImageRank::Lattice);
  EXPECT_EQ(unit.covolume, 1);
  EXPECT_EQ(pc::image_lattice_status(closed({1}, {Rational(1, 2)})).rank, ImageRank::Rank1);
  PeriodCharacter half = closed({1}, {I});
  half.peripheral = {GaussianRational(Rational(1, 2), Rational(1, 2)), GaussianRational(Rational(-1, 2), Rational(-1, 2))};
  const auto h = pc::image_lattice_status(half);
  EXPECT_EQ(h.rank, ImageRank::Lattice);
  EXPECT_EQ(h.covolume, Rational(1, 2));
  EXPECT_EQ(pc::image_lattice_status(closed({0}, {0})).rank, ImageRank::Rank0);
}

TEST(ImageLattice, CovolumeAtMostAnyPairArea) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto chi = random_character(1 + t % 3, rng);
    const auto s = pc::image_lattice_status(chi);
    const Rational area = max_pair_area(chi);
    if (area == 0) {
      EXPECT_NE(s.rank, ImageRank::Lattice);
      continue;
    }
    ASSERT_EQ(s.rank, ImageRank::Lattice);
    // Any two independent values span a sublattice, so its area is an integer multiple of the covolume.
    const Rational ratio = area / s.covolume;
    EXPECT_EQ(ratio.get_den(), 1);
  }
}

TEST(HauptVerdict, Examples) {
  EXPECT_EQ(pc::haupt_realizable(closed({1}, {I})).verdict, HauptVerdict::FailsLatticeCondition);
  EXPECT_EQ(pc::haupt_realizable(closed({1, 1}, {I, I})).verdict, HauptVerdict::RealizableFirstKind);
  EXPECT_EQ(pc::haupt_realizable(closed({1}, {-I})).verdict, HauptVerdict::FailsVolume);
  EXPECT_EQ(pc::haupt_realizable(closed({1}, {1})).verdict, HauptVerdict::FailsVolume);
  PeriodCharacter poles = closed({1}, {-I});
  poles.peripheral = {GaussianRational(3), GaussianRational(-3)};
  EXPECT_EQ(pc::haupt_realizable(poles).verdict, HauptVerdict::RealizableWithPoles);
  // In genus one the image lattice is spanned by (alpha, beta) itself, so the volume equals the covolume.
  EXPECT_EQ(pc::haupt_realizable(closed({2}, {2 * I})).verdict, HauptVerdict::FailsLatticeCondition);
  EXPECT_EQ(pc::haupt_realizable(closed({1, 1}, {2 * I, I})).verdict, HauptVerdict::RealizableFirstKind);
  // Volume 1 against covolume 1/4.
  EXPECT_EQ(pc::haupt_realizable(closed({1, Rational(1, 2)}, {Rational(1, 2) * I, I})).verdict,
            HauptVerdict::RealizableFirstKind);
  // (1, i, 1, i) sits exactly on the threshold vol = 2 covol; a degenerate second handle falls below it.
  EXPECT_EQ(pc::haupt_realizable(closed({1, 0}, {I, 1})).verdict,
            HauptVerdict::FailsLatticeCondition);
}

TEST(HauptVerdict, SecondKindAnnotation) {
  PeriodCharacter chi = closed({1}, {I});
  chi.peripheral = {GaussianRational(1), GaussianRational(-1)};
  const auto plain = pc::haupt_realizable(chi);
  EXPECT_FALSE(plain.note.has_value());
  const auto annotated = pc::haupt_realizable(chi, true);
  EXPECT_EQ(annotated.verdict, HauptVerdict::RealizableWithPoles);
  EXPECT_TRUE(annotated.note.has_value());
  chi.peripheral = {GaussianRational(0), GaussianRational(0)};
  EXPECT_FALSE(pc::haupt_realizable(chi, true).note.has_value());
}

TEST(PeriodCharacter, Validation) {
  PeriodCharacter chi = closed({1}, {I});
  chi.peripheral = {GaussianRational(1)};
  EXPECT_THROW(chi.validate(), pc::Error);
  chi = closed({1}, {I});
  chi.beta.clear();
  EXPECT_THROW(chi.validate(), pc::Error);
}

TEST(HauptVerdict, CoverPeriodsRealizableWithPoles) {
  std::mt19937_64 rng(31);
  int seen = 0;
  for (int t = 0; t < 200; ++t) {
    const auto x = pc::covered_surface(pc::testing::random_cover_spec(rng));
    const auto gens = pc::period_lattice(x).generators();
    PeriodCharacter chi;
    GaussianRational sum;
    for (const auto& v : gens) {
      chi.peripheral.push_back(v);
      sum += v;
    }
    chi.peripheral.push_back(-sum);
    EXPECT_EQ(pc::haupt_realizable(chi).verdict, HauptVerdict::RealizableWithPoles);
    seen += gens.empty() ? 0 : 1;
  }
  EXPECT_GT(seen, 0);
}
