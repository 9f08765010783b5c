#pragma once

// Period characters chi: H_1(S_{g,n}) -> C with exact Q(i) values, the Haupt
// volume and the realizability verdicts.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polecover/exactnum.hpp"

namespace polecover {

struct PeriodCharacter {
  long genus = 0;
  std::vector<GaussianRational> alpha;
  std::vector<GaussianRational> beta;
  std::vector<GaussianRational> peripheral;

  /// Throws InvalidInput on size mismatches or nonzero peripheral sum.
  void validate() const;
  std::size_t punctures() const { return peripheral.size(); }
};

/// sum Im(conj(alpha_i) beta_i)
Rational volume(const PeriodCharacter& chi);

/// Genus-wise concatenation (punctures concatenated too).
PeriodCharacter direct_sum(const PeriodCharacter& x, const PeriodCharacter& y);

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Coordinates ordered (alpha_1, beta_1, alpha_2, ...); J has blocks [[0,1],[-1,0]].
IntegerMatrix symplectic_form(long genus);
bool is_symplectic(const IntegerMatrix& m);

/// v' = M v on the (alpha_1, beta_1, ...) vector; throws NotSymplectic.
PeriodCharacter symplectic_change(const PeriodCharacter& chi, const IntegerMatrix& m);

/// Transvections x -> x + <v, x> v for v = e_k and e_k + e_l; they generate Sp(2g, Z).
std::vector<IntegerMatrix> symplectic_generators(long genus);
/// Product of `length` random generators and their inverses.
IntegerMatrix random_symplectic(long genus, std::mt19937_64& rng, int length = 12);

enum class ImageRank { Rank0, Rank1, Lattice };

struct LatticeStatus {
  ImageRank rank = ImageRank::Rank0;
  Rational covolume{0};  // meaningful for Lattice only
};

LatticeStatus image_lattice_status(const PeriodCharacter& chi);

enum class HauptVerdict { RealizableFirstKind, FailsVolume, FailsLatticeCondition, RealizableWithPoles };

std::string_view to_string(HauptVerdict v);

struct HauptResult {
  HauptVerdict verdict = HauptVerdict::FailsVolume;
  Rational volume{0};
  LatticeStatus image;
  std::optional<std::string> note;
};

/// With want_second_kind the verdict carries a note when the peripheral values
/// are nonzero, since a second-kind realization has trivial peripheral periods.
HauptResult haupt_realizable(const PeriodCharacter& chi, bool want_second_kind = false);

}  // namespace polecover
