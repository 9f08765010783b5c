#pragma once

// Regular G-covers of the marked sphere: X -> CP^1 given by a monodromy tuple
// with product one, carrying omega = pi^* xi.

#include <cstdint>
#include <map>
#include <vector>

#include "polecover/exactnum.hpp"
#include "polecover/groups.hpp"
#include "polecover/spherediff.hpp"

namespace polecover {

struct CoverSpec {
  SphereDifferential base;
  std::vector<ProjectivePoint> marks;
  PermGroup group;
  std::vector<Permutation> monodromy;
};

/// Data over mark i: s_i preimages, each of local degree d_i, carrying the
/// listed upstairs order and residue.
struct BranchRecord {
  ProjectivePoint mark;
  long base_order = 0;
  GaussianRational base_residue;
  std::uint64_t local_degree = 1;
  std::uint64_t sheets = 1;
  long upstairs_order = 0;
  GaussianRational upstairs_residue;
};

class CoveredSurface {
 public:
  const CoverSpec& spec() const { return spec_; }
  long genus() const { return genus_; }
  const std::vector<BranchRecord>& branches() const { return branches_; }
  DifferentialKind kind() const { return kind_; }
  std::uint64_t deck_order() const { return spec_.group.order(); }

  /// 2g - 2 from Riemann-Hurwitz and from the upstairs orders.
  long riemann_hurwitz_euler() const { return rh_euler_; }
  long gauss_bonnet_sum() const { return gb_sum_; }
  /// Upstairs order -> number of points with that order (nonzero orders only).
  std::map<long, std::uint64_t> singularity_table() const;

 private:
  friend CoveredSurface covered_surface(CoverSpec spec);
  CoverSpec spec_;
  long genus_ = 0;
  long rh_euler_ = 0;
  long gb_sum_ = 0;
  std::vector<BranchRecord> branches_;
  DifferentialKind kind_ = DifferentialKind::Second;
};

/// Throws InvalidSpec on a malformed spec and InternalInconsistency if the two
/// genus computations disagree.
CoveredSurface covered_surface(CoverSpec spec);

/// Z-lattice of Gaussian rationals v, stored as (re, im) in Q^2; the periods
/// are 2 pi i v.
struct PeriodLattice {
  IntegerLattice lattice{2};
  bool is_zero() const { return lattice.is_zero(); }
  std::vector<GaussianRational> generators() const;
};

/// Image of the period character of omega. Also asserts it is a sublattice of
/// the base image with index dividing |G|.
PeriodLattice period_lattice(const CoveredSurface& surface);
/// Z-span of the base residues.
PeriodLattice base_period_lattice(const CoveredSurface& surface);

enum class AutStatus { Exact, Bounded };

struct CertifiedAut {
  std::uint64_t lower = 1;
  std::uint64_t upper = 1;
  AutStatus status = AutStatus::Exact;
  BaseSymmetries witness;
  bool hurwitz_tightened = false;

  std::uint64_t value() const { return lower; }
};

/// Throws UncertifiableBase when the marked base has infinitely many symmetries.
CertifiedAut translation_group(const CoveredSurface& surface);

enum class Tristate { False, True, Unknown };

Tristate is_large(const CoveredSurface& surface, const CertifiedAut& aut);

/// Base order k with d (k + 1) = m + 1; throws NotAQuotientOrder otherwise.
long quotient_order(long upstairs_order, long local_degree);

}  // namespace polecover
