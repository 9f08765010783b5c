#pragma once

// From a finite group to a translation surface with poles whose translation
// group is certified to be exactly that group.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polecover/bounds.hpp"
#include "polecover/cover.hpp"
#include "polecover/groups.hpp"
#include "polecover/projective.hpp"

namespace polecover {

struct CheckResult {
  std::string name;
  bool passed = false;
};

struct RealizationCertificate {
  CoveredSurface surface;
  PeriodLattice periods;
  CertifiedAut aut;
  std::optional<BoundVerdict> bound;                 // genus >= 2 only
  std::optional<BranchedStructureData> projective;   // second kind only
  /// The base is c dz, which is not a pullback under any map of degree >= 2.
  bool rigid_base = false;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool all_checks_passed() const;
};

/// Runs every cross-check on a constructed surface. Certification refusals
/// (UncertifiableBase) propagate; failed checks are recorded, not thrown.
RealizationCertificate certify(CoveredSurface surface);

struct RealizeOptions {
  /// Use c dz / (z (z - 1)) instead of dz, giving residues -c and c.
  bool third_kind = false;
  GaussianRational residue{1};
};

/// Marks 0..k-1 carry the generators (identities dropped, repeated until
/// k >= 3), infinity carries the inverse product, over the base dz. The trivial
/// group is realized over a fixed asymmetric second-kind base instead.
/// Throws InvalidInput on an empty list, NotGenerating if they do not generate,
/// InternalInconsistency if the result is not certified exactly.
RealizationCertificate realize_group(const PermGroup& group, std::span<const Permutation> generators,
                                     const RealizeOptions& options = {});

/// Cover of dz branched over (0, 1, infinity) with a (2, 3, 7) generating
/// tuple; nullopt when the group has none.
std::optional<RealizationCertificate> realize_hurwitz(const PermGroup& group);

/// -6 (z + 1/3)(z - 1/2) / (z^2 (z-1)^3 (z+1)^4) dz = d(1 / (z (z-1)^2 (z+1)^3)).
SphereDifferential asymmetric_second_kind_base();

}  // namespace polecover
