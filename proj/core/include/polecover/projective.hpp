#pragma once

// Branched projective structures obtained by filling in the poles of a
// second-kind translation surface.

#include <cstdint>
#include <span>
#include <vector>

#include "polecover/cover.hpp"

namespace polecover {

struct ProjectiveBranchRecord {
  std::uint64_t count = 0;
  long order = 0;  // branch order k; the cone angle is 2 pi (k + 1)
  bool at_infinity = false;
  friend bool operator==(const ProjectiveBranchRecord&, const ProjectiveBranchRecord&) = default;
};

struct BranchedStructureData {
  long genus = 0;
  /// Aggregated by (order, at_infinity); finite records first, each group by increasing order.
  std::vector<ProjectiveBranchRecord> records;
  bool holonomy_trivial = true;
};

/// A zero of order m gives a branch point of order m. A pole of order p >= 2 gives
/// a chart z -> z^(p-1) at infinity, recorded with k = p - 2 (k = 0 kept).
/// Throws NonZeroResidue on third-kind surfaces.
BranchedStructureData extend_to_bps(const CoveredSurface& surface);

/// 2 - 2g + sum k_i = 0 as displayed; for positive orders this forces g >= 1
/// and matches the zeros of a holomorphic translation surface.
bool troyanov_flat_check(long genus, std::span<const long> orders);

/// Translations extend over the filled poles, so the certified count carries
/// over unchanged. Throws NonZeroResidue when the extension does not exist.
CertifiedAut projective_automorphism_count(const CoveredSurface& surface, const CertifiedAut& aut);

}  // namespace polecover
