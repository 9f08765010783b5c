#include "polecover/projective.hpp"

#include <map>

#include "polecover/error.hpp"

namespace polecover {

BranchedStructureData extend_to_bps(const CoveredSurface& surface) {
  if (surface.kind() != DifferentialKind::Second)
    throw Error(ErrorCode::NonZeroResidue, "a pole with nonzero residue has no projective chart");
  std::map<std::pair<bool, long>, std::uint64_t> grouped;
  long reconstructed = 0;
  for (const auto& b : surface.branches()) {
    const long m = b.upstairs_order;
    if (m > 0) {
      grouped[{false, m}] += b.sheets;
    } else if (m < 0) {
      ensure(m <= -2, "simple pole on a second-kind surface");
      grouped[{true, -m - 2}] += b.sheets;
    }
  }
  BranchedStructureData data;
  data.genus = surface.genus();
  for (const auto& [key, count] : grouped) {
    data.records.push_back({count, key.second, key.first});
    const long k = key.second;
    reconstructed += static_cast<long>(count) * (key.first ? -(k + 2) : k);
  }
  ensure(reconstructed == 2 * data.genus - 2, "branch data does not reproduce the Euler characteristic");
  data.holonomy_trivial = period_lattice(surface).is_zero();
  return data;
}

bool troyanov_flat_check(long genus, std::span<const long> orders) {
  long sum = 0;
  for (long k : orders) sum += k;
  return 2 - 2 * genus + sum == 0;
}

CertifiedAut projective_automorphism_count(const CoveredSurface& surface, const CertifiedAut& aut) {
  (void)extend_to_bps(surface);
  return aut;
}

}  // namespace polecover
