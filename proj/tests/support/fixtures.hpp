#pragma once

// Test-only group fixtures and random cover generation.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "polecover/cover.hpp"
#include "polecover/groups.hpp"

namespace polecover::testing {

struct NamedGroup {
  std::string name;
  PermGroup group;
};

/// Abstract group on {0..n-1} with identity 0, given by its multiplication.
struct AbstractGroup {
  std::string name;
  int order;
  std::function<int(int, int)> mul;
};

/// Right-regular permutation representation x -> x g, generated greedily.
PermGroup regular_representation(const AbstractGroup& g);

/// One representative per isomorphism class of order <= 16 (42 groups).
const std::vector<NamedGroup>& small_groups();
/// small_groups() plus a selection of groups of order 17..24.
const std::vector<NamedGroup>& groups_up_to_24();

PermGroup cyclic_group(std::size_t n);
PermGroup symmetric_group(std::size_t n);
PermGroup psl27();

/// Element order statistics, abelianization element orders and |Z(G)|.
struct Fingerprint {
  std::vector<std::size_t> order_counts;
  bool abelian = false;
  std::vector<std::size_t> abelianization_orders;
  std::size_t center = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const PermGroup& g);

/// Random generating monodromy with product one and a random differential
/// whose singular points are all marked.
struct RandomCoverParams {
  std::size_t max_marks = 5;
  std::size_t max_group_order = 24;
};
CoverSpec random_cover_spec(std::mt19937_64& rng, const RandomCoverParams& params = {});

}  // namespace polecover::testing
