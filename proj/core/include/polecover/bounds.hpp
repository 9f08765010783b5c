#pragma once

// Riemann-Hurwitz arithmetic and the cardinality bounds on Aut(X, omega).

#include <cstdint>
#include <string>
#include <vector>

#include "polecover/cover.hpp"

namespace polecover {

struct BranchEntry {
  std::uint64_t sheets = 1;        // s_i
  std::uint64_t local_degree = 2;  // d_i
};

struct BranchSignature {
  std::uint64_t degree = 1;
  long base_genus = 0;
  std::vector<BranchEntry> entries;
};

/// 2 g_X - 2 = deg (2 g_Y - 2) + sum s_i (d_i - 1). Throws InadmissibleSignature
/// on malformed entries or a non-integral or negative genus.
long riemann_hurwitz(const BranchSignature& sig);

enum class BoundStatus { Ok, OkExtremal, Violation };
std::string_view to_string(BoundStatus s);

struct BoundVerdict {
  BoundStatus status = BoundStatus::Ok;
  std::uint64_t bound = 0;  // tightest applicable bound
  bool used_non_large_bound = false;
};

/// Applies 84(g-1) always and 4g-4 when the group is known not to be large.
/// Throws BoundNotApplicable for g <= 1.
BoundVerdict check_translation_bound(long genus, Tristate large, std::uint64_t aut_size);

/// Signatures found by arithmetic alone; nothing here claims a group realizes them.
enum class Admissibility { ArithmeticOnly };

struct AdmissibleSignature {
  long base_genus = 0;
  std::vector<std::uint64_t> local_degrees;  // nondecreasing
  std::uint64_t degree = 0;
  friend bool operator==(const AdmissibleSignature&, const AdmissibleSignature&) = default;
};

struct AdmissibleMaximum {
  std::uint64_t degree = 0;
  std::vector<AdmissibleSignature> attained_by;
  Admissibility admissibility = Admissibility::ArithmeticOnly;
};

/// Largest deg with 2g-2 = deg (2 g_Y - 2 + sum (1 - 1/d_i)), d_i | deg and at
/// most 2g+2 branch values; g_Y >= 1 when not large, g_Y = 0 when large.
/// Throws BoundNotApplicable for g <= 1.
AdmissibleMaximum max_admissible_degree(long genus, bool large);

std::string signature_string(const AdmissibleSignature& sig);

}  // namespace polecover
