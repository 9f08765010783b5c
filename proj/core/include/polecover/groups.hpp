#pragma once

// Finite permutation groups, free-group words and the kernel-abelianization
// lattice of an evaluation homomorphism F_r -> G.
//
// Convention: permutations act on the right and products read left to right,
// so (p * q)(x) = q(p(x)): "apply p, then q".

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "polecover/exactnum.hpp"

namespace polecover {

class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless images is a bijection of {0, ..., n-1}.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// Cycles in 0-based points, e.g. from_cycles(3, {{0, 1, 2}}).
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  /// Apply this, then next.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b) { return a.then(b); }
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  std::string cycle_string() const;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Least k >= 1 with g^k = id (lcm of the cycle lengths).
std::uint64_t element_order(const Permutation& g);

inline constexpr std::size_t kDefaultGroupCap = 20000;

/// Finite permutation group with every element enumerated, sorted
/// lexicographically by image array.
class PermGroup {
 public:
  /// Throws GroupTooLarge if the closure exceeds cap, InvalidInput on a bad generator.
  static PermGroup generate(std::size_t degree, std::vector<Permutation> generators, std::size_t cap = kDefaultGroupCap);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  const Permutation& identity() const { return elements_[identity_index_]; }
  std::size_t identity_index() const { return identity_index_; }

  std::optional<std::size_t> index_of(const Permutation& g) const;
  bool contains(const Permutation& g) const { return index_of(g).has_value(); }
  /// True iff the given elements generate the whole group.
  bool generated_by(std::span<const Permutation> elements) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::size_t identity_index_ = 0;
};

/// Order of the subgroup generated by gens, or nullopt once it exceeds cap.
std::optional<std::size_t> subgroup_order(std::size_t degree, std::span<const Permutation> gens, std::size_t cap);

/// Reduced word in a free group; letters are signed 1-based generator indices.
class FreeWord {
 public:
  FreeWord() = default;
  /// Freely reduces; throws InvalidInput on a zero letter.
  explicit FreeWord(std::vector<int> letters);

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& o) const;
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

  /// Product of images read left to right; throws InvalidInput on an out-of-range letter.
  Permutation evaluate(std::span<const Permutation> images, std::size_t degree) const;
  /// Image in the abelianization Z^rank.
  IntegerVector exponent_sums(std::size_t rank) const;

 private:
  std::vector<int> letters_;
};

/// Schreier generators of ker(F_r -> G, a_j -> images[j]) from the BFS spanning
/// tree of the right Cayley graph (generator index breaks ties).
std::vector<FreeWord> schreier_generators(const PermGroup& group, std::span<const Permutation> images);

/// ab(ker(F_r -> G)) in Z^r as an HNF lattice. Throws NotGenerating unless the
/// images generate the group.
IntegerLattice kernel_abelianization(const PermGroup& group, std::span<const Permutation> images);

/// First tuple (g_1..g_k), in lexicographic order of element indices, with
/// ord(g_i) = orders[i], g_1 * ... * g_k = id and <g_i> = G.
std::optional<std::vector<Permutation>> find_generating_tuple(const PermGroup& group, std::span<const std::uint64_t> orders);

}  // namespace polecover
