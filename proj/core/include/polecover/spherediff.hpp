#pragma once

// Meromorphic differentials on CP^1 in factored form c * prod (z - q)^e dz,
// Mobius maps, pullback and the automorphism group of a marked differential.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "polecover/exactnum.hpp"

namespace polecover {

struct DiffFactor {
  GaussianRational point;
  long exponent = 0;
  friend bool operator==(const DiffFactor&, const DiffFactor&) = default;
};

enum class DifferentialKind { Second, Third };

class SphereDifferential {
 public:
  /// Throws InvalidInput for c = 0, a zero exponent or a repeated point.
  /// Factors are stored sorted by point.
  SphereDifferential(GaussianRational leading, std::vector<DiffFactor> factors);
  /// dz
  SphereDifferential() : SphereDifferential(GaussianRational(1), {}) {}

  /// c dz
  static SphereDifferential constant(GaussianRational c = GaussianRational(1));

  const GaussianRational& leading() const { return leading_; }
  const std::vector<DiffFactor>& factors() const { return factors_; }

  long order_at_infinity() const;
  long order_at(const ProjectivePoint& p) const;
  GaussianRational residue_at(const ProjectivePoint& p) const;

  /// Zeros and poles, finite points first in canonical order, infinity last.
  std::vector<ProjectivePoint> singular_points() const;
  /// f with xi = f(z) dz.
  RationalFunction density() const;

  friend bool operator==(const SphereDifferential&, const SphereDifferential&) = default;

 private:
  GaussianRational leading_;
  std::vector<DiffFactor> factors_;
  std::vector<GaussianRational> finite_residues_;
  GaussianRational residue_infinity_;
};

DifferentialKind kind_of(const SphereDifferential& xi);

/// z -> (a z + b) / (c z + d), scaled so that the first nonzero entry of
/// (a, b, c, d) is 1.
class MobiusMap {
 public:
  /// Throws InvalidInput when ad - bc = 0.
  MobiusMap(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d);
  static MobiusMap identity() { return {1, 0, 0, 1}; }

  const GaussianRational& a() const { return a_; }
  const GaussianRational& b() const { return b_; }
  const GaussianRational& c() const { return c_; }
  const GaussianRational& d() const { return d_; }
  GaussianRational det() const { return a_ * d_ - b_ * c_; }

  ProjectivePoint operator()(const ProjectivePoint& p) const;
  MobiusMap inverse() const;
  bool is_identity() const { return *this == identity(); }

  /// (f o g)(z) = f(g(z)).
  friend MobiusMap compose(const MobiusMap& f, const MobiusMap& g);
  friend bool operator==(const MobiusMap&, const MobiusMap&) = default;
  friend std::strong_ordering operator<=>(const MobiusMap& x, const MobiusMap& y);

 private:
  GaussianRational a_, b_, c_, d_;
};

std::string to_string(const MobiusMap& f);

/// f^* xi.
SphereDifferential mobius_pullback(const MobiusMap& f, const SphereDifferential& xi);

struct Mark {
  ProjectivePoint point;
  std::uint64_t label = 1;
};

/// Mobius maps preserving xi and permuting the marks with their labels.
/// For two marks the group is cyclic of a known order but only its
/// Q(i)-rational elements can be written down; maps_complete says whether
/// maps lists the whole group.
struct BaseSymmetries {
  bool infinite = false;
  std::uint64_t order = 0;
  std::vector<MobiusMap> maps;
  bool maps_complete = true;

  bool trivial() const { return !infinite && order == 1; }
};

/// Throws InvalidMarks when a singular point of xi is unmarked or marks repeat.
BaseSymmetries marked_automorphisms(const SphereDifferential& xi, std::span<const Mark> marks);

}  // namespace polecover
