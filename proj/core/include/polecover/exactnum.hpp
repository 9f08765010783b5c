#pragma once

// Exact scalar and lattice arithmetic over Q and Q(i). No floating point.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polecover {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q", with "/q" omitted when q = 1.
std::string to_string(const Rational& value);
Rational parse_rational(std::string_view text);

std::strong_ordering compare(const Rational& a, const Rational& b);

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = Rational(0));
  GaussianRational(long re) : GaussianRational(Rational(re)) {}

  static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, Rational(-im_)}; }
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }
  /// Throws InvalidInput on zero.
  GaussianRational inverse() const;
  GaussianRational pow(long exponent) const;

  GaussianRational operator-() const { return {Rational(-re_), Rational(-im_)}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Lexicographic on (re, im); used only for canonical orderings.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

 private:
  Rational re_{0};
  Rational im_{0};
};

/// "a", "bi", "a+bi", "a-bi" with rational a, b ("i" and "-i" allowed).
std::string to_string(const GaussianRational& value);
GaussianRational parse_gaussian(std::string_view text);

/// A point of CP^1 in canonical homogeneous form: (x : 1) or (1 : 0).
class ProjectivePoint {
 public:
  ProjectivePoint() = default;
  ProjectivePoint(GaussianRational finite) : finite_(std::move(finite)), infinite_(false) {}
  ProjectivePoint(long finite) : ProjectivePoint(GaussianRational(finite)) {}

  static ProjectivePoint infinity() {
    ProjectivePoint p;
    p.infinite_ = true;
    return p;
  }
  /// Throws InvalidInput when both coordinates vanish.
  static ProjectivePoint from_homogeneous(const GaussianRational& x, const GaussianRational& y);

  bool is_infinity() const { return infinite_; }
  /// Throws InvalidInput at infinity.
  const GaussianRational& finite() const;
  GaussianRational hx() const { return infinite_ ? GaussianRational(1) : finite_; }
  GaussianRational hy() const { return infinite_ ? GaussianRational(0) : GaussianRational(1); }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.finite_ == b.finite_);
  }
  /// Finite points ordered by value, infinity last.
  friend std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b);

 private:
  GaussianRational finite_{};
  bool infinite_ = false;
};

/// "inf" or the Gaussian-rational string of the finite coordinate.
std::string to_string(const ProjectivePoint& p);

/// Dense polynomial over Q(i), coefficients stored lowest degree first and trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> coefficients);
  Polynomial(GaussianRational constant);
  Polynomial(long constant) : Polynomial(GaussianRational(constant)) {}

  static Polynomial monomial(const GaussianRational& c, std::size_t degree);
  /// (z - root)
  static Polynomial linear_factor(const GaussianRational& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<GaussianRational>& coefficients() const { return coeffs_; }
  GaussianRational coefficient(std::size_t k) const;
  GaussianRational leading() const;

  GaussianRational operator()(const GaussianRational& z) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  Polynomial pow(std::size_t exponent) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws InvalidInput on a zero divisor.
  struct DivMod;
  DivMod divmod(const Polynomial& divisor) const;

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

struct Polynomial::DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Monic gcd (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// numerator / denominator, coprime, denominator monic.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial numerator, Polynomial denominator = Polynomial(1));

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction derivative() const;
  /// this(inner(z)).
  RationalFunction compose(const RationalFunction& inner) const;
  /// Throws InvalidInput when z is a pole.
  GaussianRational operator()(const GaussianRational& z) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void canonicalize();
  Polynomial num_;
  Polynomial den_;
};

using IntegerVector = std::vector<Integer>;

/// Z-lattice in Q^n stored as an integer Hermite normal form together with a
/// positive common denominator: the lattice is { v / scale : v in span(basis) }.
/// The pair is canonical (gcd of all basis entries and the scale is 1).
class IntegerLattice {
 public:
  explicit IntegerLattice(std::size_t dimension = 0) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntegerVector>& basis() const { return basis_; }
  const Integer& scale() const { return scale_; }
  bool is_zero() const { return basis_.empty(); }

  /// Integer vector membership (only meaningful when scale = 1), or rational
  /// membership through the scaled form.
  bool contains(std::span<const Integer> v) const;
  bool contains(std::span<const Rational> v) const;

  /// Index in Z^n; requires scale 1 and full rank.
  Integer index() const;
  /// Sublattice test against another lattice of the same dimension.
  bool is_sublattice_of(const IntegerLattice& super) const;
  /// [super : this]; both of equal rank and this contained in super.
  Integer index_in(const IntegerLattice& super) const;

  /// Basis rows as rational vectors (row / scale).
  std::vector<std::vector<Rational>> rational_basis() const;

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
    return a.dimension_ == b.dimension_ && a.scale_ == b.scale_ && a.basis_ == b.basis_;
  }

 private:
  friend IntegerLattice hnf(std::size_t, const std::vector<IntegerVector>&);
  friend IntegerLattice rational_span(std::size_t, const std::vector<std::vector<Rational>>&);
  std::optional<std::vector<Integer>> integer_coordinates(std::span<const Integer> v) const;

  std::size_t dimension_;
  std::vector<IntegerVector> basis_;
  Integer scale_{1};
};

/// Z-span of integer rows in row-style Hermite normal form: pivots strictly to
/// the right going down, pivots positive, entries above a pivot in [0, pivot).
IntegerLattice hnf(std::size_t dimension, const std::vector<IntegerVector>& rows);
/// Z-span of rational rows, stored as (HNF, denominator).
IntegerLattice rational_span(std::size_t dimension, const std::vector<std::vector<Rational>>& rows);

/// |det(basis)| / scale^2 for a rank-2 lattice in Q^2; throws NotALattice otherwise.
Rational covolume2(const IntegerLattice& lattice);

/// Exact determinant of a square rational matrix.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace polecover
