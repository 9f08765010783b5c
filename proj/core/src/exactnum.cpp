#include "polecover/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "polecover/error.hpp"

namespace polecover {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NotGenerating: return "NotGenerating";
    case ErrorCode::InvalidMarks: return "InvalidMarks";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::UncertifiableBase: return "UncertifiableBase";
    case ErrorCode::NotAQuotientOrder: return "NotAQuotientOrder";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::InadmissibleSignature: return "InadmissibleSignature";
    case ErrorCode::BoundNotApplicable: return "BoundNotApplicable";
    case ErrorCode::NonZeroResidue: return "NonZeroResidue";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Rational

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw Error(ErrorCode::InvalidInput, "not a rational: \"" + std::string(whole) + "\"");
  std::string str(s);
  if (str.front() == '+') str.erase(0, 1);
  return Integer(str, 10);
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = strip(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s, text));
  const Integer num = parse_integer(std::string_view(s).substr(0, slash), text);
  const std::string_view den_text = std::string_view(s).substr(slash + 1);
  if (!all_digits(den_text)) throw Error(ErrorCode::InvalidInput, "not a rational: \"" + std::string(text) + "\"");
  const Integer den(std::string(den_text), 10);
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in \"" + std::string(text) + "\"");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// -------------------------------------------------------- GaussianRational

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero in Q(i)");
  const Rational n = norm();
  return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussianRational GaussianRational::pow(long exponent) const {
  GaussianRational base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  GaussianRational result(1);
  while (e > 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
  if (auto c = compare(a.re_, b.re_); c != 0) return c;
  return compare(a.im_, b.im_);
}

std::string to_string(const GaussianRational& value) {
  const bool has_re = sgn(value.re()) != 0;
  const bool has_im = sgn(value.im()) != 0;
  if (!has_im) return to_string(value.re());
  std::string im;
  if (value.im() == 1)
    im = "i";
  else if (value.im() == -1)
    im = "-i";
  else
    im = to_string(value.im()) + "i";
  if (!has_re) return im;
  return to_string(value.re()) + (im.front() == '-' ? "" : "+") + im;
}

GaussianRational parse_gaussian(std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw Error(ErrorCode::InvalidInput, "empty Gaussian rational");
  if (s.back() != 'i') return GaussianRational(parse_rational(s));
  // Split "a+bi" at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size() - 1; k > 0; --k) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  const std::string real_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string imag_part = s.substr(split == std::string::npos ? 0 : split, std::string::npos);
  imag_part.pop_back();  // drop 'i'
  Rational im;
  if (imag_part.empty() || imag_part == "+")
    im = 1;
  else if (imag_part == "-")
    im = -1;
  else
    im = parse_rational(imag_part);
  const Rational re = real_part.empty() ? Rational(0) : parse_rational(real_part);
  return {re, im};
}

// --------------------------------------------------------- ProjectivePoint

ProjectivePoint ProjectivePoint::from_homogeneous(const GaussianRational& x, const GaussianRational& y) {
  if (y.is_zero()) {
    if (x.is_zero()) throw Error(ErrorCode::InvalidInput, "(0 : 0) is not a point of CP^1");
    return infinity();
  }
  return ProjectivePoint(x / y);
}

const GaussianRational& ProjectivePoint::finite() const {
  if (infinite_) throw Error(ErrorCode::InvalidInput, "point at infinity has no finite coordinate");
  return finite_;
}

std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.finite_ <=> b.finite_;
}

std::string to_string(const ProjectivePoint& p) { return p.is_infinity() ? "inf" : to_string(p.finite()); }

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<GaussianRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(GaussianRational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial Polynomial::monomial(const GaussianRational& c, std::size_t degree) {
  std::vector<GaussianRational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::linear_factor(const GaussianRational& root) { return Polynomial({-root, GaussianRational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational Polynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : GaussianRational(); }

GaussianRational Polynomial::leading() const { return coeffs_.empty() ? GaussianRational() : coeffs_.back(); }

GaussianRational Polynomial::operator()(const GaussianRational& z) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<GaussianRational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  const GaussianRational inv = leading().inverse();
  std::vector<GaussianRational> c = coeffs_;
  for (auto& x : c) x *= inv;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::pow(std::size_t exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<GaussianRational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::InvalidInput, "polynomial division by zero");
  std::vector<GaussianRational> rem = coeffs_;
  const long dd = divisor.degree();
  if (degree() < dd) return {Polynomial(), *this};
  std::vector<GaussianRational> quot(static_cast<std::size_t>(degree() - dd + 1));
  const GaussianRational lead_inv = divisor.leading().inverse();
  for (long k = degree(); k >= dd; --k) {
    const GaussianRational c = rem[static_cast<std::size_t>(k)] * lead_inv;
    quot[static_cast<std::size_t>(k - dd)] = c;
    if (c.is_zero()) continue;
    for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// -------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw Error(ErrorCode::InvalidInput, "rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).quotient;
    den_ = den_.divmod(g).quotient;
  }
  const GaussianRational lead = den_.leading();
  if (!(lead == GaussianRational(1))) {
    const GaussianRational inv = lead.inverse();
    num_ *= Polynomial(inv);
    den_ *= Polynomial(inv);
  }
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

namespace {

// p(N/D) * D^deg(p), evaluated on the homogenized polynomial.
Polynomial homogeneous_eval(const Polynomial& p, const Polynomial& num, const Polynomial& den, std::size_t total) {
  Polynomial acc;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    acc += Polynomial(c[k]) * num.pow(k) * den.pow(total - k);
  }
  return acc;
}

}  // namespace

RationalFunction RationalFunction::compose(const RationalFunction& inner) const {
  const std::size_t dn = num_.is_zero() ? 0 : static_cast<std::size_t>(num_.degree());
  const std::size_t dd = static_cast<std::size_t>(den_.degree());
  const std::size_t total = std::max(dn, dd);
  Polynomial top = homogeneous_eval(num_, inner.num_, inner.den_, total);
  Polynomial bottom = homogeneous_eval(den_, inner.num_, inner.den_, total);
  return RationalFunction(std::move(top), std::move(bottom));
}

GaussianRational RationalFunction::operator()(const GaussianRational& z) const {
  const GaussianRational d = den_(z);
  if (d.is_zero()) throw Error(ErrorCode::InvalidInput, "evaluation at a pole");
  return num_(z) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidInput, "rational function division by zero");
  *this = RationalFunction(num_ * o.den_, den_ * o.num_);
  return *this;
}

// ------------------------------------------------------------------ lattice

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::size_t pivot_column(const IntegerVector& row) {
  for (std::size_t c = 0; c < row.size(); ++c)
    if (sgn(row[c]) != 0) return c;
  return row.size();
}

// In-place a := s*a + t*b, b := u*a + v*b for a unimodular 2x2 transform.
void combine(IntegerVector& a, IntegerVector& b, const Integer& s, const Integer& t, const Integer& u, const Integer& v) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    Integer na = s * a[k] + t * b[k];
    Integer nb = u * a[k] + v * b[k];
    a[k] = std::move(na);
    b[k] = std::move(nb);
  }
}

// Echelon basis keyed by pivot column; insertion keeps the Z-span exact.
void insert_row(std::vector<IntegerVector>& basis, IntegerVector v) {
  std::size_t c = pivot_column(v);
  while (c < v.size()) {
    auto it = std::find_if(basis.begin(), basis.end(), [&](const IntegerVector& b) { return pivot_column(b) == c; });
    if (it == basis.end()) {
      basis.push_back(std::move(v));
      return;
    }
    IntegerVector& b = *it;
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b[c].get_mpz_t(), v[c].get_mpz_t());
    const Integer u = -Integer(v[c] / g);
    const Integer w = Integer(b[c] / g);
    combine(b, v, s, t, u, w);  // det = (s*b_c + t*v_c)/g = 1
    c = pivot_column(v);
  }
}

void reduce_to_hnf(std::vector<IntegerVector>& basis) {
  std::sort(basis.begin(), basis.end(),
            [](const IntegerVector& a, const IntegerVector& b) { return pivot_column(a) < pivot_column(b); });
  for (auto& row : basis) {
    if (sgn(row[pivot_column(row)]) < 0)
      for (auto& x : row) x = -x;
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::size_t c = pivot_column(basis[i]);
    for (std::size_t j = 0; j < i; ++j) {
      const Integer q = floor_div(basis[j][c], basis[i][c]);
      if (sgn(q) == 0) continue;
      for (std::size_t k = c; k < basis[j].size(); ++k) basis[j][k] -= q * basis[i][k];
    }
  }
}

}  // namespace

IntegerLattice hnf(std::size_t dimension, const std::vector<IntegerVector>& rows) {
  IntegerLattice lattice(dimension);
  std::vector<IntegerVector> basis;
  for (const auto& row : rows) {
    if (row.size() != dimension) throw Error(ErrorCode::InvalidInput, "hnf: row dimension mismatch");
    insert_row(basis, row);
  }
  reduce_to_hnf(basis);
  lattice.basis_ = std::move(basis);
  return lattice;
}

IntegerLattice rational_span(std::size_t dimension, const std::vector<std::vector<Rational>>& rows) {
  Integer scale = 1;
  for (const auto& row : rows) {
    if (row.size() != dimension) throw Error(ErrorCode::InvalidInput, "rational_span: row dimension mismatch");
    for (const auto& x : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<IntegerVector> ints;
  ints.reserve(rows.size());
  for (const auto& row : rows) {
    IntegerVector v(dimension);
    for (std::size_t k = 0; k < dimension; ++k) {
      Rational scaled = row[k] * Rational(scale);
      v[k] = scaled.get_num();
    }
    ints.push_back(std::move(v));
  }
  IntegerLattice lattice = hnf(dimension, ints);
  Integer g = scale;
  for (const auto& row : lattice.basis_)
    for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g != 1) {
    for (auto& row : lattice.basis_)
      for (auto& x : row) x /= g;
    scale /= g;
  }
  lattice.scale_ = scale;
  return lattice;
}

std::optional<std::vector<Integer>> IntegerLattice::integer_coordinates(std::span<const Integer> v) const {
  if (v.size() != dimension_) throw Error(ErrorCode::InvalidInput, "lattice membership: dimension mismatch");
  IntegerVector rest(v.begin(), v.end());
  std::vector<Integer> coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t c = pivot_column(basis_[i]);
    for (std::size_t k = 0; k < c; ++k)
      if (sgn(rest[k]) != 0) return std::nullopt;
    if (!mpz_divisible_p(rest[c].get_mpz_t(), basis_[i][c].get_mpz_t())) return std::nullopt;
    coords[i] = rest[c] / basis_[i][c];
    for (std::size_t k = c; k < dimension_; ++k) rest[k] -= coords[i] * basis_[i][k];
  }
  for (const auto& x : rest)
    if (sgn(x) != 0) return std::nullopt;
  return coords;
}

bool IntegerLattice::contains(std::span<const Integer> v) const {
  if (scale_ == 1) return integer_coordinates(v).has_value();
  std::vector<Rational> q(v.begin(), v.end());
  return contains(std::span<const Rational>(q));
}

bool IntegerLattice::contains(std::span<const Rational> v) const {
  if (v.size() != dimension_) throw Error(ErrorCode::InvalidInput, "lattice membership: dimension mismatch");
  IntegerVector scaled(dimension_);
  for (std::size_t k = 0; k < dimension_; ++k) {
    Rational x = v[k] * Rational(scale_);
    if (x.get_den() != 1) return false;
    scaled[k] = x.get_num();
  }
  return integer_coordinates(scaled).has_value();
}

Integer IntegerLattice::index() const {
  if (scale_ != 1 || basis_.size() != dimension_)
    throw Error(ErrorCode::NotALattice, "index in Z^n needs a full-rank integer lattice");
  Integer idx = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) idx *= basis_[i][i];
  return idx;
}

std::vector<std::vector<Rational>> IntegerLattice::rational_basis() const {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(basis_.size());
  for (const auto& row : basis_) {
    std::vector<Rational> r(dimension_);
    for (std::size_t k = 0; k < dimension_; ++k) {
      r[k] = Rational(row[k], scale_);
      r[k].canonicalize();
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

bool IntegerLattice::is_sublattice_of(const IntegerLattice& super) const {
  if (dimension_ != super.dimension_) return false;
  for (const auto& row : rational_basis())
    if (!super.contains(std::span<const Rational>(row))) return false;
  return true;
}

Integer IntegerLattice::index_in(const IntegerLattice& super) const {
  if (dimension_ != super.dimension_ || rank() != super.rank() || !is_sublattice_of(super))
    throw Error(ErrorCode::NotALattice, "index_in: not a full-rank sublattice");
  if (rank() == 0) return 1;
  // Coordinates of the sub-basis in the super-basis form an integer matrix whose
  // determinant is the index.
  std::vector<std::vector<Rational>> coords;
  for (const auto& row : rational_basis()) {
    IntegerVector scaled(dimension_);
    for (std::size_t k = 0; k < dimension_; ++k) scaled[k] = Rational(row[k] * Rational(super.scale_)).get_num();
    const auto c = super.integer_coordinates(scaled);
    ensure(c.has_value(), "index_in: coordinates missing for a contained vector");
    coords.emplace_back(c->begin(), c->end());
  }
  const Rational det = determinant(coords);
  ensure(det.get_den() == 1, "index_in: non-integral index");
  return abs(det.get_num());
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

Rational covolume2(const IntegerLattice& lattice) {
  if (lattice.dimension() != 2 || lattice.rank() != 2)
    throw Error(ErrorCode::NotALattice, "covolume2 needs a rank-2 lattice in Q^2");
  const auto& b = lattice.basis();
  const Integer det = b[0][0] * b[1][1] - b[0][1] * b[1][0];
  Rational v(abs(det), lattice.scale() * lattice.scale());
  v.canonicalize();
  return v;
}

}  // namespace polecover
