#include "polecover/spherediff.hpp"

#include <algorithm>
#include <map>

#include "polecover/error.hpp"

namespace polecover {

namespace {

Rational binomial(long e, long j) {
  Rational out(1);
  for (long t = 0; t < j; ++t) out = out * Rational(e - t) / Rational(t + 1);
  return out;
}

// (a + b w)^e as a power series in w, truncated after w^degree. Needs a != 0.
std::vector<GaussianRational> series_power(const GaussianRational& a, const GaussianRational& b, long e, long degree) {
  std::vector<GaussianRational> out(static_cast<std::size_t>(degree + 1));
  const GaussianRational ratio = b / a;
  GaussianRational ratio_power(1);
  const GaussianRational lead = a.pow(e);
  for (long j = 0; j <= degree; ++j) {
    out[static_cast<std::size_t>(j)] = lead * GaussianRational(binomial(e, j)) * ratio_power;
    ratio_power *= ratio;
  }
  return out;
}

std::vector<GaussianRational> series_multiply(const std::vector<GaussianRational>& x, const std::vector<GaussianRational>& y) {
  std::vector<GaussianRational> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

}  // namespace

SphereDifferential::SphereDifferential(GaussianRational leading, std::vector<DiffFactor> factors)
    : leading_(std::move(leading)), factors_(std::move(factors)) {
  if (leading_.is_zero()) throw Error(ErrorCode::InvalidInput, "leading coefficient of a differential is zero");
  std::sort(factors_.begin(), factors_.end(), [](const DiffFactor& x, const DiffFactor& y) { return x.point < y.point; });
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (factors_[k].exponent == 0) throw Error(ErrorCode::InvalidInput, "factor with exponent zero");
    if (k > 0 && factors_[k].point == factors_[k - 1].point)
      throw Error(ErrorCode::InvalidInput, "repeated point " + to_string(factors_[k].point));
  }

  // Residue at a finite factor q: coefficient of w^(-1-e_q) in c prod_{p != q} (w + q - p)^(e_p).
  finite_residues_.resize(factors_.size());
  GaussianRational total;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const long need = -1 - factors_[k].exponent;
    if (need < 0) continue;
    std::vector<GaussianRational> series(static_cast<std::size_t>(need + 1));
    series[0] = leading_;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
      if (j == k) continue;
      series = series_multiply(series, series_power(factors_[k].point - factors_[j].point, 1, factors_[j].exponent, need));
    }
    finite_residues_[k] = series[static_cast<std::size_t>(need)];
    total += finite_residues_[k];
  }

  // At infinity, z = 1/w: xi = -c w^N prod (1 - q w)^e dw with N the order at infinity.
  const long n_inf = order_at_infinity();
  const long need = -1 - n_inf;
  if (need >= 0) {
    std::vector<GaussianRational> series(static_cast<std::size_t>(need + 1));
    series[0] = -leading_;
    for (const auto& f : factors_) series = series_multiply(series, series_power(1, -f.point, f.exponent, need));
    residue_infinity_ = series[static_cast<std::size_t>(need)];
  }
  ensure((total + residue_infinity_).is_zero(), "residues of a sphere differential do not sum to zero");
  long order_sum = n_inf;
  for (const auto& f : factors_) order_sum += f.exponent;
  ensure(order_sum == -2, "orders of a sphere differential do not sum to -2");
}

SphereDifferential SphereDifferential::constant(GaussianRational c) { return SphereDifferential(std::move(c), {}); }

long SphereDifferential::order_at_infinity() const {
  long sum = 0;
  for (const auto& f : factors_) sum += f.exponent;
  return -2 - sum;
}

long SphereDifferential::order_at(const ProjectivePoint& p) const {
  if (p.is_infinity()) return order_at_infinity();
  for (const auto& f : factors_)
    if (f.point == p.finite()) return f.exponent;
  return 0;
}

GaussianRational SphereDifferential::residue_at(const ProjectivePoint& p) const {
  if (p.is_infinity()) return residue_infinity_;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    if (factors_[k].point == p.finite()) return finite_residues_[k];
  return {};
}

std::vector<ProjectivePoint> SphereDifferential::singular_points() const {
  std::vector<ProjectivePoint> out;
  for (const auto& f : factors_) out.emplace_back(f.point);
  if (order_at_infinity() != 0) out.push_back(ProjectivePoint::infinity());
  return out;
}

RationalFunction SphereDifferential::density() const {
  Polynomial num(leading_);
  Polynomial den(1);
  for (const auto& f : factors_) {
    const Polynomial lin = Polynomial::linear_factor(f.point);
    if (f.exponent > 0)
      num *= lin.pow(static_cast<std::size_t>(f.exponent));
    else
      den *= lin.pow(static_cast<std::size_t>(-f.exponent));
  }
  return RationalFunction(num, den);
}

DifferentialKind kind_of(const SphereDifferential& xi) {
  bool has_pole = false;
  for (const auto& p : xi.singular_points()) {
    if (xi.order_at(p) < 0) {
      has_pole = true;
      if (!xi.residue_at(p).is_zero()) return DifferentialKind::Third;
    }
  }
  ensure(has_pole, "a sphere differential without poles would be of the first kind");
  return DifferentialKind::Second;
}

// ---------------------------------------------------------------- MobiusMap

MobiusMap::MobiusMap(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (det().is_zero()) throw Error(ErrorCode::InvalidInput, "singular Mobius matrix");
  const GaussianRational& pivot = !a_.is_zero() ? a_ : (!b_.is_zero() ? b_ : c_);
  const GaussianRational s = pivot.inverse();
  a_ *= s;
  b_ *= s;
  c_ *= s;
  d_ *= s;
}

ProjectivePoint MobiusMap::operator()(const ProjectivePoint& p) const {
  const GaussianRational x = p.hx();
  const GaussianRational y = p.hy();
  return ProjectivePoint::from_homogeneous(a_ * x + b_ * y, c_ * x + d_ * y);
}

MobiusMap MobiusMap::inverse() const { return {d_, -b_, -c_, a_}; }

MobiusMap compose(const MobiusMap& f, const MobiusMap& g) {
  return {f.a_ * g.a_ + f.b_ * g.c_, f.a_ * g.b_ + f.b_ * g.d_, f.c_ * g.a_ + f.d_ * g.c_, f.c_ * g.b_ + f.d_ * g.d_};
}

std::strong_ordering operator<=>(const MobiusMap& x, const MobiusMap& y) {
  if (auto c = x.a_ <=> y.a_; c != 0) return c;
  if (auto c = x.b_ <=> y.b_; c != 0) return c;
  if (auto c = x.c_ <=> y.c_; c != 0) return c;
  return x.d_ <=> y.d_;
}

std::string to_string(const MobiusMap& f) {
  return "[[" + to_string(f.a()) + "," + to_string(f.b()) + "],[" + to_string(f.c()) + "," + to_string(f.d()) + "]]";
}

SphereDifferential mobius_pullback(const MobiusMap& f, const SphereDifferential& xi) {
  // f^*(L prod (z-q)^e dz) = L det prod((a - q c) z + (b - q d))^e (c z + d)^(-sum e - 2) dz
  GaussianRational leading = xi.leading() * f.det();
  std::map<GaussianRational, long> exponents;
  auto absorb = [&](const GaussianRational& alpha, const GaussianRational& beta, long e) {
    if (e == 0) return;
    if (alpha.is_zero()) {
      leading *= beta.pow(e);
    } else {
      leading *= alpha.pow(e);
      exponents[-beta / alpha] += e;
    }
  };
  long sum = 0;
  for (const auto& factor : xi.factors()) {
    absorb(f.a() - factor.point * f.c(), f.b() - factor.point * f.d(), factor.exponent);
    sum += factor.exponent;
  }
  absorb(f.c(), f.d(), -sum - 2);
  std::vector<DiffFactor> factors;
  for (const auto& [point, e] : exponents)
    if (e != 0) factors.push_back({point, e});
  SphereDifferential out(leading, std::move(factors));

  const MobiusMap inv = f.inverse();
  for (const auto& p : xi.singular_points()) ensure(out.order_at(inv(p)) == xi.order_at(p), "pullback moved an order");
  for (const auto& p : out.singular_points()) ensure(out.order_at(p) == xi.order_at(f(p)), "pullback created an order");
  return out;
}

// ---------------------------------------------------- marked automorphisms

namespace {

// A with A(1:0) = p1, A(0:1) = p2, A(1:1) = p3.
MobiusMap frame(const ProjectivePoint& p1, const ProjectivePoint& p2, const ProjectivePoint& p3) {
  // Solve lambda p1 + mu p2 = p3 in homogeneous coordinates.
  const GaussianRational det = p1.hx() * p2.hy() - p2.hx() * p1.hy();
  const GaussianRational lambda = (p3.hx() * p2.hy() - p2.hx() * p3.hy()) / det;
  const GaussianRational mu = (p1.hx() * p3.hy() - p3.hx() * p1.hy()) / det;
  return {lambda * p1.hx(), mu * p2.hx(), lambda * p1.hy(), mu * p2.hy()};
}

void assert_group(const std::vector<MobiusMap>& maps) {
  auto has = [&](const MobiusMap& f) { return std::binary_search(maps.begin(), maps.end(), f); };
  ensure(has(MobiusMap::identity()), "automorphism set misses the identity");
  for (const auto& f : maps) {
    ensure(has(f.inverse()), "automorphism set not closed under inverse");
    for (const auto& g : maps) ensure(has(compose(f, g)), "automorphism set not closed under composition");
  }
}

}  // namespace

BaseSymmetries marked_automorphisms(const SphereDifferential& xi, std::span<const Mark> marks_in) {
  std::vector<Mark> marks(marks_in.begin(), marks_in.end());
  std::sort(marks.begin(), marks.end(), [](const Mark& x, const Mark& y) { return x.point < y.point; });
  for (std::size_t k = 1; k < marks.size(); ++k)
    if (marks[k].point == marks[k - 1].point) throw Error(ErrorCode::InvalidMarks, "repeated mark " + to_string(marks[k].point));
  auto find_mark = [&](const ProjectivePoint& p) -> const Mark* {
    auto it = std::lower_bound(marks.begin(), marks.end(), p, [](const Mark& m, const ProjectivePoint& q) { return m.point < q; });
    return it != marks.end() && it->point == p ? &*it : nullptr;
  };
  for (const auto& p : xi.singular_points())
    if (!find_mark(p)) throw Error(ErrorCode::InvalidMarks, "singular point " + to_string(p) + " is not marked");

  BaseSymmetries result;
  if (marks.size() <= 1) {
    result.infinite = true;
    result.maps_complete = false;
    return result;
  }

  if (marks.size() == 2) {
    const ProjectivePoint& p = marks[0].point;
    const ProjectivePoint& q = marks[1].point;
    const long k = xi.order_at(p);
    if (k == -1) {
      result.infinite = true;
      result.maps_complete = false;
      return result;
    }
    // T sends p to 0 and q to infinity; in that chart xi = C z^k dz and the
    // symmetries are z -> a z with a^(k+1) = 1 (a swap would need k = -1).
    const MobiusMap t(p.hy(), -p.hx(), q.hy(), -q.hx());
    const std::uint64_t n = static_cast<std::uint64_t>(k + 1 < 0 ? -(k + 1) : k + 1);
    result.order = n;
    const GaussianRational roots[] = {GaussianRational(1), GaussianRational(-1), GaussianRational::imaginary_unit(),
                                      -GaussianRational::imaginary_unit()};
    for (const auto& a : roots) {
      if (!(a.pow(static_cast<long>(n)) == GaussianRational(1))) continue;
      const MobiusMap f = compose(t.inverse(), compose(MobiusMap(a, 0, 0, 1), t));
      ensure(mobius_pullback(f, xi) == xi, "rotation in the normal chart does not preserve the differential");
      result.maps.push_back(f);
    }
    std::sort(result.maps.begin(), result.maps.end());
    result.maps_complete = result.maps.size() == n;
    if (result.maps_complete) assert_group(result.maps);
    return result;
  }

  auto compatible = [&](const Mark& from, const Mark& to) {
    return from.label == to.label && xi.order_at(from.point) == xi.order_at(to.point);
  };
  const Mark& p1 = marks[0];
  const Mark& p2 = marks[1];
  const Mark& p3 = marks[2];
  const MobiusMap source_inv = frame(p1.point, p2.point, p3.point).inverse();
  for (const auto& q1 : marks) {
    if (!compatible(p1, q1)) continue;
    for (const auto& q2 : marks) {
      if (&q2 == &q1 || !compatible(p2, q2)) continue;
      for (const auto& q3 : marks) {
        if (&q3 == &q1 || &q3 == &q2 || !compatible(p3, q3)) continue;
        const MobiusMap f = compose(frame(q1.point, q2.point, q3.point), source_inv);
        bool permutes = true;
        for (const auto& m : marks) {
          const Mark* image = find_mark(f(m.point));
          if (!image || image->label != m.label) {
            permutes = false;
            break;
          }
        }
        if (permutes && mobius_pullback(f, xi) == xi) result.maps.push_back(f);
      }
    }
  }
  std::sort(result.maps.begin(), result.maps.end());
  result.order = result.maps.size();
  assert_group(result.maps);
  return result;
}

}  // namespace polecover
