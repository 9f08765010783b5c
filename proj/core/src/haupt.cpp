#include "polecover/haupt.hpp"

#include "polecover/error.hpp"

namespace polecover {

void PeriodCharacter::validate() const {
  if (genus < 0) throw Error(ErrorCode::InvalidInput, "negative genus");
  const auto g = static_cast<std::size_t>(genus);
  if (alpha.size() != g || beta.size() != g)
    throw Error(ErrorCode::InvalidInput, "alpha and beta need exactly genus entries each");
  GaussianRational sum;
  for (const auto& v : peripheral) sum += v;
  if (!sum.is_zero()) throw Error(ErrorCode::InvalidInput, "peripheral values must sum to zero");
}

Rational volume(const PeriodCharacter& chi) {
  chi.validate();
  Rational vol(0);
  for (std::size_t i = 0; i < chi.alpha.size(); ++i) vol += (chi.alpha[i].conj() * chi.beta[i]).im();
  return vol;
}

PeriodCharacter direct_sum(const PeriodCharacter& x, const PeriodCharacter& y) {
  PeriodCharacter out = x;
  out.genus += y.genus;
  out.alpha.insert(out.alpha.end(), y.alpha.begin(), y.alpha.end());
  out.beta.insert(out.beta.end(), y.beta.begin(), y.beta.end());
  out.peripheral.insert(out.peripheral.end(), y.peripheral.begin(), y.peripheral.end());
  return out;
}

namespace {

IntegerMatrix zero_matrix(std::size_t n) { return IntegerMatrix(n, std::vector<Integer>(n, Integer(0))); }

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  const std::size_t n = a.size();
  IntegerMatrix out = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

IntegerMatrix transpose(const IntegerMatrix& a) {
  IntegerMatrix out = zero_matrix(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[j][i] = a[i][j];
  return out;
}

// x -> x + sign <v, x> v with <v, x> = v^T J x.
IntegerMatrix transvection(const std::vector<Integer>& v, const IntegerMatrix& j, int sign) {
  const std::size_t n = v.size();
  std::vector<Integer> vj(n);  // v^T J
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t k = 0; k < n; ++k) vj[c] += v[k] * j[k][c];
  IntegerMatrix out = zero_matrix(n);
  for (std::size_t r = 0; r < n; ++r) {
    out[r][r] = 1;
    for (std::size_t c = 0; c < n; ++c) out[r][c] += sign * v[r] * vj[c];
  }
  return out;
}

}  // namespace

IntegerMatrix symplectic_form(long genus) {
  IntegerMatrix j = zero_matrix(static_cast<std::size_t>(2 * genus));
  for (std::size_t i = 0; i < static_cast<std::size_t>(genus); ++i) {
    j[2 * i][2 * i + 1] = 1;
    j[2 * i + 1][2 * i] = -1;
  }
  return j;
}

bool is_symplectic(const IntegerMatrix& m) {
  const std::size_t n = m.size();
  if (n % 2 != 0) return false;
  for (const auto& row : m)
    if (row.size() != n) return false;
  const IntegerMatrix j = symplectic_form(static_cast<long>(n / 2));
  return multiply(multiply(transpose(m), j), m) == j;
}

PeriodCharacter symplectic_change(const PeriodCharacter& chi, const IntegerMatrix& m) {
  chi.validate();
  const std::size_t n = 2 * chi.alpha.size();
  if (m.size() != n || !is_symplectic(m)) throw Error(ErrorCode::NotSymplectic, "matrix is not in Sp(2g, Z)");
  std::vector<GaussianRational> v(n);
  for (std::size_t i = 0; i < chi.alpha.size(); ++i) {
    v[2 * i] = chi.alpha[i];
    v[2 * i + 1] = chi.beta[i];
  }
  PeriodCharacter out = chi;
  for (std::size_t r = 0; r < n; ++r) {
    GaussianRational acc;
    for (std::size_t c = 0; c < n; ++c)
      if (m[r][c] != 0) acc += GaussianRational(Rational(m[r][c])) * v[c];
    (r % 2 == 0 ? out.alpha[r / 2] : out.beta[r / 2]) = acc;
  }
  return out;
}

std::vector<IntegerMatrix> symplectic_generators(long genus) {
  const std::size_t n = static_cast<std::size_t>(2 * genus);
  const IntegerMatrix j = symplectic_form(genus);
  std::vector<IntegerMatrix> out;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Integer> v(n);
    v[k] = 1;
    out.push_back(transvection(v, j, 1));
    for (std::size_t l = k + 1; l < n; ++l) {
      std::vector<Integer> w = v;
      w[l] = 1;
      out.push_back(transvection(w, j, 1));
    }
  }
  return out;
}

IntegerMatrix random_symplectic(long genus, std::mt19937_64& rng, int length) {
  const std::size_t n = static_cast<std::size_t>(2 * genus);
  const IntegerMatrix j = symplectic_form(genus);
  IntegerMatrix m = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  std::uniform_int_distribution<std::size_t> coord(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int step = 0; step < length; ++step) {
    std::vector<Integer> v(n);
    v[coord(rng)] = 1;
    if (coin(rng)) v[coord(rng)] += 1;
    m = multiply(m, transvection(v, j, coin(rng) ? 1 : -1));
  }
  return m;
}

LatticeStatus image_lattice_status(const PeriodCharacter& chi) {
  std::vector<std::vector<Rational>> rows;
  for (const auto* list : {&chi.alpha, &chi.beta, &chi.peripheral})
    for (const auto& v : *list) rows.push_back({v.re(), v.im()});
  const IntegerLattice lattice = rational_span(2, rows);
  LatticeStatus status;
  if (lattice.rank() == 0) return status;
  if (lattice.rank() == 1) {
    status.rank = ImageRank::Rank1;
    return status;
  }
  status.rank = ImageRank::Lattice;
  status.covolume = covolume2(lattice);
  return status;
}

std::string_view to_string(HauptVerdict v) {
  switch (v) {
    case HauptVerdict::RealizableFirstKind: return "RealizableFirstKind";
    case HauptVerdict::FailsVolume: return "FailsVolume";
    case HauptVerdict::FailsLatticeCondition: return "FailsLatticeCondition";
    case HauptVerdict::RealizableWithPoles: return "RealizableWithPoles";
  }
  return "?";
}

HauptResult haupt_realizable(const PeriodCharacter& chi, bool want_second_kind) {
  chi.validate();
  HauptResult r;
  r.volume = volume(chi);
  r.image = image_lattice_status(chi);
  if (chi.punctures() >= 1) {
    r.verdict = HauptVerdict::RealizableWithPoles;
    bool nonzero = false;
    for (const auto& v : chi.peripheral) nonzero = nonzero || !v.is_zero();
    if (want_second_kind && nonzero)
      r.note = "nonzero peripheral values: every realization has poles with nonzero residue (third kind)";
    return r;
  }
  if (sgn(r.volume) <= 0)
    r.verdict = HauptVerdict::FailsVolume;
  else if (r.image.rank == ImageRank::Lattice && r.volume < 2 * r.image.covolume)
    r.verdict = HauptVerdict::FailsLatticeCondition;
  else
    r.verdict = HauptVerdict::RealizableFirstKind;
  return r;
}

}  // namespace polecover
