#include "polecover/cover.hpp"

#include <algorithm>

#include "polecover/error.hpp"

namespace polecover {

namespace {

void validate(const CoverSpec& spec) {
  const auto& marks = spec.marks;
  if (marks.empty()) throw Error(ErrorCode::InvalidSpec, "a cover needs at least one mark");
  if (spec.monodromy.size() != marks.size())
    throw Error(ErrorCode::InvalidSpec, "monodromy has " + std::to_string(spec.monodromy.size()) + " entries for " +
                                            std::to_string(marks.size()) + " marks");
  for (std::size_t i = 0; i < marks.size(); ++i)
    for (std::size_t j = i + 1; j < marks.size(); ++j)
      if (marks[i] == marks[j]) throw Error(ErrorCode::InvalidSpec, "repeated mark " + to_string(marks[i]));
  for (const auto& p : spec.base.singular_points())
    if (std::find(marks.begin(), marks.end(), p) == marks.end())
      throw Error(ErrorCode::InvalidSpec, "singular point " + to_string(p) + " is not marked");
  Permutation product = spec.group.identity();
  for (std::size_t i = 0; i < spec.monodromy.size(); ++i) {
    const auto& x = spec.monodromy[i];
    if (x.degree() != spec.group.degree() || !spec.group.contains(x))
      throw Error(ErrorCode::InvalidSpec, "monodromy entry " + std::to_string(i) + " is not in the group");
    product = product * x;
  }
  if (!product.is_identity()) throw Error(ErrorCode::InvalidSpec, "monodromy product is not the identity");
  if (!spec.group.generated_by(spec.monodromy)) throw Error(ErrorCode::InvalidSpec, "monodromy does not generate the group");
}

PeriodLattice span_of(const std::vector<GaussianRational>& values) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(values.size());
  for (const auto& v : values) rows.push_back({v.re(), v.im()});
  return PeriodLattice{rational_span(2, rows)};
}

}  // namespace

CoveredSurface covered_surface(CoverSpec spec) {
  validate(spec);
  CoveredSurface s;
  const long n = static_cast<long>(spec.group.order());
  long rh = -2 * n;
  long gb = 0;
  GaussianRational residue_sum;
  bool second = true;
  for (std::size_t i = 0; i < spec.marks.size(); ++i) {
    BranchRecord b;
    b.mark = spec.marks[i];
    b.base_order = spec.base.order_at(b.mark);
    b.base_residue = spec.base.residue_at(b.mark);
    b.local_degree = element_order(spec.monodromy[i]);
    b.sheets = spec.group.order() / b.local_degree;
    ensure(b.sheets * b.local_degree == spec.group.order(), "local degree does not divide |G|");
    const long d = static_cast<long>(b.local_degree);
    const long s_i = static_cast<long>(b.sheets);
    b.upstairs_order = d * (b.base_order + 1) - 1;
    b.upstairs_residue = GaussianRational(Rational(d)) * b.base_residue;
    ensure(quotient_order(b.upstairs_order, d) == b.base_order, "quotient order round trip failed");
    rh += s_i * (d - 1);
    gb += s_i * b.upstairs_order;
    residue_sum += GaussianRational(Rational(s_i)) * b.upstairs_residue;
    if (b.upstairs_order < 0 && !b.upstairs_residue.is_zero()) second = false;
    s.branches_.push_back(std::move(b));
  }
  ensure(rh == gb, "Riemann-Hurwitz gives 2g-2 = " + std::to_string(rh) + " but Gauss-Bonnet gives " + std::to_string(gb));
  ensure(rh % 2 == 0 && rh >= -2, "Euler characteristic " + std::to_string(rh) + " is not that of a closed surface");
  ensure(residue_sum.is_zero(), "upstairs residues do not sum to zero");
  s.kind_ = second ? DifferentialKind::Second : DifferentialKind::Third;
  ensure(s.kind_ == kind_of(spec.base), "pullback changed the kind of the differential");
  s.rh_euler_ = rh;
  s.gb_sum_ = gb;
  s.genus_ = rh / 2 + 1;
  s.spec_ = std::move(spec);
  return s;
}

std::map<long, std::uint64_t> CoveredSurface::singularity_table() const {
  std::map<long, std::uint64_t> table;
  for (const auto& b : branches_)
    if (b.upstairs_order != 0) table[b.upstairs_order] += b.sheets;
  return table;
}

std::vector<GaussianRational> PeriodLattice::generators() const {
  std::vector<GaussianRational> out;
  for (const auto& row : lattice.rational_basis()) out.emplace_back(row[0], row[1]);
  return out;
}

PeriodLattice base_period_lattice(const CoveredSurface& surface) {
  std::vector<GaussianRational> residues;
  for (const auto& b : surface.branches()) residues.push_back(b.base_residue);
  return span_of(residues);
}

PeriodLattice period_lattice(const CoveredSurface& surface) {
  const auto& spec = surface.spec();
  const std::size_t r = spec.marks.size() - 1;
  const std::span<const Permutation> images(spec.monodromy.data(), r);
  const IntegerLattice kernel = kernel_abelianization(spec.group, images);
  std::vector<GaussianRational> values;
  for (const auto& row : kernel.basis()) {
    GaussianRational v;
    for (std::size_t j = 0; j < r; ++j) v += GaussianRational(Rational(row[j])) * surface.branches()[j].base_residue;
    values.push_back(v);
  }
  PeriodLattice out = span_of(values);

  const PeriodLattice base = base_period_lattice(surface);
  ensure(out.lattice.is_sublattice_of(base.lattice), "period lattice is not inside the base image");
  ensure(out.lattice.rank() == base.lattice.rank(), "period lattice has smaller rank than the base image");
  if (!base.is_zero()) {
    const Integer index = out.lattice.index_in(base.lattice);
    const Integer order(static_cast<unsigned long>(spec.group.order()));
    ensure(mpz_divisible_p(order.get_mpz_t(), index.get_mpz_t()) != 0, "period lattice index does not divide |G|");
  }
  return out;
}

CertifiedAut translation_group(const CoveredSurface& surface) {
  std::vector<Mark> marks;
  for (const auto& b : surface.branches())
    if (b.local_degree >= 2 || b.base_order != 0) marks.push_back({b.mark, b.local_degree});
  CertifiedAut aut;
  aut.witness = marked_automorphisms(surface.spec().base, marks);
  if (aut.witness.infinite)
    throw Error(ErrorCode::UncertifiableBase, "the marked base differential has infinitely many symmetries");
  aut.lower = surface.deck_order();
  if (aut.witness.trivial()) {
    aut.upper = aut.lower;
    aut.status = AutStatus::Exact;
    return aut;
  }
  aut.upper = aut.lower * aut.witness.order;
  if (surface.genus() >= 2) {
    const auto hurwitz = static_cast<std::uint64_t>(84 * (surface.genus() - 1));
    if (hurwitz < aut.upper) {
      aut.upper = hurwitz;
      aut.hurwitz_tightened = true;
    }
  }
  ensure(aut.lower <= aut.upper, "deck group exceeds the translation bound");
  aut.status = aut.lower == aut.upper ? AutStatus::Exact : AutStatus::Bounded;
  return aut;
}

Tristate is_large(const CoveredSurface&, const CertifiedAut& aut) {
  return aut.status == AutStatus::Exact ? Tristate::True : Tristate::Unknown;
}

long quotient_order(long upstairs_order, long local_degree) {
  if (local_degree < 1) throw Error(ErrorCode::InvalidInput, "local degree must be positive");
  if ((upstairs_order + 1) % local_degree != 0)
    throw Error(ErrorCode::NotAQuotientOrder,
                std::to_string(local_degree) + " does not divide " + std::to_string(upstairs_order + 1));
  return (upstairs_order + 1) / local_degree - 1;
}

}  // namespace polecover
