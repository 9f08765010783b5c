#include "fixtures.hpp"

#include <algorithm>
#include <map>

#include "oracles.hpp"

namespace polecover::testing {

namespace {

int mod(long a, long m) { return static_cast<int>(((a % m) + m) % m); }

long power_mod(long r, long e, long m) {
  long out = 1;
  for (long k = 0; k < e; ++k) out = out * r % m;
  return out;
}

AbstractGroup cyclic(int n) {
  return {"C" + std::to_string(n), n, [n](int a, int b) { return (a + b) % n; }};
}

AbstractGroup product(const AbstractGroup& x, const AbstractGroup& y) {
  const int ny = y.order;
  return {x.name + "x" + y.name, x.order * ny, [x, y, ny](int a, int b) {
            return x.mul(a / ny, b / ny) * ny + y.mul(a % ny, b % ny);
          }};
}

// Z_m x| Z_n with the generator of Z_n acting by multiplication by r.
AbstractGroup metacyclic(std::string name, int m, int n, int r) {
  return {std::move(name), m * n, [m, n, r](int x, int y) {
            const int a1 = x % m, b1 = x / m, a2 = y % m, b2 = y / m;
            return mod(a1 + power_mod(r, b1, m) * a2, m) + m * ((b1 + b2) % n);
          }};
}

// Order 4n: (a1, b1)(a2, b2) = (a1 + (-1)^b1 a2 + n [b1 and b2], b1 xor b2), a mod 2n.
AbstractGroup dicyclic(std::string name, int n) {
  const int m = 2 * n;
  return {std::move(name), 2 * m, [n, m](int x, int y) {
            const int a1 = x % m, b1 = x / m, a2 = y % m, b2 = y / m;
            return mod(a1 + (b1 ? -a2 : a2) + (b1 && b2 ? n : 0), m) + m * (b1 ^ b2);
          }};
}

// (Z4 x Z2) x| Z2 where the involution sends (1,0) -> u and (0,1) -> v.
AbstractGroup z4z2_by_z2(std::string name, std::pair<int, int> u, std::pair<int, int> v) {
  auto phi = [u, v](int e) {
    const int x = e % 4, y = e / 4;
    return mod(x * u.first + y * v.first, 4) + 4 * mod(x * u.second + y * v.second, 2);
  };
  auto add = [](int e, int f) { return (e % 4 + f % 4) % 4 + 4 * ((e / 4 + f / 4) % 2); };
  return {std::move(name), 16, [phi, add](int x, int y) {
            const int n1 = x % 8, t1 = x / 8, n2 = y % 8, t2 = y / 8;
            return add(n1, t1 ? phi(n2) : n2) + 8 * (t1 ^ t2);
          }};
}

// A x| Z2 with the involution acting by inversion on the abelian group A.
AbstractGroup generalized_dihedral(std::string name, const AbstractGroup& a, std::function<int(int)> inv) {
  const int n = a.order;
  return {std::move(name), 2 * n, [a, inv, n](int x, int y) {
            const int a1 = x % n, t1 = x / n, a2 = y % n, t2 = y / n;
            return a.mul(a1, t1 ? inv(a2) : a2) + n * (t1 ^ t2);
          }};
}

NamedGroup named(const AbstractGroup& g) { return {g.name, regular_representation(g)}; }

PermGroup from_cycles(std::size_t degree, const std::vector<std::vector<std::vector<std::uint32_t>>>& gens) {
  std::vector<Permutation> perms;
  for (const auto& c : gens) perms.push_back(Permutation::from_cycles(degree, c));
  return PermGroup::generate(degree, perms);
}

}  // namespace

PermGroup regular_representation(const AbstractGroup& g) {
  const auto n = static_cast<std::size_t>(g.order);
  auto right = [&](int h) {
    std::vector<std::uint32_t> im(n);
    for (int x = 0; x < g.order; ++x) im[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(g.mul(x, h));
    return Permutation(std::move(im));
  };
  std::vector<Permutation> gens;
  std::size_t current = 1;
  for (int h = 1; h < g.order && current < n; ++h) {
    std::vector<Permutation> trial = gens;
    trial.push_back(right(h));
    const std::size_t order = *subgroup_order(n, trial, n);
    if (order > current) {
      gens = std::move(trial);
      current = order;
    }
  }
  PermGroup group = PermGroup::generate(n, gens);
  if (group.order() != n) throw std::logic_error("bad multiplication table for " + g.name);
  return group;
}

PermGroup cyclic_group(std::size_t n) {
  std::vector<std::uint32_t> cycle(n);
  for (std::size_t k = 0; k < n; ++k) cycle[k] = static_cast<std::uint32_t>(k);
  return PermGroup::generate(n, {Permutation::from_cycles(n, {cycle})});
}

PermGroup symmetric_group(std::size_t n) {
  std::vector<std::uint32_t> cycle(n);
  for (std::size_t k = 0; k < n; ++k) cycle[k] = static_cast<std::uint32_t>(k);
  return PermGroup::generate(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cycle})});
}

PermGroup psl27() {
  // z -> z + 1 and z -> -1/z on the projective line over F_7, infinity = 7.
  return PermGroup::generate(8, {Permutation({1, 2, 3, 4, 5, 6, 0, 7}), Permutation({7, 6, 3, 2, 5, 4, 1, 0})});
}

const std::vector<NamedGroup>& small_groups() {
  static const std::vector<NamedGroup> groups = [] {
    const auto c2 = cyclic(2), c3 = cyclic(3), c4 = cyclic(4);
    const auto q8 = dicyclic("Q8", 2);
    const auto d8 = metacyclic("D8", 4, 2, 3);
    std::vector<NamedGroup> out;
    out.push_back(named(cyclic(1)));
    out.push_back(named(c2));
    out.push_back(named(c3));
    out.push_back(named(c4));
    out.push_back(named(product(c2, c2)));
    out.push_back(named(cyclic(5)));
    out.push_back(named(cyclic(6)));
    out.push_back(named(metacyclic("S3", 3, 2, 2)));
    out.push_back(named(cyclic(7)));
    out.push_back(named(cyclic(8)));
    out.push_back(named(product(c4, c2)));
    out.push_back(named(product(c2, product(c2, c2))));
    out.push_back(named(d8));
    out.push_back(named(q8));
    out.push_back(named(cyclic(9)));
    out.push_back(named(product(c3, c3)));
    out.push_back(named(cyclic(10)));
    out.push_back(named(metacyclic("D10", 5, 2, 4)));
    out.push_back(named(cyclic(11)));
    out.push_back(named(cyclic(12)));
    out.push_back(named(product(cyclic(6), c2)));
    out.push_back(named(metacyclic("D12", 6, 2, 5)));
    out.push_back(named(metacyclic("Dic3", 3, 4, 2)));
    out.push_back({"A4", from_cycles(4, {{{0, 1, 2}}, {{0, 1}, {2, 3}}})});
    out.push_back(named(cyclic(13)));
    out.push_back(named(cyclic(14)));
    out.push_back(named(metacyclic("D14", 7, 2, 6)));
    out.push_back(named(cyclic(15)));
    out.push_back(named(cyclic(16)));
    out.push_back(named(product(c4, c4)));
    out.push_back(named(z4z2_by_z2("(C4xC2):C2", {1, 1}, {0, 1})));
    out.push_back(named(metacyclic("C4:C4", 4, 4, 3)));
    out.push_back(named(product(cyclic(8), c2)));
    out.push_back(named(metacyclic("M16", 8, 2, 5)));
    out.push_back(named(metacyclic("D16", 8, 2, 7)));
    out.push_back(named(metacyclic("QD16", 8, 2, 3)));
    out.push_back(named(dicyclic("Q16", 4)));
    out.push_back(named(product(c4, product(c2, c2))));
    out.push_back(named(product(c2, d8)));
    out.push_back(named(product(c2, q8)));
    out.push_back(named(z4z2_by_z2("Pauli", {1, 0}, {2, 1})));
    out.push_back(named(product(product(c2, c2), product(c2, c2))));
    return out;
  }();
  return groups;
}

const std::vector<NamedGroup>& groups_up_to_24() {
  static const std::vector<NamedGroup> groups = [] {
    std::vector<NamedGroup> out = small_groups();
    const auto c2 = cyclic(2), c3 = cyclic(3);
    const auto c3c3 = product(c3, c3);
    out.push_back(named(cyclic(18)));
    out.push_back(named(metacyclic("D18", 9, 2, 8)));
    out.push_back(named(product(c3, metacyclic("S3", 3, 2, 2))));
    out.push_back(named(generalized_dihedral("(C3xC3):C2", c3c3, [](int e) { return mod(-(e / 3), 3) * 3 + mod(-(e % 3), 3); })));
    out.push_back(named(product(cyclic(6), c3)));
    out.push_back(named(cyclic(20)));
    out.push_back(named(metacyclic("D20", 10, 2, 9)));
    out.push_back(named(dicyclic("Dic5", 5)));
    out.push_back(named(metacyclic("F20", 5, 4, 2)));
    out.push_back(named(product(cyclic(10), c2)));
    out.push_back(named(cyclic(21)));
    out.push_back(named(metacyclic("C7:C3", 7, 3, 2)));
    out.push_back(named(cyclic(22)));
    out.push_back(named(metacyclic("D22", 11, 2, 10)));
    out.push_back(named(cyclic(24)));
    out.push_back({"S4", symmetric_group(4)});
    out.push_back(named(metacyclic("D24", 12, 2, 11)));
    out.push_back(named(dicyclic("Dic6", 6)));
    out.push_back(named(metacyclic("C3:C8", 3, 8, 2)));
    out.push_back(named(product(c2, cyclic(12))));
    out.push_back({"C2xA4", from_cycles(6, {{{0, 1, 2}}, {{0, 1}, {2, 3}}, {{4, 5}}})});
    return out;
  }();
  return groups;
}

Fingerprint fingerprint(const PermGroup& g) {
  Fingerprint f;
  f.order_counts.assign(g.order() + 1, 0);
  for (const auto& x : g.elements()) ++f.order_counts[element_order(x)];
  const auto derived = oracle::derived_subgroup(g);
  f.abelian = derived.size() == 1;
  for (const auto& x : g.elements()) {
    std::size_t k = 1;
    Permutation p = x;
    while (!derived.count(p)) {
      p = p * x;
      ++k;
    }
    f.abelianization_orders.push_back(k);
  }
  std::sort(f.abelianization_orders.begin(), f.abelianization_orders.end());
  for (const auto& x : g.elements()) {
    bool central = true;
    for (const auto& y : g.generators()) central = central && x * y == y * x;
    f.center += central ? 1 : 0;
  }
  return f;
}

CoverSpec random_cover_spec(std::mt19937_64& rng, const RandomCoverParams& params) {
  std::vector<const NamedGroup*> pool;
  for (const auto& g : groups_up_to_24())
    if (g.group.order() <= params.max_group_order) pool.push_back(&g);
  const std::vector<ProjectivePoint> points = {
      ProjectivePoint(0),  ProjectivePoint(1),  ProjectivePoint(-1), ProjectivePoint(2),
      ProjectivePoint(-3), ProjectivePoint(GaussianRational::imaginary_unit()),
      ProjectivePoint(GaussianRational(Rational(1), Rational(1))), ProjectivePoint(GaussianRational(Rational(1, 2))),
      ProjectivePoint(GaussianRational(Rational(-1, 2), Rational(1))), ProjectivePoint::infinity()};
  std::uniform_int_distribution<std::size_t> pick_group(0, pool.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_m(1, params.max_marks);
  std::uniform_int_distribution<long> pick_exp(-3, 3);
  std::uniform_int_distribution<long> pick_coef(-3, 3);

  while (true) {
    const PermGroup& g = pool[pick_group(rng)]->group;
    const std::size_t m = pick_m(rng);
    std::uniform_int_distribution<std::size_t> pick_elem(0, g.order() - 1);
    std::vector<Permutation> mono;
    bool found = false;
    for (int attempt = 0; attempt < 40 && !found; ++attempt) {
      mono.clear();
      Permutation product = g.identity();
      for (std::size_t i = 0; i + 1 < m; ++i) {
        mono.push_back(g.elements()[pick_elem(rng)]);
        product = product * mono.back();
      }
      mono.push_back(product.inverse());
      found = g.generated_by(mono);
    }
    if (!found) continue;

    std::vector<ProjectivePoint> marks = points;
    std::shuffle(marks.begin(), marks.end(), rng);
    marks.resize(m);
    const bool has_inf = std::find(marks.begin(), marks.end(), ProjectivePoint::infinity()) != marks.end();
    std::vector<std::pair<GaussianRational, long>> exps;
    long sum = 0;
    for (const auto& p : marks) {
      if (p.is_infinity()) continue;
      exps.emplace_back(p.finite(), pick_exp(rng));
      sum += exps.back().second;
    }
    if (!has_inf) {
      // The order at infinity must vanish: sum of exponents is -2.
      exps.back().second += -2 - sum;
    }
    std::vector<DiffFactor> factors;
    for (const auto& [p, e] : exps)
      if (e != 0) factors.push_back({p, e});
    GaussianRational c(Rational(pick_coef(rng)), Rational(pick_coef(rng)));
    if (c.is_zero()) c = GaussianRational(1);
    return CoverSpec{SphereDifferential(c, std::move(factors)), std::move(marks), g, std::move(mono)};
  }
}

}  // namespace polecover::testing
