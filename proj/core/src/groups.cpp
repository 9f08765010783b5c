#include "polecover/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "polecover/error.hpp"

namespace polecover {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw Error(ErrorCode::InvalidInput, "image array is not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0U);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0U);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const auto x = cycle[k];
      if (x >= degree || used[x]) throw Error(ErrorCode::InvalidInput, "cycles overlap or leave the degree");
      used[x] = true;
      im[x] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) throw Error(ErrorCode::InvalidInput, "composing permutations of different degree");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[x] = next.images_[images_[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[images_[x]] = static_cast<std::uint32_t>(x);
  return out;
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent) : static_cast<unsigned long long>(exponent);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += "(";
    std::uint32_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
      x = images_[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : p.images()) h = (h ^ x) * 1099511628211ULL;
  return h;
}

std::uint64_t element_order(const Permutation& g) {
  std::uint64_t order = 1;
  std::vector<bool> seen(g.degree(), false);
  for (std::uint32_t start = 0; start < g.degree(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::uint32_t x = start; !seen[x]; x = g(x)) {
      seen[x] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

namespace {

std::optional<std::vector<Permutation>> closure(std::size_t degree, std::span<const Permutation> gens, std::size_t cap) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> out;
  const Permutation id = Permutation::identity(degree);
  seen.insert(id);
  out.push_back(id);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = out[head] * g;
      if (seen.insert(next).second) {
        if (out.size() >= cap) return std::nullopt;
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

}  // namespace

std::optional<std::size_t> subgroup_order(std::size_t degree, std::span<const Permutation> gens, std::size_t cap) {
  auto elems = closure(degree, gens, cap);
  if (!elems) return std::nullopt;
  return elems->size();
}

PermGroup PermGroup::generate(std::size_t degree, std::vector<Permutation> generators, std::size_t cap) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw Error(ErrorCode::InvalidInput, "generator degree differs from group degree");
  auto elems = closure(degree, generators, cap);
  if (!elems) throw Error(ErrorCode::GroupTooLarge, "closure exceeds the order cap of " + std::to_string(cap));
  PermGroup group;
  group.degree_ = degree;
  group.generators_ = std::move(generators);
  group.elements_ = std::move(*elems);
  std::sort(group.elements_.begin(), group.elements_.end());
  group.index_.reserve(group.elements_.size());
  for (std::size_t k = 0; k < group.elements_.size(); ++k) group.index_.emplace(group.elements_[k], k);
  group.identity_index_ = group.index_.at(Permutation::identity(degree));
  return group;
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool PermGroup::generated_by(std::span<const Permutation> elements) const {
  for (const auto& e : elements)
    if (!contains(e)) return false;
  const auto n = subgroup_order(degree_, elements, order());
  return n && *n == order();
}

// ---------------------------------------------------------------- FreeWord

FreeWord::FreeWord(std::vector<int> letters) {
  for (int x : letters) {
    if (x == 0) throw Error(ErrorCode::InvalidInput, "free word letters are nonzero signed indices");
    if (!letters_.empty() && letters_.back() == -x)
      letters_.pop_back();
    else
      letters_.push_back(x);
  }
}

FreeWord FreeWord::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (auto& x : inv) x = -x;
  return FreeWord(std::move(inv));
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  std::vector<int> all = letters_;
  all.insert(all.end(), o.letters_.begin(), o.letters_.end());
  return FreeWord(std::move(all));
}

Permutation FreeWord::evaluate(std::span<const Permutation> images, std::size_t degree) const {
  Permutation acc = Permutation::identity(degree);
  for (int x : letters_) {
    const auto k = static_cast<std::size_t>(x < 0 ? -x : x);
    if (k > images.size()) throw Error(ErrorCode::InvalidInput, "word letter " + std::to_string(x) + " out of range");
    acc = acc * (x < 0 ? images[k - 1].inverse() : images[k - 1]);
  }
  return acc;
}

IntegerVector FreeWord::exponent_sums(std::size_t rank) const {
  IntegerVector v(rank);
  for (int x : letters_) {
    const auto k = static_cast<std::size_t>(x < 0 ? -x : x);
    if (k > rank) throw Error(ErrorCode::InvalidInput, "word letter out of range");
    v[k - 1] += x < 0 ? -1 : 1;
  }
  return v;
}

// ----------------------------------------------------- kernel abelianization

namespace {

struct CayleyTree {
  std::vector<FreeWord> path;  // tree word from the identity to each element
  std::vector<std::pair<std::size_t, std::size_t>> non_tree_edges;  // (element, generator)
};

CayleyTree spanning_tree(const PermGroup& group, std::span<const Permutation> images) {
  for (const auto& x : images)
    if (!group.contains(x)) throw Error(ErrorCode::NotGenerating, "image is not an element of the group");
  if (!group.generated_by(images)) throw Error(ErrorCode::NotGenerating, "images do not generate the group");
  const std::size_t n = group.order();
  CayleyTree tree;
  tree.path.resize(n);
  std::vector<bool> visited(n, false);
  std::deque<std::size_t> queue{group.identity_index()};
  visited[group.identity_index()] = true;
  while (!queue.empty()) {
    const std::size_t g = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < images.size(); ++j) {
      const std::size_t h = *group.index_of(group.elements()[g] * images[j]);
      if (!visited[h]) {
        visited[h] = true;
        tree.path[h] = tree.path[g] * FreeWord({static_cast<int>(j + 1)});
        queue.push_back(h);
      } else {
        tree.non_tree_edges.emplace_back(g, j);
      }
    }
  }
  return tree;
}

}  // namespace

std::vector<FreeWord> schreier_generators(const PermGroup& group, std::span<const Permutation> images) {
  const CayleyTree tree = spanning_tree(group, images);
  std::vector<FreeWord> out;
  out.reserve(tree.non_tree_edges.size());
  for (const auto& [g, j] : tree.non_tree_edges) {
    const std::size_t h = *group.index_of(group.elements()[g] * images[j]);
    out.push_back(tree.path[g] * FreeWord({static_cast<int>(j + 1)}) * tree.path[h].inverse());
  }
  return out;
}

IntegerLattice kernel_abelianization(const PermGroup& group, std::span<const Permutation> images) {
  const std::size_t r = images.size();
  const CayleyTree tree = spanning_tree(group, images);
  std::vector<IntegerVector> sums(group.order());
  for (std::size_t k = 0; k < sums.size(); ++k) sums[k] = tree.path[k].exponent_sums(r);
  std::vector<IntegerVector> rows;
  rows.reserve(tree.non_tree_edges.size());
  for (const auto& [g, j] : tree.non_tree_edges) {
    const std::size_t h = *group.index_of(group.elements()[g] * images[j]);
    IntegerVector v = sums[g];
    v[j] += 1;
    for (std::size_t k = 0; k < r; ++k) v[k] -= sums[h][k];
    rows.push_back(std::move(v));
  }
  IntegerLattice lattice = hnf(r, rows);

  const Integer order(static_cast<unsigned long>(group.order()));
  for (std::size_t j = 0; j < r; ++j) {
    IntegerVector e(r);
    e[j] = order;
    ensure(lattice.contains(std::span<const Integer>(e)), "kernel lattice misses |G| e_j");
  }
  if (r > 0) ensure(mpz_divisible_p(order.get_mpz_t(), lattice.index().get_mpz_t()) != 0, "kernel lattice index does not divide |G|");
  return lattice;
}

// ------------------------------------------------------ generating tuples

namespace {

struct TupleSearch {
  const PermGroup& group;
  std::span<const std::uint64_t> orders;
  std::vector<std::uint64_t> element_orders;
  std::vector<Permutation> chosen;

  bool run(std::size_t pos, const Permutation& prefix) {
    const std::size_t k = orders.size();
    if (pos + 1 == k) {
      Permutation last = prefix.inverse();
      if (element_order(last) != orders[pos]) return false;
      chosen.push_back(std::move(last));
      if (group.generated_by(chosen)) return true;
      chosen.pop_back();
      return false;
    }
    const auto& elems = group.elements();
    for (std::size_t e = 0; e < elems.size(); ++e) {
      if (element_orders[e] != orders[pos]) continue;
      chosen.push_back(elems[e]);
      if (run(pos + 1, prefix * elems[e])) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Permutation>> find_generating_tuple(const PermGroup& group, std::span<const std::uint64_t> orders) {
  if (orders.empty()) {
    if (group.order() == 1) return std::vector<Permutation>{};
    return std::nullopt;
  }
  TupleSearch search{group, orders, {}, {}};
  search.element_orders.reserve(group.order());
  for (const auto& g : group.elements()) search.element_orders.push_back(element_order(g));
  if (search.run(0, group.identity())) return search.chosen;
  return std::nullopt;
}

}  // namespace polecover
