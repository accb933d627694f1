#include "dowker/order.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>

#include "dowker/error.hpp"

namespace dowker {

namespace {

std::string pair_text(const Poset& p, std::size_t x, std::size_t y) {
  return "(" + p.element(x) + ", " + p.element(y) + ")";
}

std::vector<std::size_t> minimal_of(const Poset& p, const Bits& set) {
  std::vector<std::size_t> out;
  for_each_member(set, [&](std::size_t x) {
    Bits below = p.down_set(x) & set;
    below.reset(x);
    if (below.none()) out.push_back(x);
  });
  return out;
}

std::vector<std::size_t> maximal_of(const Poset& p, const Bits& set) {
  std::vector<std::size_t> out;
  for_each_member(set, [&](std::size_t x) {
    Bits above = p.up_set(x) & set;
    above.reset(x);
    if (above.none()) out.push_back(x);
  });
  return out;
}

Bits common_upper(const Poset& p, const Bits& subset) {
  Bits u = full_bits(p.size());
  for_each_member(subset, [&](std::size_t s) { u &= p.up_set(s); });
  return u;
}

Bits common_lower(const Poset& p, const Bits& subset) {
  Bits l = full_bits(p.size());
  for_each_member(subset, [&](std::size_t s) { l &= p.down_set(s); });
  return l;
}

}  // namespace

Poset::Poset(std::vector<std::string> elements, const std::vector<std::vector<bool>>& leq)
    : elements_(std::move(elements)) {
  const auto n = elements_.size();
  if (leq.size() != n) throw Error(Errc::DimensionMismatch, "leq has wrong row count");
  up_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n) throw Error(Errc::DimensionMismatch, "leq has wrong column count");
    for (std::size_t j = 0; j < n; ++j)
      if (leq[i][j]) up_[i].set(j);
  }
  validate();
}

Poset Poset::from_up_sets(std::vector<std::string> elements, std::vector<Bits> up) {
  Poset p;
  p.elements_ = std::move(elements);
  p.up_ = std::move(up);
  const auto n = p.elements_.size();
  if (p.up_.size() != n) throw Error(Errc::DimensionMismatch, "up-set count differs from element count");
  for (const auto& u : p.up_)
    if (u.size() != n) throw Error(Errc::DimensionMismatch, "up-set universe differs from element count");
  p.validate();
  return p;
}

void Poset::validate() {
  const auto n = elements_.size();
  {
    std::vector<std::string> sorted = elements_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw Error(Errc::DuplicateLabel, "element '" + *dup + "' repeated");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!up_[i].test(i)) throw Error(Errc::NotReflexive, "missing " + pair_text(*this, i, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (up_[i].test(j) && up_[j].test(i))
        throw Error(Errc::NotAntisymmetric, "both " + pair_text(*this, i, j) + " and " +
                                                pair_text(*this, j, i));
  // x <= y implies up(y) is contained in up(x).
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y = up_[x].find_first(); y != Bits::npos; y = up_[x].find_next(y)) {
      if (!up_[y].is_subset_of(up_[x])) {
        const auto z = (up_[y] - up_[x]).find_first();
        throw Error(Errc::NotTransitive, pair_text(*this, x, y) + " and " + pair_text(*this, y, z) +
                                             " without " + pair_text(*this, x, z));
      }
    }
  }
  down_.assign(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x)
    for_each_member(up_[x], [&](std::size_t y) { down_[y].set(x); });
}

std::optional<std::size_t> Poset::index_of(const std::string& element) const {
  auto it = std::find(elements_.begin(), elements_.end(), element);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

Poset dual(const Poset& p) {
  std::vector<Bits> up(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) up[i] = p.down_set(i);
  return Poset::from_up_sets(p.elements(), std::move(up));
}

std::vector<Cover> hasse(const Poset& p) {
  std::vector<Cover> covers;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for_each_member(p.up_set(x), [&](std::size_t y) {
      if (y == x) return;
      Bits between = p.up_set(x) & p.down_set(y);
      between.reset(x);
      between.reset(y);
      if (between.none()) covers.push_back({x, y});
    });
  }
  return covers;
}

BoundSets meet_join_sets(const Poset& p, std::size_t x, std::size_t y) {
  const Bits pair = make_bits(p.size(), {x, y});
  return {maximal_of(p, common_lower(p, pair)), minimal_of(p, common_upper(p, pair))};
}

std::optional<std::size_t> least_upper_bound(const Poset& p, const Bits& subset) {
  const Bits upper = common_upper(p, subset);
  for (auto u = upper.find_first(); u != Bits::npos; u = upper.find_next(u))
    if (upper.is_subset_of(p.up_set(u))) return u;
  return std::nullopt;
}

std::optional<std::size_t> greatest_lower_bound(const Poset& p, const Bits& subset) {
  const Bits lower = common_lower(p, subset);
  for (auto l = lower.find_first(); l != Bits::npos; l = lower.find_next(l))
    if (lower.is_subset_of(p.down_set(l))) return l;
  return std::nullopt;
}

std::optional<std::size_t> top(const Poset& p) { return greatest_lower_bound(p, Bits(p.size())); }

std::optional<std::size_t> bottom(const Poset& p) { return least_upper_bound(p, Bits(p.size())); }

LatticeVerdict is_complete_lattice(const Poset& p) {
  LatticeVerdict v;
  if (p.size() == 0) {
    v.reason = "empty poset has no join of the empty family";
    return v;
  }
  if (!top(p)) {
    v.witness = maximal_of(p, full_bits(p.size()));
    v.reason = "no top element";
    return v;
  }
  if (!bottom(p)) {
    v.witness = minimal_of(p, full_bits(p.size()));
    v.reason = "no bottom element";
    return v;
  }
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = x + 1; y < p.size(); ++y) {
      const auto b = meet_join_sets(p, x, y);
      if (b.joins.size() != 1 || b.meets.size() != 1) {
        v.witness = {x, y};
        v.reason = "pair " + p.element(x) + ", " + p.element(y) + " has " +
                   std::to_string(b.joins.size()) + " minimal upper bounds and " +
                   std::to_string(b.meets.size()) + " maximal lower bounds";
        return v;
      }
    }
  }
  v.is_lattice = true;
  return v;
}

namespace {

using Signature = std::array<std::size_t, 5>;

std::vector<Signature> signatures(const Poset& p) {
  const auto n = p.size();
  std::vector<Signature> sig(n, Signature{});
  for (const auto& c : hasse(p)) {
    ++sig[c.upper][2];
    ++sig[c.lower][3];
  }
  // Rank: longest chain ending at x. Processing by down-set size gives a
  // linear extension.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.down_set(a).count() < p.down_set(b).count();
  });
  std::vector<std::size_t> rank(n, 0);
  for (auto x : order)
    for_each_member(p.down_set(x), [&](std::size_t y) {
      if (y != x) rank[x] = std::max(rank[x], rank[y] + 1);
    });
  for (std::size_t x = 0; x < n; ++x) {
    sig[x][0] = p.down_set(x).count();
    sig[x][1] = p.up_set(x).count();
    sig[x][4] = rank[x];
  }
  return sig;
}

struct IsoSearch {
  const Poset& p;
  const Poset& q;
  std::uint64_t budget;
  std::vector<std::size_t> order;                    // p elements in assignment order
  std::vector<std::vector<std::size_t>> candidates;  // per p element
  std::vector<std::size_t> map;
  std::vector<bool> used;
  std::uint64_t steps = 0;
  bool exhausted = false;

  bool consistent(std::size_t depth, std::size_t x, std::size_t fx) const {
    for (std::size_t d = 0; d < depth; ++d) {
      const auto y = order[d];
      const auto fy = map[y];
      if (p.leq(x, y) != q.leq(fx, fy) || p.leq(y, x) != q.leq(fy, fx)) return false;
    }
    return true;
  }

  bool assign(std::size_t depth) {
    if (depth == order.size()) return true;
    const auto x = order[depth];
    for (auto fx : candidates[x]) {
      if (used[fx]) continue;
      if (++steps > budget) {
        exhausted = true;
        return false;
      }
      if (!consistent(depth, x, fx)) continue;
      map[x] = fx;
      used[fx] = true;
      if (assign(depth + 1)) return true;
      used[fx] = false;
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

IsoResult order_isomorphism(const Poset& p, const Poset& q, std::uint64_t budget) {
  IsoResult result;
  if (p.size() != q.size()) {
    result.verdict = IsoVerdict::SizeMismatch;
    return result;
  }
  const auto n = p.size();
  const auto sp = signatures(p);
  const auto sq = signatures(q);
  {
    auto a = sp;
    auto b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      result.verdict = IsoVerdict::NotIsomorphic;
      return result;
    }
  }
  IsoSearch search{p, q, budget, {}, std::vector<std::vector<std::size_t>>(n), std::vector<std::size_t>(n),
                   std::vector<bool>(n, false)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (sp[x] == sq[y]) search.candidates[x].push_back(y);
  search.order.resize(n);
  std::iota(search.order.begin(), search.order.end(), 0);
  // Fewest candidates first, then by rank so comparabilities prune early.
  std::stable_sort(search.order.begin(), search.order.end(), [&](std::size_t a, std::size_t b) {
    return std::tuple(search.candidates[a].size(), sp[a][4]) < std::tuple(search.candidates[b].size(), sp[b][4]);
  });
  const bool ok = search.assign(0);
  result.steps = search.steps;
  if (ok) {
    result.verdict = IsoVerdict::Found;
    result.mapping = std::move(search.map);
  } else {
    result.verdict = search.exhausted ? IsoVerdict::Exhausted : IsoVerdict::NotIsomorphic;
  }
  return result;
}

bool is_order_isomorphism(const Poset& p, const Poset& q, const std::vector<std::size_t>& f) {
  if (p.size() != q.size() || f.size() != p.size()) return false;
  std::vector<bool> hit(q.size(), false);
  for (auto y : f) {
    if (y >= q.size() || hit[y]) return false;
    hit[y] = true;
  }
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(x, y) != q.leq(f[x], f[y])) return false;
  return true;
}

bool is_join_dense(const Poset& p, const Bits& subset) {
  if (!is_complete_lattice(p)) throw Error(Errc::NotALattice, "join density needs a complete lattice");
  for (std::size_t x = 0; x < p.size(); ++x) {
    const auto j = least_upper_bound(p, subset & p.down_set(x));
    if (!j || *j != x) return false;
  }
  return true;
}

bool is_meet_dense(const Poset& p, const Bits& subset) {
  if (!is_complete_lattice(p)) throw Error(Errc::NotALattice, "meet density needs a complete lattice");
  for (std::size_t x = 0; x < p.size(); ++x) {
    const auto m = greatest_lower_bound(p, subset & p.up_set(x));
    if (!m || *m != x) return false;
  }
  return true;
}

}  // namespace dowker
