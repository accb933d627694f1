#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dowker/bitset.hpp"

namespace dowker {

/// Finite partial order over indexed elements. Elements are compared by
/// index only; the string identifiers are carried for export.
class Poset {
 public:
  Poset() = default;

  /// Validates reflexivity, antisymmetry and transitivity; throws Error with
  /// NotReflexive / NotAntisymmetric / NotTransitive naming a witness pair.
  Poset(std::vector<std::string> elements, const std::vector<std::vector<bool>>& leq);

  /// `up[i]` holds every j with i <= j. Validated like the matrix form.
  static Poset from_up_sets(std::vector<std::string> elements, std::vector<Bits> up);

  template <class Leq>
  static Poset from_relation(std::vector<std::string> elements, Leq&& leq) {
    const auto n = elements.size();
    std::vector<Bits> up(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq(i, j)) up[i].set(j);
    return from_up_sets(std::move(elements), std::move(up));
  }

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::string& element(std::size_t i) const { return elements_[i]; }

  bool leq(std::size_t x, std::size_t y) const { return up_[x].test(y); }
  bool less(std::size_t x, std::size_t y) const { return x != y && up_[x].test(y); }

  /// {y : x <= y}
  const Bits& up_set(std::size_t x) const { return up_[x]; }
  /// {y : y <= x}
  const Bits& down_set(std::size_t x) const { return down_[x]; }

  std::optional<std::size_t> index_of(const std::string& element) const;

 private:
  void validate();

  std::vector<std::string> elements_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
};

Poset dual(const Poset& p);

struct Cover {
  std::size_t lower;
  std::size_t upper;
  friend bool operator==(const Cover&, const Cover&) = default;
};

/// Reflexive-transitive reduction. Covers are sorted by (lower, upper).
std::vector<Cover> hasse(const Poset& p);

struct BoundSets {
  std::vector<std::size_t> meets;  ///< maximal common lower bounds
  std::vector<std::size_t> joins;  ///< minimal common upper bounds
};

BoundSets meet_join_sets(const Poset& p, std::size_t x, std::size_t y);

/// Least upper bound of an arbitrary subset (the bottom for the empty set),
/// if it exists.
std::optional<std::size_t> least_upper_bound(const Poset& p, const Bits& subset);
std::optional<std::size_t> greatest_lower_bound(const Poset& p, const Bits& subset);

std::optional<std::size_t> top(const Poset& p);
std::optional<std::size_t> bottom(const Poset& p);

struct LatticeVerdict {
  bool is_lattice = false;
  std::vector<std::size_t> witness;  ///< offending subset on failure
  std::string reason;
  explicit operator bool() const noexcept { return is_lattice; }
};

/// Finite case: top, bottom, and a unique join and meet for every pair.
LatticeVerdict is_complete_lattice(const Poset& p);

enum class IsoVerdict { Found, NotIsomorphic, SizeMismatch, Exhausted };

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::NotIsomorphic;
  std::vector<std::size_t> mapping;  ///< p-index -> q-index when Found
  std::uint64_t steps = 0;
  bool found() const noexcept { return verdict == IsoVerdict::Found; }
};

inline constexpr std::uint64_t kDefaultIsoBudget = 10'000'000;

/// Backtracking search for an order isomorphism, pruned by per-element
/// signatures (elements below, above, lower covers, upper covers, rank).
/// Returns Exhausted once `budget` candidate assignments have been tried.
IsoResult order_isomorphism(const Poset& p, const Poset& q,
                            std::uint64_t budget = kDefaultIsoBudget);

bool is_order_isomorphism(const Poset& p, const Poset& q, const std::vector<std::size_t>& f);

/// Throws NotALattice unless `p` is a complete lattice.
bool is_join_dense(const Poset& p, const Bits& subset);
bool is_meet_dense(const Poset& p, const Bits& subset);

}  // namespace dowker
