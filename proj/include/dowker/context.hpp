#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "dowker/bitset.hpp"

namespace dowker {

/// Subset of one side of a formal context. The tag keeps object and
/// attribute sets from being mixed up; `bits()` exposes the raw set.
template <class Tag>
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : bits_(universe) {}
  explicit IndexSet(Bits bits) : bits_(std::move(bits)) {}

  static IndexSet full(std::size_t universe) { return IndexSet(full_bits(universe)); }
  static IndexSet of(std::size_t universe, std::initializer_list<std::size_t> list) {
    return IndexSet(make_bits(universe, list));
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool contains(std::size_t i) const { return bits_.test(i); }
  void insert(std::size_t i) { bits_.set(i); }
  void erase(std::size_t i) { bits_.reset(i); }
  bool is_subset_of(const IndexSet& other) const { return bits_.is_subset_of(other.bits_); }
  std::vector<std::size_t> members() const { return dowker::members(bits_); }
  const Bits& bits() const noexcept { return bits_; }

  IndexSet& operator&=(const IndexSet& o) { bits_ &= o.bits_; return *this; }
  IndexSet& operator|=(const IndexSet& o) { bits_ |= o.bits_; return *this; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator-(const IndexSet& a, const IndexSet& b) { return IndexSet(a.bits_ - b.bits_); }
  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.bits_ == b.bits_; }

 private:
  Bits bits_;
};

struct ObjectTag {};
struct AttributeTag {};
using ObjectSet = IndexSet<ObjectTag>;
using AttributeSet = IndexSet<AttributeTag>;

/// (G, M, I): ordered unique object and attribute labels with a Boolean
/// incidence matrix. Rows and columns are both kept as bitsets so that
/// either derivation is an AND-fold.
class FormalContext {
 public:
  FormalContext() = default;
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                const std::vector<std::vector<bool>>& incidence);
  /// `rows[g]` is the attribute set of object g.
  static FormalContext from_rows(std::vector<std::string> objects, std::vector<std::string> attributes,
                                 std::vector<Bits> rows);

  std::size_t num_objects() const noexcept { return objects_.size(); }
  std::size_t num_attributes() const noexcept { return attributes_.size(); }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::vector<std::string>& attributes() const noexcept { return attributes_; }

  bool incident(std::size_t g, std::size_t m) const { return rows_[g].test(m); }
  /// {g}'
  const Bits& row(std::size_t g) const { return rows_[g]; }
  /// {m}'
  const Bits& column(std::size_t m) const { return columns_[m]; }

  /// Throw UnknownLabel.
  std::size_t object_index(std::string_view label) const;
  std::size_t attribute_index(std::string_view label) const;

  ObjectSet object_set(std::initializer_list<std::string_view> labels) const;
  AttributeSet attribute_set(std::initializer_list<std::string_view> labels) const;

  friend bool operator==(const FormalContext& a, const FormalContext& b) {
    return a.objects_ == b.objects_ && a.attributes_ == b.attributes_ && a.rows_ == b.rows_;
  }

 private:
  void build_columns();

  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<Bits> rows_;
  std::vector<Bits> columns_;
};

/// A' = {m : gIm for all g in A}; the empty set derives to all of M.
AttributeSet derive_objects(const FormalContext& ctx, const ObjectSet& objects);
/// B' = {g : gIm for all m in B}; the empty set derives to all of G.
ObjectSet derive_attributes(const FormalContext& ctx, const AttributeSet& attributes);

ObjectSet close_objects(const FormalContext& ctx, const ObjectSet& objects);
AttributeSet close_attributes(const FormalContext& ctx, const AttributeSet& attributes);

/// (M, G, I^T).
FormalContext transpose(const FormalContext& ctx);

/// No zero row and no zero column; false for an empty G or M.
bool is_total(const FormalContext& ctx);

/// Index maps between two contexts: object_map : G1 -> G2, attribute_map : M1 -> M2.
struct ContextMap {
  std::vector<std::size_t> object_map;
  std::vector<std::size_t> attribute_map;
};

struct MorphismVerdict {
  bool holds = false;
  std::string witness;
  explicit operator bool() const noexcept { return holds; }
};

/// I2(f(g), h(m)) = 1 whenever I1(g, m) = 1.
MorphismVerdict is_rel_morphism(const FormalContext& c1, const FormalContext& c2, const ContextMap& map);

inline constexpr std::size_t kDefaultSubsetScanBits = 20;

/// f(A)' = h(A') for every A in 2^G1 and h(B)' = f(B') for every B in 2^M1,
/// by exhaustive scan. Throws TooLarge when |G1| or |M1| exceeds `max_bits`.
/// The scan is split across OpenMP threads; the reported witness is the
/// smallest failing subset mask in either case.
MorphismVerdict is_ctx_morphism(const FormalContext& c1, const FormalContext& c2, const ContextMap& map,
                                std::size_t max_bits = kDefaultSubsetScanBits);
/// Single-threaded reference for is_ctx_morphism.
MorphismVerdict is_ctx_morphism_serial(const FormalContext& c1, const FormalContext& c2,
                                       const ContextMap& map, std::size_t max_bits = kDefaultSubsetScanBits);

/// The four-object, six-attribute relation used throughout the docs and tests:
/// a:0125, b:345, c:145, d:012.
FormalContext running_example();

}  // namespace dowker
