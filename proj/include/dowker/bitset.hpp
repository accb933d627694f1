#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace dowker {

/// Subset of a fixed index universe. All sets in one computation share the
/// universe size of the structure they index into.
using Bits = boost::dynamic_bitset<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& bits) const noexcept;
};

Bits make_bits(std::size_t universe, std::initializer_list<std::size_t> members);
Bits make_bits(std::size_t universe, const std::vector<std::size_t>& members);
Bits full_bits(std::size_t universe);
/// Bits whose low `universe` positions mirror the binary digits of `mask`.
Bits bits_from_mask(std::size_t universe, std::uint64_t mask);

std::vector<std::size_t> members(const Bits& bits);

/// Lexicographic order on the sorted member sequences; shorter prefixes first.
bool lex_less(const Bits& a, const Bits& b);
/// Faces order: by cardinality, then lexicographically.
bool graded_lex_less(const Bits& a, const Bits& b);

template <class F>
void for_each_member(const Bits& bits, F&& f) {
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) f(i);
}

/// Joins labels of the members: concatenated when every label is a single
/// character (the compact "ad|012" notation), comma-separated otherwise.
std::string compact_labels(const std::vector<std::string>& labels, const Bits& bits);
std::vector<std::string> member_labels(const std::vector<std::string>& labels, const Bits& bits);

}  // namespace dowker
