#include "dowker/bitset.hpp"

#include <algorithm>
#include <iterator>

#include <boost/functional/hash.hpp>

namespace dowker {

std::size_t BitsHash::operator()(const Bits& bits) const noexcept {
  std::size_t seed = bits.size();
  std::vector<Bits::block_type> blocks;
  blocks.reserve(bits.num_blocks());
  boost::to_block_range(bits, std::back_inserter(blocks));
  for (auto b : blocks) boost::hash_combine(seed, b);
  return seed;
}

Bits make_bits(std::size_t universe, std::initializer_list<std::size_t> list) {
  Bits bits(universe);
  for (auto i : list) bits.set(i);
  return bits;
}

Bits make_bits(std::size_t universe, const std::vector<std::size_t>& list) {
  Bits bits(universe);
  for (auto i : list) bits.set(i);
  return bits;
}

Bits full_bits(std::size_t universe) {
  Bits bits(universe);
  bits.set();
  return bits;
}

Bits bits_from_mask(std::size_t universe, std::uint64_t mask) {
  Bits bits(universe);
  for (std::size_t i = 0; i < universe && i < 64; ++i) {
    if ((mask >> i) & 1U) bits.set(i);
  }
  return bits;
}

std::vector<std::size_t> members(const Bits& bits) {
  std::vector<std::size_t> out;
  out.reserve(bits.count());
  for_each_member(bits, [&](std::size_t i) { out.push_back(i); });
  return out;
}

bool lex_less(const Bits& a, const Bits& b) {
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != Bits::npos && j != Bits::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return i == Bits::npos && j != Bits::npos;
}

bool graded_lex_less(const Bits& a, const Bits& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  return lex_less(a, b);
}

std::string compact_labels(const std::vector<std::string>& labels, const Bits& bits) {
  const bool single = std::all_of(labels.begin(), labels.end(),
                                  [](const std::string& s) { return s.size() == 1; });
  std::string out;
  bool first = true;
  for_each_member(bits, [&](std::size_t i) {
    if (!single && !first) out += ',';
    out += labels[i];
    first = false;
  });
  return out;
}

std::vector<std::string> member_labels(const std::vector<std::string>& labels, const Bits& bits) {
  std::vector<std::string> out;
  for_each_member(bits, [&](std::size_t i) { out.push_back(labels[i]); });
  return out;
}

}  // namespace dowker
