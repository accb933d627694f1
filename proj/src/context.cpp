#include "dowker/context.hpp"

#include <algorithm>
#include <limits>

#include "dowker/error.hpp"

namespace dowker {

namespace {

void require_unique(const std::vector<std::string>& labels, const char* what) {
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    throw Error(Errc::DuplicateLabel, std::string(what) + " label '" + *dup + "' repeated");
}

std::size_t find_label(const std::vector<std::string>& labels, std::string_view label, const char* what) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error(Errc::UnknownLabel, std::string(what) + " '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             const std::vector<std::vector<bool>>& incidence)
    : objects_(std::move(objects)), attributes_(std::move(attributes)) {
  require_unique(objects_, "object");
  require_unique(attributes_, "attribute");
  if (incidence.size() != objects_.size())
    throw Error(Errc::DimensionMismatch, "incidence has " + std::to_string(incidence.size()) +
                                             " rows for " + std::to_string(objects_.size()) + " objects");
  rows_.assign(objects_.size(), Bits(attributes_.size()));
  for (std::size_t g = 0; g < objects_.size(); ++g) {
    if (incidence[g].size() != attributes_.size())
      throw Error(Errc::DimensionMismatch, "row " + std::to_string(g) + " has " +
                                               std::to_string(incidence[g].size()) + " entries for " +
                                               std::to_string(attributes_.size()) + " attributes");
    for (std::size_t m = 0; m < attributes_.size(); ++m)
      if (incidence[g][m]) rows_[g].set(m);
  }
  build_columns();
}

FormalContext FormalContext::from_rows(std::vector<std::string> objects, std::vector<std::string> attributes,
                                       std::vector<Bits> rows) {
  FormalContext ctx;
  ctx.objects_ = std::move(objects);
  ctx.attributes_ = std::move(attributes);
  require_unique(ctx.objects_, "object");
  require_unique(ctx.attributes_, "attribute");
  if (rows.size() != ctx.objects_.size()) throw Error(Errc::DimensionMismatch, "row count differs from object count");
  for (const auto& r : rows)
    if (r.size() != ctx.attributes_.size())
      throw Error(Errc::DimensionMismatch, "row universe differs from attribute count");
  ctx.rows_ = std::move(rows);
  ctx.build_columns();
  return ctx;
}

void FormalContext::build_columns() {
  columns_.assign(attributes_.size(), Bits(objects_.size()));
  for (std::size_t g = 0; g < objects_.size(); ++g)
    for_each_member(rows_[g], [&](std::size_t m) { columns_[m].set(g); });
}

std::size_t FormalContext::object_index(std::string_view label) const {
  return find_label(objects_, label, "object");
}

std::size_t FormalContext::attribute_index(std::string_view label) const {
  return find_label(attributes_, label, "attribute");
}

ObjectSet FormalContext::object_set(std::initializer_list<std::string_view> labels) const {
  ObjectSet s(num_objects());
  for (auto l : labels) s.insert(object_index(l));
  return s;
}

AttributeSet FormalContext::attribute_set(std::initializer_list<std::string_view> labels) const {
  AttributeSet s(num_attributes());
  for (auto l : labels) s.insert(attribute_index(l));
  return s;
}

AttributeSet derive_objects(const FormalContext& ctx, const ObjectSet& objects) {
  if (objects.universe() != ctx.num_objects())
    throw Error(Errc::UniverseMismatch, "object set over " + std::to_string(objects.universe()) +
                                            " elements, context has " + std::to_string(ctx.num_objects()));
  Bits out = full_bits(ctx.num_attributes());
  for_each_member(objects.bits(), [&](std::size_t g) { out &= ctx.row(g); });
  return AttributeSet(std::move(out));
}

ObjectSet derive_attributes(const FormalContext& ctx, const AttributeSet& attributes) {
  if (attributes.universe() != ctx.num_attributes())
    throw Error(Errc::UniverseMismatch, "attribute set over " + std::to_string(attributes.universe()) +
                                            " elements, context has " + std::to_string(ctx.num_attributes()));
  Bits out = full_bits(ctx.num_objects());
  for_each_member(attributes.bits(), [&](std::size_t m) { out &= ctx.column(m); });
  return ObjectSet(std::move(out));
}

ObjectSet close_objects(const FormalContext& ctx, const ObjectSet& objects) {
  return derive_attributes(ctx, derive_objects(ctx, objects));
}

AttributeSet close_attributes(const FormalContext& ctx, const AttributeSet& attributes) {
  return derive_objects(ctx, derive_attributes(ctx, attributes));
}

FormalContext transpose(const FormalContext& ctx) {
  std::vector<Bits> rows(ctx.num_attributes());
  for (std::size_t m = 0; m < ctx.num_attributes(); ++m) rows[m] = ctx.column(m);
  return FormalContext::from_rows(ctx.attributes(), ctx.objects(), std::move(rows));
}

bool is_total(const FormalContext& ctx) {
  if (ctx.num_objects() == 0 || ctx.num_attributes() == 0) return false;
  for (std::size_t g = 0; g < ctx.num_objects(); ++g)
    if (ctx.row(g).none()) return false;
  for (std::size_t m = 0; m < ctx.num_attributes(); ++m)
    if (ctx.column(m).none()) return false;
  return true;
}

namespace {

void check_map_shape(const FormalContext& c1, const FormalContext& c2, const ContextMap& map) {
  if (map.object_map.size() != c1.num_objects() || map.attribute_map.size() != c1.num_attributes())
    throw Error(Errc::DimensionMismatch, "context map is not total on the source context");
  for (auto g : map.object_map)
    if (g >= c2.num_objects()) throw Error(Errc::DimensionMismatch, "object map leaves the target context");
  for (auto m : map.attribute_map)
    if (m >= c2.num_attributes()) throw Error(Errc::DimensionMismatch, "attribute map leaves the target context");
}

Bits image(const Bits& set, const std::vector<std::size_t>& f, std::size_t target_universe) {
  Bits out(target_universe);
  for_each_member(set, [&](std::size_t i) { out.set(f[i]); });
  return out;
}

// Both Galois-compatibility equations for a single subset mask. Returns an
// empty string when they hold.
std::string object_side_failure(const FormalContext& c1, const FormalContext& c2, const ContextMap& map,
                                std::uint64_t mask) {
  const ObjectSet a(bits_from_mask(c1.num_objects(), mask));
  const Bits lhs = derive_objects(c2, ObjectSet(image(a.bits(), map.object_map, c2.num_objects()))).bits();
  const Bits rhs = image(derive_objects(c1, a).bits(), map.attribute_map, c2.num_attributes());
  if (lhs == rhs) return {};
  return "A = {" + compact_labels(c1.objects(), a.bits()) + "}: f(A)' = {" + compact_labels(c2.attributes(), lhs) +
         "} but g(A') = {" + compact_labels(c2.attributes(), rhs) + "}";
}

std::string attribute_side_failure(const FormalContext& c1, const FormalContext& c2, const ContextMap& map,
                                   std::uint64_t mask) {
  const AttributeSet b(bits_from_mask(c1.num_attributes(), mask));
  const Bits lhs =
      derive_attributes(c2, AttributeSet(image(b.bits(), map.attribute_map, c2.num_attributes()))).bits();
  const Bits rhs = image(derive_attributes(c1, b).bits(), map.object_map, c2.num_objects());
  if (lhs == rhs) return {};
  return "B = {" + compact_labels(c1.attributes(), b.bits()) + "}: g(B)' = {" + compact_labels(c2.objects(), lhs) +
         "} but f(B') = {" + compact_labels(c2.objects(), rhs) + "}";
}

void check_scan_size(const FormalContext& c1, std::size_t max_bits) {
  const auto limit = std::min<std::size_t>(max_bits, 62);
  if (c1.num_objects() > limit || c1.num_attributes() > limit)
    throw Error(Errc::TooLarge, "exhaustive subset scan over " + std::to_string(c1.num_objects()) + " objects and " +
                                    std::to_string(c1.num_attributes()) + " attributes exceeds " +
                                    std::to_string(limit) + " bits");
}

template <class Failure>
std::uint64_t first_failing_mask_parallel(std::size_t bits, Failure&& failure) {
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << bits);
  std::int64_t first = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : first)
  for (std::int64_t mask = 0; mask < total; ++mask) {
    if (mask < first && !failure(static_cast<std::uint64_t>(mask)).empty()) first = mask;
  }
  return first == std::numeric_limits<std::int64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                           : static_cast<std::uint64_t>(first);
}

template <class Failure>
std::uint64_t first_failing_mask_serial(std::size_t bits, Failure&& failure) {
  const std::uint64_t total = std::uint64_t{1} << bits;
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (!failure(mask).empty()) return mask;
  return std::numeric_limits<std::uint64_t>::max();
}

template <class Scan>
MorphismVerdict ctx_morphism_with(const FormalContext& c1, const FormalContext& c2, const ContextMap& map,
                                  std::size_t max_bits, Scan&& scan) {
  check_map_shape(c1, c2, map);
  check_scan_size(c1, max_bits);
  constexpr auto none = std::numeric_limits<std::uint64_t>::max();
  auto objects = [&](std::uint64_t m) { return object_side_failure(c1, c2, map, m); };
  if (auto mask = scan(c1.num_objects(), objects); mask != none) return {false, objects(mask)};
  auto attributes = [&](std::uint64_t m) { return attribute_side_failure(c1, c2, map, m); };
  if (auto mask = scan(c1.num_attributes(), attributes); mask != none) return {false, attributes(mask)};
  return {true, {}};
}

}  // namespace

MorphismVerdict is_rel_morphism(const FormalContext& c1, const FormalContext& c2, const ContextMap& map) {
  check_map_shape(c1, c2, map);
  for (std::size_t g = 0; g < c1.num_objects(); ++g) {
    for (auto m = c1.row(g).find_first(); m != Bits::npos; m = c1.row(g).find_next(m)) {
      if (!c2.incident(map.object_map[g], map.attribute_map[m])) {
        return {false, "(" + c1.objects()[g] + ", " + c1.attributes()[m] + ") maps to (" +
                           c2.objects()[map.object_map[g]] + ", " + c2.attributes()[map.attribute_map[m]] +
                           ") which is not incident"};
      }
    }
  }
  return {true, {}};
}

MorphismVerdict is_ctx_morphism(const FormalContext& c1, const FormalContext& c2, const ContextMap& map,
                                std::size_t max_bits) {
  return ctx_morphism_with(c1, c2, map, max_bits, [](std::size_t bits, auto& failure) {
    return first_failing_mask_parallel(bits, failure);
  });
}

MorphismVerdict is_ctx_morphism_serial(const FormalContext& c1, const FormalContext& c2, const ContextMap& map,
                                       std::size_t max_bits) {
  return ctx_morphism_with(c1, c2, map, max_bits, [](std::size_t bits, auto& failure) {
    return first_failing_mask_serial(bits, failure);
  });
}

FormalContext running_example() {
  return FormalContext({"a", "b", "c", "d"}, {"0", "1", "2", "3", "4", "5"},
                       {{true, true, true, false, false, true},
                        {false, false, false, true, true, true},
                        {false, true, false, false, true, true},
                        {true, true, true, false, false, false}});
}

}  // namespace dowker
