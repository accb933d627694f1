#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "dowker/concept.hpp"
#include "dowker/error.hpp"
#include "dowker/verify.hpp"
#include "oracles.hpp"

using namespace dowker;

namespace {

std::vector<std::string> notations(const ConceptLattice& lattice) {
  std::vector<std::string> out;
  for (const auto& c : lattice.concepts()) out.push_back(galois_notation(lattice.context(), c));
  return out;
}

std::string galois(const FormalContext& ctx, const GaloisPair& k) { return galois_notation(ctx, k); }

std::size_t find(const ConceptLattice& lattice, std::string_view text) {
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (galois_notation(lattice.context(), lattice[i]) == text) return i;
  FAIL("concept not found: " << text);
  return 0;
}

std::vector<std::vector<bool>> leq_matrix(const Poset& p) {
  std::vector<std::vector<bool>> out(p.size(), std::vector<bool>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) out[i][j] = p.leq(i, j);
  return out;
}

}  // namespace

TEST_CASE("running example has the ten listed concepts") {
  const auto lattice = enumerate_concepts(running_example());
  auto got = notations(lattice);
  std::vector<std::string> listed = {"|012345", "b|345", "c|145",  "a|0125", "bc|45",
                                     "ac|15",   "ad|012", "abc|5", "acd|1",  "abcd|"};
  std::sort(got.begin(), got.end());
  std::sort(listed.begin(), listed.end());
  CHECK(got == listed);
}

TEST_CASE("extreme cases") {
  const auto empty = enumerate_concepts(FormalContext({"g"}, {"m"}, {{false}}));
  CHECK(notations(empty).size() == 2);
  CHECK(empty.find_extent(ObjectSet(1)).has_value());
  CHECK(empty.find_extent(ObjectSet::full(1)).has_value());

  const auto full = enumerate_concepts(FormalContext({"g", "h"}, {"m", "n"}, {{true, true}, {true, true}}));
  REQUIRE(full.size() == 1);
  CHECK(full[0].extent == ObjectSet::full(2));
  CHECK(full[0].intent == AttributeSet::full(2));

  const auto none = enumerate_concepts(FormalContext({}, {}, {}));
  CHECK(none.size() == 1);
}

TEST_CASE("concepts generated by object and attribute sets") {
  const auto ctx = running_example();
  CHECK(galois(ctx, concept_of_objects(ctx, ctx.object_set({"a", "b"}))) == "abc|5");
  CHECK(galois(ctx, concept_of_attributes(ctx, ctx.attribute_set({"2"}))) == "ad|012");
  const auto top_intent = concept_of_objects(ctx, ObjectSet(4));
  CHECK(top_intent.intent == AttributeSet::full(6));
  CHECK(top_intent.extent == derive_attributes(ctx, AttributeSet::full(6)));
  CHECK(is_concept(ctx, top_intent));
  CHECK_FALSE(is_concept(ctx, GaloisPair{ctx.object_set({"d"}), ctx.attribute_set({"0", "1", "2"})}));
}

TEST_CASE("join and meet") {
  const auto lattice = enumerate_concepts(running_example());
  const auto& ctx = lattice.context();
  const std::vector<std::size_t> bc = {find(lattice, "b|345"), find(lattice, "c|145")};
  CHECK(galois(ctx, join(lattice, bc)) == "bc|45");
  const std::vector<std::size_t> m = {find(lattice, "acd|1"), find(lattice, "abc|5")};
  CHECK(galois(ctx, meet(lattice, m)) == "ac|15");
  const std::vector<std::size_t> one = {find(lattice, "ad|012")};
  CHECK(galois(ctx, join(lattice, one)) == "ad|012");
  CHECK(join(lattice, std::vector<std::size_t>{}) == lattice[lattice.bottom()]);
  CHECK(meet(lattice, std::vector<std::size_t>{}) == lattice[lattice.top()]);
}

TEST_CASE("join and meet agree with the order on all pairs") {
  for (std::size_t i = 0; i < 60; ++i) {
    const auto lattice = enumerate_concepts(random_context(context_seed(12, i), 6, 6, false));
    const auto& order = lattice.order();
    for (std::size_t x = 0; x < lattice.size(); ++x)
      for (std::size_t y = 0; y < lattice.size(); ++y) {
        const std::vector<std::size_t> pair = {x, y};
        const auto j = join(lattice, pair);
        const auto m = meet(lattice, pair);
        const auto lub = least_upper_bound(order, make_bits(lattice.size(), {x, y}));
        const auto glb = greatest_lower_bound(order, make_bits(lattice.size(), {x, y}));
        REQUIRE(lub.has_value());
        REQUIRE(glb.has_value());
        CHECK(j == lattice[*lub]);
        CHECK(m == lattice[*glb]);
      }
  }
}

TEST_CASE("reduced labels") {
  const auto lattice = enumerate_concepts(running_example());
  const auto& ctx = lattice.context();
  const auto reduced = reduced_labels(lattice);
  CHECK(galois(ctx, reduced[find(lattice, "ad|012")]) == "d|02");
  CHECK(galois(ctx, reduced[find(lattice, "abc|5")]) == "|5");
  CHECK(galois(ctx, reduced[find(lattice, "ac|15")]) == "|");
}

TEST_CASE("reduced labels reconstruct the full labels") {
  for (std::size_t i = 0; i < 100; ++i) {
    const auto lattice = enumerate_concepts(random_context(context_seed(13, i), 7, 7, i % 3 == 0));
    const auto reduced = reduced_labels(lattice);
    const auto& order = lattice.order();
    for (std::size_t k = 0; k < lattice.size(); ++k) {
      ObjectSet extent(lattice.context().num_objects());
      AttributeSet intent(lattice.context().num_attributes());
      for (std::size_t j = 0; j < lattice.size(); ++j) {
        if (order.leq(j, k)) extent |= reduced[j].extent;
        if (order.leq(k, j)) intent |= reduced[j].intent;
      }
      CHECK(extent == lattice[k].extent);
      CHECK(intent == lattice[k].intent);
    }
  }
}

TEST_CASE("object and attribute concepts") {
  const auto lattice = enumerate_concepts(running_example());
  const auto& ctx = lattice.context();
  CHECK(galois(ctx, lattice[gamma(lattice, "d")]) == "ad|012");
  CHECK(galois(ctx, lattice[mu(lattice, "4")]) == "bc|45");
  for (std::size_t g = 0; g < 4; ++g)
    for (std::size_t m = 0; m < 6; ++m) CHECK(lattice.order().leq(gamma(lattice, g), mu(lattice, m)) == ctx.incident(g, m));
  CHECK_THROWS_AS(gamma(lattice, "z"), Error);
}

TEST_CASE("NextClosure equals the subset-scan oracle") {
  for (std::size_t i = 0; i < 500; ++i) {
    const auto ctx = random_context(context_seed(2024, i), 7, 7, false);
    const auto lattice = enumerate_concepts(ctx);
    const auto expected = oracle::concepts(oracle::from_context(ctx));
    std::set<std::pair<oracle::Mask, oracle::Mask>> got;
    for (const auto& c : lattice.concepts())
      got.emplace(static_cast<oracle::Mask>(c.extent.bits().to_ulong()),
                  static_cast<oracle::Mask>(c.intent.bits().to_ulong()));
    CHECK(got.size() == lattice.size());
    CHECK(got == expected);
  }
}

TEST_CASE("intents come out in lectic order") {
  for (std::size_t i = 0; i < 100; ++i) {
    const auto lattice = enumerate_concepts(random_context(context_seed(5, i), 6, 6, false));
    for (std::size_t k = 1; k < lattice.size(); ++k) {
      // lectic: the smallest attribute where the intents differ is in the later one
      const auto& a = lattice[k - 1].intent.bits();
      const auto& b = lattice[k].intent.bits();
      const auto first = (a ^ b).find_first();
      REQUIRE(first != Bits::npos);
      CHECK(b.test(first));
    }
  }
}

TEST_CASE("extents and intents are closed under intersection") {
  for (std::size_t i = 0; i < 100; ++i) {
    const auto lattice = enumerate_concepts(random_context(context_seed(6, i), 7, 7, false));
    for (std::size_t x = 0; x < lattice.size(); ++x)
      for (std::size_t y = 0; y < lattice.size(); ++y) {
        CHECK(lattice.find_extent(lattice[x].extent & lattice[y].extent).has_value());
        CHECK(lattice.find_intent(lattice[x].intent & lattice[y].intent).has_value());
      }
  }
}

TEST_CASE("object concepts are join-dense, attribute concepts meet-dense") {
  for (std::size_t i = 0; i < 100; ++i) {
    const auto lattice = enumerate_concepts(random_context(context_seed(8, i), 6, 6, false));
    Bits objects(lattice.size()), attributes(lattice.size());
    for (std::size_t g = 0; g < lattice.context().num_objects(); ++g) objects.set(gamma(lattice, g));
    for (std::size_t m = 0; m < lattice.context().num_attributes(); ++m) attributes.set(mu(lattice, m));
    CHECK(is_join_dense(lattice.order(), objects));
    CHECK(is_meet_dense(lattice.order(), attributes));
  }
}

TEST_CASE("hasse diagram of the running example") {
  const auto lattice = enumerate_concepts(running_example());
  const auto covers = hasse(lattice.order());
  const auto expected = oracle::cover_count(lattice.size(), [&](std::size_t x, std::size_t y) {
    return x != y && lattice[x].extent.is_subset_of(lattice[y].extent);
  });
  CHECK(covers.size() == expected);
  CHECK(covers.size() == 14);
}

TEST_CASE("lattice as a context") {
  const Poset point({"x"}, {{true}});
  const auto one = context_from_lattice(point);
  CHECK(one.num_objects() == 1);
  CHECK(one.incident(0, 0));
  CHECK(enumerate_concepts(one).size() == 1);

  const Poset two({"0", "1"}, {{true, true}, {false, true}});
  const auto chain = context_from_lattice(two);
  CHECK(chain.incident(0, 1));
  CHECK_FALSE(chain.incident(1, 0));
  CHECK(order_isomorphism(enumerate_concepts(chain).order(), two).found());

  const auto lattice = enumerate_concepts(running_example());
  const auto lifted = context_from_lattice(lattice.order());
  CHECK(lifted.num_objects() == 10);
  const auto again = enumerate_concepts(lifted);
  CHECK(oracle::isomorphic(leq_matrix(again.order()), leq_matrix(lattice.order())));

  const Poset anti({"x", "y"}, {{true, false}, {false, true}});
  try {
    context_from_lattice(anti);
    FAIL("expected NotALattice");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotALattice);
  }
}

TEST_CASE("galois notation") {
  const auto ctx = running_example();
  CHECK(galois(ctx, GaloisPair{ctx.object_set({"a", "d"}), ctx.attribute_set({"0", "1", "2"})}) == "ad|012");
  const FormalContext wide({"g1", "g2"}, {"m1", "m2"}, {{true, false}, {true, true}});
  CHECK(galois(wide, GaloisPair{ObjectSet::full(2), AttributeSet::of(2, {0})}) == "g1,g2|m1");
}
