#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dowker/complexes.hpp"
#include "dowker/concept.hpp"
#include "dowker/error.hpp"
#include "dowker/order.hpp"
#include "oracles.hpp"

using namespace dowker;

namespace {

std::vector<std::vector<bool>> chain_leq(std::size_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) leq[i][j] = true;
  return leq;
}

std::vector<std::vector<bool>> antichain_leq(std::size_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  return leq;
}

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<std::vector<bool>> leq_matrix(const Poset& p) {
  std::vector<std::vector<bool>> out(p.size(), std::vector<bool>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) out[i][j] = p.leq(i, j);
  return out;
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::Mismatch;
}

Poset edge_poset_of_running_example() { return edge_poset(collapse(running_example()).hypergraph); }

}  // namespace

TEST_CASE("singleton poset") {
  Poset p({"x"}, {{true}});
  CHECK(p.size() == 1);
  CHECK(p.leq(0, 0));
  CHECK(hasse(p).empty());
}

TEST_CASE("construction rejects non-orders") {
  CHECK(code_of([] { Poset({"x", "y"}, {{false, false}, {false, true}}); }) == Errc::NotReflexive);
  CHECK(code_of([] { Poset({"x", "y"}, {{true, true}, {true, true}}); }) == Errc::NotAntisymmetric);
  CHECK(code_of([] {
          Poset({"x", "y", "z"}, {{true, true, false}, {false, true, true}, {false, false, true}});
        }) == Errc::NotTransitive);
  CHECK(code_of([] { Poset({"x", "x"}, {{true, false}, {false, true}}); }) == Errc::DuplicateLabel);
}

TEST_CASE("error message names the witness pair") {
  try {
    Poset({"x", "y"}, {{true, true}, {true, true}});
    FAIL("expected NotAntisymmetric");
  } catch (const Error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("x") != std::string::npos);
    CHECK(msg.find("y") != std::string::npos);
  }
}

TEST_CASE("hasse of chain and antichain") {
  Poset chain(names(3), chain_leq(3));
  CHECK(hasse(chain) == std::vector<Cover>{{0, 1}, {1, 2}});
  Poset anti(names(3), antichain_leq(3));
  CHECK(hasse(anti).empty());
}

TEST_CASE("collapsed edge poset of the running example is two chains") {
  const auto p = edge_poset_of_running_example();
  REQUIRE(p.size() == 5);
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : hasse(p)) covers.emplace_back(p.element(c.lower), p.element(c.upper));
  std::sort(covers.begin(), covers.end());
  CHECK(covers == std::vector<std::pair<std::string, std::string>>{{"ad", "acd"}, {"b", "bc"}, {"bc", "abc"}});
}

TEST_CASE("meet and join sets") {
  const auto p = edge_poset_of_running_example();
  for (std::size_t x = 0; x < p.size(); ++x) {
    const auto s = meet_join_sets(p, x, x);
    CHECK(s.meets == std::vector<std::size_t>{x});
    CHECK(s.joins == std::vector<std::size_t>{x});
  }
  const auto ad = *p.index_of("ad");
  const auto b = *p.index_of("b");
  const auto s = meet_join_sets(p, ad, b);
  CHECK(s.meets.empty());
  CHECK(s.joins.empty());

  const auto lattice = enumerate_concepts(running_example());
  const auto& order = lattice.order();
  const auto j = meet_join_sets(order, *order.index_of("b|345"), *order.index_of("c|145"));
  REQUIRE(j.joins.size() == 1);
  CHECK(order.element(j.joins[0]) == "bc|45");
}

TEST_CASE("complete lattice verdicts") {
  CHECK(is_complete_lattice(enumerate_concepts(running_example()).order()).is_lattice);
  const auto anti = is_complete_lattice(Poset(names(2), antichain_leq(2)));
  CHECK_FALSE(anti.is_lattice);
  CHECK(anti.witness == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(is_complete_lattice(edge_poset_of_running_example()).is_lattice);
}

TEST_CASE("bounds of arbitrary subsets") {
  Poset chain(names(4), chain_leq(4));
  CHECK(least_upper_bound(chain, Bits(4)) == 0u);
  CHECK(greatest_lower_bound(chain, Bits(4)) == 3u);
  CHECK(top(chain) == 3u);
  CHECK(bottom(chain) == 0u);
  CHECK(least_upper_bound(chain, make_bits(4, {1, 2})) == 2u);
  Poset anti(names(2), antichain_leq(2));
  CHECK_FALSE(top(anti).has_value());
}

TEST_CASE("order isomorphism basics") {
  Poset chain(names(3), chain_leq(3));
  Poset anti(names(3), antichain_leq(3));
  const auto self = order_isomorphism(chain, chain);
  REQUIRE(self.found());
  CHECK(is_order_isomorphism(chain, chain, self.mapping));
  CHECK(order_isomorphism(chain, anti).verdict == IsoVerdict::NotIsomorphic);
  CHECK(order_isomorphism(chain, Poset(names(2), chain_leq(2))).verdict == IsoVerdict::SizeMismatch);
}

TEST_CASE("isomorphism budget gives a distinct verdict") {
  const std::size_t n = 9;
  Poset anti(names(n), antichain_leq(n));
  const auto r = order_isomorphism(anti, anti, 3);
  CHECK(r.verdict == IsoVerdict::Exhausted);
  CHECK(order_isomorphism(anti, anti).found());
}

TEST_CASE("isomorphism search agrees with the all-bijections oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const double density = 0.15 + 0.1 * static_cast<double>(rng() % 5);
    const auto a = oracle::random_order(n, density, rng);
    // Half the time compare against a shuffled copy, otherwise a fresh order.
    std::vector<std::vector<bool>> b;
    if (trial % 2 == 0) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      b.assign(n, std::vector<bool>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[perm[i]][perm[j]] = a[i][j];
    } else {
      b = oracle::random_order(n, density, rng);
    }
    Poset p(names(n), a), q(names(n), b);
    const bool expected = oracle::isomorphic(a, b);
    const auto pq = order_isomorphism(p, q);
    const auto qp = order_isomorphism(q, p);
    CHECK(pq.found() == expected);
    CHECK(qp.found() == expected);
    if (pq.found()) CHECK(is_order_isomorphism(p, q, pq.mapping));
  }
}

TEST_CASE("hasse closure reproduces the order") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    Poset p(names(n), oracle::random_order(n, 0.3, rng));
    std::vector<std::vector<bool>> closure(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) closure[i][i] = true;
    for (const auto& c : hasse(p)) closure[c.lower][c.upper] = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (closure[i][k] && closure[k][j]) closure[i][j] = true;
    CHECK(closure == leq_matrix(p));
    CHECK(hasse(p).size() == oracle::cover_count(n, [&](std::size_t x, std::size_t y) { return p.less(x, y); }));
  }
}

TEST_CASE("lattices have singleton meet and join sets") {
  std::mt19937_64 rng(17);
  int lattices = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    Poset p(names(n), oracle::random_order(n, 0.5, rng));
    if (!is_complete_lattice(p)) continue;
    ++lattices;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const auto s = meet_join_sets(p, x, y);
        CHECK(s.meets.size() == 1);
        CHECK(s.joins.size() == 1);
      }
  }
  CHECK(lattices > 10);
}

TEST_CASE("dual reverses the order") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    Poset p(names(n), oracle::random_order(n, 0.3, rng));
    const auto d = dual(p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(d.leq(i, j) == p.leq(j, i));
  }
}

TEST_CASE("join and meet density") {
  Poset chain(names(2), chain_leq(2));
  CHECK(is_join_dense(chain, full_bits(2)));
  CHECK_FALSE(is_join_dense(chain, make_bits(2, {0})));
  CHECK(is_meet_dense(chain, make_bits(2, {0})));

  const auto lattice = enumerate_concepts(running_example());
  Bits objects(lattice.size());
  for (std::size_t g = 0; g < 4; ++g) objects.set(gamma(lattice, g));
  CHECK(is_join_dense(lattice.order(), objects));

  CHECK(code_of([] { is_join_dense(Poset(names(2), antichain_leq(2)), full_bits(2)); }) == Errc::NotALattice);
}
