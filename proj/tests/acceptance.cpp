// Acceptance run: one PASS/FAIL line per criterion, each with a wall-clock limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dowker/concept.hpp"
#include "dowker/cosheaf.hpp"
#include "dowker/homology.hpp"
#include "dowker/io.hpp"
#include "dowker/verify.hpp"
#include "oracles.hpp"

using namespace dowker;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

FormalContext bundled() {
  std::ifstream in(DOWKER_DATA_DIR "/running_example.cxt");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_cxt(ss.str());
}

std::string join(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::string show(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

Outcome concepts_listed() {
  Outcome o;
  const auto ctx = bundled();
  const auto j = to_json(enumerate_concepts(ctx), false);
  std::vector<std::string> got;
  for (const auto& c : j["concepts"]) {
    std::string a, b;
    for (const auto& x : c["extent"]) a += x.get<std::string>();
    for (const auto& x : c["intent"]) b += x.get<std::string>();
    got.push_back(a + "|" + b);
  }
  const auto expected =
      join({"|012345", "b|345", "c|145", "a|0125", "bc|45", "ac|15", "ad|012", "abc|5", "acd|1", "abcd|"});
  if (join(got) != expected) o.fail("got " + join(got));
  return o;
}

Outcome reduced() {
  Outcome o;
  const auto lattice = enumerate_concepts(bundled());
  const auto& ctx = lattice.context();
  const auto labels = reduced_labels(lattice);
  const std::map<std::string, std::string> expected = {{"ad|012", "d|02"}, {"abc|5", "|5"}, {"ac|15", "|"}};
  for (const auto& [full, red] : expected) {
    bool found = false;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      if (galois_notation(ctx, lattice[i]) != full) continue;
      found = true;
      const auto got = galois_notation(ctx, labels[i]);
      if (got != red) o.fail(full + " reduced to " + got);
    }
    if (!found) o.fail(full + " missing");
  }
  return o;
}

Outcome theorem1() {
  Outcome o;
  const auto first = verify_theorem1(bundled());
  if (!first.holds || first.lattice_size != 10) o.fail("running example: " + first.detail);
  for (std::size_t i = 0; i < 200; ++i) {
    const auto r = verify_theorem1(random_context(context_seed(kDefaultSeed + 3, i), 6, 6, false));
    if (!r.holds) o.fail("random context " + std::to_string(i) + ": " + r.detail);
  }
  return o;
}

Outcome dowker_structure() {
  Outcome o;
  const auto asc = dowker_complex(bundled());
  auto names = [&](std::size_t k) {
    std::vector<std::string> out;
    for (auto f = asc.first_face(k); f < asc.first_face(k + 1); ++f)
      out.push_back(compact_labels(asc.vertices(), asc.faces()[f]));
    return join(out);
  };
  if (asc.dimension() != 2) o.fail("dimension " + std::to_string(asc.dimension()));
  if (names(0) != "a, b, c, d") o.fail("vertices " + names(0));
  if (names(1) != "ab, ac, ad, bc, cd") o.fail("edges " + names(1));
  if (names(2) != "abc, acd") o.fail("triangles " + names(2));
  const auto b = betti(simplicial_chain_complex(asc));
  if (b != std::vector<std::size_t>{1, 0, 0}) o.fail("betti " + show(b));
  return o;
}

Outcome cosheaf_labels() {
  Outcome o;
  const auto cs = dowker_cosheaf(bundled());
  const auto& ctx = cs.context();
  std::vector<std::string> labels, non_concepts;
  for (const auto& c : cs.cells()) {
    if (c.is_top) continue;
    const auto label = compact_labels(ctx.objects(), c.face.bits()) + ":" + compact_labels(ctx.attributes(), c.costalk.bits());
    labels.push_back(label);
    if (!c.is_concept) non_concepts.push_back(label);
  }
  const auto expected = join({"b:345", "c:145", "a:0125", "d:012", "ab:5", "bc:45", "ac:15", "ad:012", "cd:1",
                              "abc:5", "acd:1"});
  if (join(labels) != expected) o.fail("labels " + join(labels));
  if (join(non_concepts) != join({"ab:5", "cd:1", "d:012"})) o.fail("non-concepts " + join(non_concepts));
  return o;
}

Outcome theorem2() {
  Outcome o;
  const auto first = verify_theorem2(bundled());
  if (!first.holds) o.fail("running example: " + first.detail);
  for (std::size_t i = 0; i < 100; ++i) {
    const auto r = verify_theorem2(random_context(context_seed(kDefaultSeed + 6, i), 6, 6, true));
    if (!r.holds) o.fail("random context " + std::to_string(i) + ": " + r.detail);
  }
  return o;
}

Outcome sheaf_example() {
  Outcome o;
  const auto ctx = bundled();
  const auto h = sheaf_cohomology(ctx);
  if (h.cochain.dims() != std::vector<std::size_t>{13, 9, 2}) o.fail("dims " + show(h.cochain.dims()));
  if (!(h.cochain.differential(1) * h.cochain.differential(0)).is_zero()) o.fail("d1 d0 != 0");
  if (h.betti != std::vector<std::size_t>{6, 0, 0}) o.fail("betti " + show(h.betti));
  std::vector<std::string> parts;
  std::size_t total = 0;
  for (const auto& [face, attrs] : h.decomposition) {
    parts.push_back(compact_labels(ctx.objects(), face.bits()) + ":" + compact_labels(ctx.attributes(), attrs.bits()));
    total += attrs.count();
  }
  if (join(parts) != join({"ad:02", "acd:1", "b:3", "bc:4", "abc:5"})) o.fail("decomposition " + join(parts));
  if (total != 6) o.fail("decomposition sums to " + std::to_string(total));
  return o;
}

Outcome global_sections() {
  Outcome o;
  for (std::size_t i = 0; i < 200; ++i) {
    const auto ctx = random_context(context_seed(kDefaultSeed + 8, i), 7, 7, true);
    const auto h = sheaf_cohomology(ctx);
    bool ok = !h.betti.empty() && h.betti[0] == ctx.num_attributes();
    for (std::size_t k = 1; k < h.betti.size(); ++k) ok = ok && h.betti[k] == 0;
    if (!ok) o.fail("random context " + std::to_string(i) + ": betti " + show(h.betti));
  }
  return o;
}

Outcome corollary() {
  Outcome o;
  auto check = [&](const FormalContext& ctx, const std::string& name) {
    const auto r = verify_corollary45(ctx);
    const auto dual = betti(simplicial_chain_complex(dowker_complex(transpose(ctx))));
    const auto independent =
        oracle::betti(oracle::dowker_faces(oracle::from_context(oracle::transpose_rel(ctx))));
    if (!r.holds || r.zeroth_betti != dual || oracle::trim(r.zeroth_betti) != oracle::trim(independent))
      o.fail(name + ": " + show(r.zeroth_betti) + " vs " + show(dual) + " " + r.detail);
  };
  check(bundled(), "running example");
  for (std::size_t i = 0; i < 100; ++i)
    check(random_context(context_seed(kDefaultSeed + 9, i), 6, 6, true), "random context " + std::to_string(i));
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (std::size_t i = 0; i < 500; ++i) {
    const auto ctx = random_context(context_seed(kDefaultSeed + 10, i), 7, 7, false);
    const auto lattice = enumerate_concepts(ctx);
    std::set<std::pair<oracle::Mask, oracle::Mask>> got;
    for (const auto& c : lattice.concepts())
      got.emplace(static_cast<oracle::Mask>(c.extent.bits().to_ulong()),
                  static_cast<oracle::Mask>(c.intent.bits().to_ulong()));
    if (got.size() != lattice.size() || got != oracle::concepts(oracle::from_context(ctx)))
      o.fail("random context " + std::to_string(i));
  }
  return o;
}

Outcome galois_laws() {
  Outcome o;
  for (std::size_t i = 0; i < 500; ++i) {
    const auto ctx = random_context(context_seed(kDefaultSeed + 11, i), 8, 8, false);
    for (const auto& law : check_galois_laws(ctx))
      if (!law.pass) o.fail("random context " + std::to_string(i) + " " + law.law + ": " + law.witness);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "running-example concepts", 1.0, concepts_listed},
      {2, "reduced labels", 1.0, reduced},
      {3, "intersection closure equals the extent lattice (1 + 200 contexts)", 30.0, theorem1},
      {4, "Dowker complex structure and Betti numbers", 1.0, dowker_structure},
      {5, "cosheaf Galois labels and concept flags", 1.0, cosheaf_labels},
      {6, "concepts recovered from the cosheaf (1 + 100 total contexts)", 30.0, theorem2},
      {7, "running-example sheaf cohomology", 1.0, sheaf_example},
      {8, "global sections equal |M| (200 total contexts)", 60.0, global_sections},
      {9, "zeroth cosheaf homology vs dual Dowker complex (1 + 100 contexts)", 120.0, corollary},
      {10, "NextClosure vs subset-scan oracle (500 contexts)", 60.0, oracle_equivalence},
      {11, "Galois law suite (500 contexts)", 30.0, galois_laws},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && seconds > c.limit_seconds) o.fail("time limit exceeded");
    if (!o.pass) ++failures;
    std::printf("[%s] AC%-2d %s (%.3f s, limit %.0f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.limit_seconds, o.pass ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
