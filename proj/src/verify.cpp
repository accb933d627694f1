#include "dowker/verify.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <unordered_set>

#include "dowker/concept.hpp"
#include "dowker/cosheaf.hpp"
#include "dowker/error.hpp"
#include "dowker/homology.hpp"

namespace dowker {

bool ContextReport::pass() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.pass || l.skipped; });
}

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : contexts)
    for (const auto& l : c.laws)
      if (!l.pass && !l.skipped) ++n;
  return n;
}

std::uint64_t context_seed(std::uint64_t seed, std::size_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

FormalContext random_context(std::uint64_t seed, std::size_t max_objects, std::size_t max_attributes, bool total) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
  };
  const auto n = uniform(1, std::max<std::size_t>(1, max_objects));
  const auto k = uniform(1, std::max<std::size_t>(1, max_attributes));
  std::vector<std::vector<bool>> inc(n, std::vector<bool>(k));
  for (auto& row : inc)
    for (std::size_t m = 0; m < k; ++m) row[m] = (rng() >> 63) != 0;
  if (total) {
    for (auto& row : inc)
      if (std::none_of(row.begin(), row.end(), [](bool b) { return b; })) row[uniform(0, k - 1)] = true;
    for (std::size_t m = 0; m < k; ++m) {
      bool any = false;
      for (const auto& row : inc) any = any || row[m];
      if (!any) inc[uniform(0, n - 1)][m] = true;
    }
  }
  std::vector<std::string> objects, attributes;
  for (std::size_t g = 0; g < n; ++g) objects.push_back("g" + std::to_string(g));
  for (std::size_t m = 0; m < k; ++m) attributes.push_back("m" + std::to_string(m));
  return FormalContext(std::move(objects), std::move(attributes), inc);
}

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = {
      "gal1",           "gal2",          "gal3",           "closure_extensive",
      "closure_monotone", "closure_idempotent", "extent_intersection_closed", "intent_intersection_closed",
      "derive_is_row_meet", "concept_enumeration", "lattice_complete", "gamma_join_dense",
      "mu_meet_dense",  "theorem1",      "theorem2",       "costalk_lattice",
      "r0_h",           "cor45",         "dowker_duality",
  };
  return names;
}

namespace {

constexpr std::size_t kScanBits = 16;

LawResult ok(std::string law) { return {std::move(law), true, false, {}}; }
LawResult failed(std::string law, std::string witness) { return {std::move(law), false, false, std::move(witness)}; }
LawResult skipped(std::string law, std::string why) { return {std::move(law), false, true, std::move(why)}; }

std::string show(const std::vector<std::string>& labels, const Bits& set) {
  std::string out = "{";
  bool first = true;
  for_each_member(set, [&](std::size_t i) {
    if (!first) out += ",";
    out += labels[i];
    first = false;
  });
  return out + "}";
}

/// One side of the Galois connection: the sets of `from`, their derivations
/// into `to`, and the reverse derivation.
struct Side {
  const std::vector<std::string>* labels;
  std::size_t bits;
  std::vector<Bits> prime;   // A'
  std::vector<Bits> close;   // A''
  std::vector<Bits> triple;  // A'''
};

template <class Derive, class Back>
Side scan_side(const std::vector<std::string>& labels, Derive derive, Back back) {
  Side s{&labels, labels.size(), {}, {}, {}};
  const std::size_t total = std::size_t{1} << s.bits;
  s.prime.reserve(total);
  s.close.reserve(total);
  s.triple.reserve(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    const auto a = bits_from_mask(s.bits, mask);
    s.prime.push_back(derive(a));
    s.close.push_back(back(s.prime.back()));
    s.triple.push_back(derive(s.close.back()));
  }
  return s;
}

void check_side(const Side& s, std::string_view tag, std::vector<std::string>& fail1, std::vector<std::string>& fail2,
                std::vector<std::string>& fail3, std::vector<std::string>& mono, std::vector<std::string>& idem,
                std::vector<std::string>& inter) {
  const std::size_t total = std::size_t{1} << s.bits;
  auto note = [&](std::vector<std::string>& sink, const std::string& w) {
    if (sink.empty()) sink.push_back(std::string(tag) + " " + w);
  };
  std::unordered_set<Bits, BitsHash> closed;
  for (std::size_t mask = 0; mask < total; ++mask) {
    const auto a = bits_from_mask(s.bits, mask);
    if (!a.is_subset_of(s.close[mask])) note(fail1, show(*s.labels, a));
    if (s.prime[mask] != s.triple[mask]) note(fail3, show(*s.labels, a));
    const auto cc = static_cast<std::size_t>(s.close[mask].to_ulong());
    if (s.close[cc] != s.close[mask]) note(idem, show(*s.labels, a));
    for (std::size_t i = 0; i < s.bits; ++i) {
      if (mask >> i & 1) continue;
      const auto bigger = mask | (std::size_t{1} << i);
      if (!s.prime[bigger].is_subset_of(s.prime[mask]))
        note(fail2, show(*s.labels, a) + " <= " + show(*s.labels, bits_from_mask(s.bits, bigger)));
      if (!s.close[mask].is_subset_of(s.close[bigger]))
        note(mono, show(*s.labels, a) + " <= " + show(*s.labels, bits_from_mask(s.bits, bigger)));
    }
    closed.insert(s.close[mask]);
  }
  std::vector<Bits> list(closed.begin(), closed.end());
  std::sort(list.begin(), list.end(), lex_less);
  for (std::size_t i = 0; i < list.size() && inter.empty(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j)
      if (!closed.count(list[i] & list[j])) {
        note(inter, show(*s.labels, list[i]) + " & " + show(*s.labels, list[j]));
        break;
      }
}

}  // namespace

std::vector<LawResult> check_galois_laws(const FormalContext& ctx) {
  static const std::vector<std::string> names = {
      "gal1", "gal2", "gal3", "closure_extensive", "closure_monotone", "closure_idempotent",
      "extent_intersection_closed", "intent_intersection_closed", "derive_is_row_meet"};
  const auto n = ctx.num_objects(), k = ctx.num_attributes();
  if (n > kScanBits || k > kScanBits) {
    std::vector<LawResult> out;
    for (const auto& name : names) out.push_back(skipped(name, "subset scan limited to 16 elements per side"));
    return out;
  }
  auto obj = scan_side(
      ctx.objects(), [&](const Bits& a) { return derive_objects(ctx, ObjectSet(a)).bits(); },
      [&](const Bits& b) { return derive_attributes(ctx, AttributeSet(b)).bits(); });
  auto att = scan_side(
      ctx.attributes(), [&](const Bits& b) { return derive_attributes(ctx, AttributeSet(b)).bits(); },
      [&](const Bits& a) { return derive_objects(ctx, ObjectSet(a)).bits(); });

  std::vector<std::string> f1, f2, f3, mono, idem, ext, intn;
  check_side(obj, "objects", f1, f2, f3, mono, idem, ext);
  check_side(att, "attributes", f1, f2, f3, mono, idem, intn);

  std::vector<std::string> row_meet;
  for (std::size_t mask = 0; mask < obj.prime.size() && row_meet.empty(); ++mask) {
    auto acc = full_bits(k);
    for (std::size_t g = 0; g < n; ++g)
      if (mask >> g & 1) acc &= ctx.row(g);
    if (acc != obj.prime[mask]) row_meet.push_back(show(ctx.objects(), bits_from_mask(n, mask)));
  }

  auto law = [](const std::string& name, const std::vector<std::string>& w) {
    return w.empty() ? ok(name) : failed(name, w.front());
  };
  // The extent side of gal1 is exactly closure extensiveness; both are
  // reported so either name can be looked up.
  return {law("gal1", f1),   law("gal2", f2),   law("gal3", f3),          law("closure_extensive", f1),
          law("closure_monotone", mono),        law("closure_idempotent", idem),
          law("extent_intersection_closed", ext), law("intent_intersection_closed", intn),
          law("derive_is_row_meet", row_meet)};
}

namespace {

LawResult guarded(const std::string& name, auto&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return failed(name, e.what());
  } catch (const std::exception& e) {
    return failed(name, std::string("exception: ") + e.what());
  }
}

LawResult check_concept_enumeration(const FormalContext& ctx, const ConceptLattice& lattice) {
  if (ctx.num_objects() > kScanBits) return skipped("concept_enumeration", "subset scan limited to 16 objects");
  std::unordered_set<Bits, BitsHash> extents;
  const std::size_t total = std::size_t{1} << ctx.num_objects();
  for (std::size_t mask = 0; mask < total; ++mask)
    extents.insert(close_objects(ctx, ObjectSet(bits_from_mask(ctx.num_objects(), mask))).bits());
  if (extents.size() != lattice.size())
    return failed("concept_enumeration", std::to_string(extents.size()) + " closed sets, " +
                                             std::to_string(lattice.size()) + " concepts");
  for (const auto& c : lattice.concepts())
    if (!extents.count(c.extent.bits()) || derive_objects(ctx, c.extent) != c.intent)
      return failed("concept_enumeration", galois_notation(ctx, c));
  return ok("concept_enumeration");
}

LawResult check_density(const ConceptLattice& lattice, bool objects) {
  const auto& ctx = lattice.context();
  const std::string name = objects ? "gamma_join_dense" : "mu_meet_dense";
  Bits image(lattice.size());
  const auto count = objects ? ctx.num_objects() : ctx.num_attributes();
  for (std::size_t i = 0; i < count; ++i) image.set(objects ? gamma(lattice, i) : mu(lattice, i));
  const bool dense = objects ? is_join_dense(lattice.order(), image) : is_meet_dense(lattice.order(), image);
  return dense ? ok(name) : failed(name, show(lattice.order().elements(), image));
}

LawResult check_r0_h(const FormalContext& ctx, const VerifyConfig& cfg) {
  const auto h = sheaf_cohomology(ctx, cfg.face_budget);
  const auto k = ctx.num_attributes();
  if (h.betti.empty() || h.betti[0] != k)
    return failed("r0_h", "beta0 = " + std::to_string(h.betti.empty() ? 0 : h.betti[0]) + ", |M| = " +
                              std::to_string(k));
  for (std::size_t d = 1; d < h.betti.size(); ++d)
    if (h.betti[d] != 0) return failed("r0_h", "beta" + std::to_string(d) + " = " + std::to_string(h.betti[d]));
  std::size_t sum = 0;
  for (const auto& [face, mhat] : h.decomposition) sum += mhat.count();
  if (sum != k) return failed("r0_h", "decomposition sums to " + std::to_string(sum));
  if (!h.generators_span_h0) return failed("r0_h", "attribute sections do not span H^0");
  return ok("r0_h");
}

std::vector<std::size_t> trimmed(std::vector<std::size_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::string show_vec(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

LawResult check_duality(const FormalContext& ctx, const VerifyConfig& cfg) {
  const auto a = trimmed(betti(simplicial_chain_complex(dowker_complex(ctx, cfg.face_budget))));
  const auto b = trimmed(betti(simplicial_chain_complex(dowker_complex(transpose(ctx), cfg.face_budget))));
  if (a != b) return failed("dowker_duality", show_vec(a) + " vs " + show_vec(b));
  return ok("dowker_duality");
}

}  // namespace

std::vector<LawResult> check_context(const FormalContext& ctx, const VerifyConfig& cfg) {
  auto out = check_galois_laws(ctx);
  const bool total = is_total(ctx);
  auto total_only = [&](const std::string& name, auto&& body) {
    out.push_back(total ? guarded(name, body) : skipped(name, "context is not total"));
  };

  std::optional<ConceptLattice> lattice;
  try {
    lattice.emplace(enumerate_concepts(ctx));
  } catch (const Error& e) {
    for (const auto& name : {"concept_enumeration", "lattice_complete", "gamma_join_dense", "mu_meet_dense"})
      out.push_back(failed(name, e.what()));
  }
  if (lattice) {
    out.push_back(guarded("concept_enumeration", [&] { return check_concept_enumeration(ctx, *lattice); }));
    out.push_back(guarded("lattice_complete", [&] {
      const auto v = is_complete_lattice(lattice->order());
      return v ? ok("lattice_complete") : failed("lattice_complete", v.reason);
    }));
    out.push_back(guarded("gamma_join_dense", [&] { return check_density(*lattice, true); }));
    out.push_back(guarded("mu_meet_dense", [&] { return check_density(*lattice, false); }));
  }
  out.push_back(guarded("theorem1", [&] {
    const auto r = verify_theorem1(ctx, cfg.iso_budget);
    if (r.holds) return ok("theorem1");
    std::string w = r.detail;
    if (r.witness_extent) w += "; extent " + show(ctx.objects(), *r.witness_extent);
    return failed("theorem1", w);
  }));
  total_only("theorem2", [&] {
    const auto r = verify_theorem2(ctx, cfg.iso_budget);
    return r.holds ? ok("theorem2") : failed("theorem2", r.detail);
  });
  total_only("costalk_lattice", [&] {
    const auto r = unique_costalk_lattice(dowker_cosheaf(ctx, cfg.face_budget), cfg.iso_budget);
    return r.completed_matches ? ok("costalk_lattice") : failed("costalk_lattice", r.witness);
  });
  total_only("r0_h", [&] { return check_r0_h(ctx, cfg); });
  total_only("cor45", [&] {
    const auto r = verify_corollary45(ctx, cfg.face_budget);
    return r.holds ? ok("cor45") : failed("cor45", r.detail);
  });
  total_only("dowker_duality", [&] { return check_duality(ctx, cfg); });
  return out;
}

VerifyReport run_verify(const VerifyConfig& cfg, const std::vector<std::pair<std::string, FormalContext>>& supplied) {
  VerifyReport report;
  report.config = cfg;
  const auto fixed = supplied.size();
  report.contexts.resize(fixed + cfg.count);
  for (std::size_t i = 0; i < fixed; ++i) {
    report.contexts[i].index = i;
    report.contexts[i].source = supplied[i].first;
    report.contexts[i].context = supplied[i].second;
  }
  for (std::size_t r = 0; r < cfg.count; ++r) {
    auto& c = report.contexts[fixed + r];
    c.index = fixed + r;
    c.seed = context_seed(cfg.seed, r);
    c.source = "random";
    c.context = random_context(c.seed, cfg.max_objects, cfg.max_attributes, cfg.total);
  }
  const auto n = static_cast<long>(report.contexts.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    auto& c = report.contexts[static_cast<std::size_t>(i)];
    c.laws = check_context(c.context, cfg);
  }
  return report;
}

Json to_json(const VerifyReport& report) {
  Json j;
  const auto& cfg = report.config;
  j["config"] = {{"seed", cfg.seed},
                 {"count", cfg.count},
                 {"max_objects", cfg.max_objects},
                 {"max_attributes", cfg.max_attributes},
                 {"face_budget", cfg.face_budget},
                 {"iso_budget", cfg.iso_budget},
                 {"total", cfg.total},
                 {"field", "Q"}};
  std::size_t skipped_count = 0, passed = 0;
  Json contexts = Json::array();
  for (const auto& c : report.contexts) {
    Json cj;
    cj["index"] = c.index;
    cj["source"] = c.source;
    if (c.source == "random") cj["seed"] = c.seed;
    cj["context"] = to_json(c.context);
    cj["pass"] = c.pass();
    Json laws = Json::array();
    for (const auto& l : c.laws) {
      Json lj;
      lj["law"] = l.law;
      lj["status"] = l.skipped ? "skipped" : (l.pass ? "pass" : "fail");
      if (!l.witness.empty()) lj["witness"] = l.witness;
      if (l.skipped) ++skipped_count;
      else if (l.pass) ++passed;
      laws.push_back(std::move(lj));
    }
    cj["laws"] = std::move(laws);
    contexts.push_back(std::move(cj));
  }
  j["summary"] = {{"contexts", report.contexts.size()},
                  {"passed", passed},
                  {"failed", report.failures()},
                  {"skipped", skipped_count},
                  {"pass", report.pass()}};
  j["contexts"] = std::move(contexts);
  return j;
}

}  // namespace dowker
