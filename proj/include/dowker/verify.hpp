#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dowker/complexes.hpp"
#include "dowker/context.hpp"
#include "dowker/io.hpp"

namespace dowker {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct VerifyConfig {
  std::uint64_t seed = kDefaultSeed;
  std::size_t count = 200;
  std::size_t max_objects = 6;
  std::size_t max_attributes = 6;
  std::size_t face_budget = kDefaultFaceBudget;
  std::uint64_t iso_budget = kDefaultIsoBudget;
  /// Random contexts are repaired to have no zero row or column. When false,
  /// laws that need a total context are reported as skipped on partial ones.
  bool total = true;
};

struct LawResult {
  std::string law;
  bool pass = false;
  bool skipped = false;
  std::string witness;
};

struct ContextReport {
  std::size_t index = 0;
  std::uint64_t seed = 0;  ///< 0 for supplied contexts
  std::string source;
  FormalContext context;
  std::vector<LawResult> laws;

  bool pass() const;
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<ContextReport> contexts;

  std::size_t failures() const;
  bool pass() const { return failures() == 0; }
};

/// splitmix64 of (seed, index): the per-context seed of a random suite.
std::uint64_t context_seed(std::uint64_t seed, std::size_t index);

/// Uniform sizes in [1, max], each incidence an independent fair coin, drawn
/// from mt19937_64(seed). `total` then adds one random incidence to every zero
/// row and every zero column.
FormalContext random_context(std::uint64_t seed, std::size_t max_objects, std::size_t max_attributes, bool total);

/// Law names, in report order.
const std::vector<std::string>& law_names();

/// Galois connection laws by exhaustive subset scan: gal1, gal2, gal3,
/// closure_extensive, closure_monotone, closure_idempotent,
/// extent_intersection_closed, intent_intersection_closed, derive_is_row_meet.
std::vector<LawResult> check_galois_laws(const FormalContext& ctx);

/// Every law of law_names() on one context.
std::vector<LawResult> check_context(const FormalContext& ctx, const VerifyConfig& cfg);

/// Supplied contexts first (index order), then cfg.count random ones.
/// Contexts are checked in parallel; the report is ordered by index.
VerifyReport run_verify(const VerifyConfig& cfg,
                        const std::vector<std::pair<std::string, FormalContext>>& supplied = {});

Json to_json(const VerifyReport& report);

}  // namespace dowker
