// Parallel kernels against their serial references.
//   dowker_bench [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include <omp.h>

#include "dowker/context.hpp"
#include "dowker/cosheaf.hpp"
#include "dowker/rational_matrix.hpp"
#include "dowker/verify.hpp"

using namespace dowker;

namespace {

template <class F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* kernel, const char* size, double serial, double parallel, bool agree) {
  std::printf("%-22s %-14s %10.4f %10.4f %7.2fx  %s\n", kernel, size, serial, parallel, serial / parallel,
              agree ? "agree" : "DISAGREE");
}

FormalContext square_context(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::string> objects, attributes;
  std::vector<std::vector<bool>> inc(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    objects.push_back("g" + std::to_string(i));
    attributes.push_back("m" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) inc[i][j] = rng() % 3 != 0;
  }
  return FormalContext(objects, attributes, inc);
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-22s %-14s %10s %10s %8s\n", "kernel", "size", "serial s", "parallel s", "speedup");

  std::mt19937_64 rng(1);
  for (std::size_t n : {60, 120, 200}) {
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (rng() % 4 == 0) m(r, c) = static_cast<long>(rng() % 7) - 3;
    std::size_t a = 0, b = 0;
    const double s = best_of(repeats, [&] { a = rank_serial(m); });
    const double p = best_of(repeats, [&] { b = rank(m); });
    const auto label = std::to_string(n) + "x" + std::to_string(n);
    row("rank", label.c_str(), s, p, a == b);
  }

  for (std::size_t bits : {14, 16, 18}) {
    const auto ctx = square_context(bits, rng);
    ContextMap id;
    for (std::size_t g = 0; g < ctx.num_objects(); ++g) id.object_map.push_back(g);
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m) id.attribute_map.push_back(m);
    MorphismVerdict a, b;
    const double s = best_of(repeats, [&] { a = is_ctx_morphism_serial(ctx, ctx, id); });
    const double p = best_of(repeats, [&] { b = is_ctx_morphism(ctx, ctx, id); });
    const auto label = std::to_string(ctx.num_objects()) + "x" + std::to_string(ctx.num_attributes());
    row("is_ctx_morphism", label.c_str(), s, p, a.holds == b.holds && a.witness == b.witness);
  }

  {
    VerifyConfig cfg;
    cfg.count = 200;
    std::string a, b;
    const int threads = omp_get_max_threads();
    const double s = best_of(repeats, [&] {
      omp_set_num_threads(1);
      a = to_json(run_verify(cfg)).dump();
      omp_set_num_threads(threads);
    });
    const double p = best_of(repeats, [&] { b = to_json(run_verify(cfg)).dump(); });
    row("run_verify", "200 x 6x6", s, p, a == b);
  }
  return 0;
}
