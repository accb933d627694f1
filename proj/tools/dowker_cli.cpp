// dowker: command-line front end. Each command reads one context and writes
// one artifact.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dowker/concept.hpp"
#include "dowker/cosheaf.hpp"
#include "dowker/error.hpp"
#include "dowker/homology.hpp"
#include "dowker/io.hpp"
#include "dowker/verify.hpp"

namespace {

using namespace dowker;

struct RunConfig {
  std::string command;
  std::string input;
  std::string output;
  std::string format = "json";
  bool no_header = false;
  VerifyConfig verify;
  bool allow_partial = false;
  bool matrices = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FormalContext load(const RunConfig& cfg) {
  const auto text = read_file(cfg.input);
  const auto ext = std::filesystem::path(cfg.input).extension().string();
  if (ext == ".csv") return parse_csv(text, !cfg.no_header);
  return parse_cxt(text);
}

[[noreturn]] void unsupported(const RunConfig& cfg) {
  throw std::runtime_error("format '" + cfg.format + "' is not available for '" + cfg.command + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render(const RunConfig& cfg, int& status) {
  const auto& c = cfg.command;
  const auto& f = cfg.format;
  if (c == "verify") {
    auto vc = cfg.verify;
    vc.total = !cfg.allow_partial;
    std::vector<std::pair<std::string, FormalContext>> supplied;
    if (!cfg.input.empty()) supplied.emplace_back(cfg.input, load(cfg));
    const auto report = run_verify(vc, supplied);
    if (!report.pass()) status = 1;
    if (f != "json") unsupported(cfg);
    return dump(to_json(report));
  }

  const auto ctx = load(cfg);
  if (f == "cxt" || f == "csv") {
    if (c == "hasse") {
      const auto lifted = context_from_lattice(enumerate_concepts(ctx).order());
      return f == "cxt" ? write_cxt(lifted, "lattice") : write_csv(lifted);
    }
    if (c == "concepts") return f == "cxt" ? write_cxt(ctx) : write_csv(ctx);
    unsupported(cfg);
  }
  const bool dot = f == "dot";
  if (!dot && f != "json") unsupported(cfg);

  if (c == "concepts" || c == "reduced") {
    const auto lattice = enumerate_concepts(ctx);
    if (dot) return lattice_dot(lattice, c == "reduced");
    return dump(to_json(lattice, c == "reduced"));
  }
  if (c == "hasse") {
    const auto lattice = enumerate_concepts(ctx);
    return dot ? poset_dot(lattice.order(), "hasse") : dump(to_json(lattice.order()));
  }
  if (c == "collapse") {
    const auto h = collapse(ctx);
    return dot ? poset_dot(edge_poset(h.hypergraph), "collapse") : dump(to_json(h));
  }
  if (c == "intersection") {
    const auto h = intersection_complex(collapse(ctx).hypergraph);
    if (dot) return poset_dot(edge_poset(top(h)), "intersection");
    Json j = to_json(h);
    j["lattice"] = to_json(edge_poset(top(h)));
    return dump(j);
  }
  if (c == "dowker") {
    const auto asc = dowker_complex(ctx, cfg.verify.face_budget);
    if (dot) return poset_dot(face_poset(asc, false), "dowker");
    Json j = to_json(asc);
    j["betti"] = betti(simplicial_chain_complex(asc));
    return dump(j);
  }
  if (c == "cosheaf") {
    const auto cs = dowker_cosheaf(ctx, cfg.verify.face_budget);
    return dot ? cosheaf_dot(cs) : dump(to_json(cs));
  }
  if (dot) unsupported(cfg);
  if (c == "cohomology") return dump(to_json(sheaf_cohomology(ctx, cfg.verify.face_budget), ctx, cfg.matrices));
  if (c == "cor45") {
    const auto r = verify_corollary45(ctx, cfg.verify.face_budget);
    if (!r.holds) status = 1;
    return dump(to_json(r));
  }
  throw std::runtime_error("unknown command " + c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concept lattices, Dowker complexes and cosheaves of a finite relation"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"concepts", "concept lattice (json, dot; cxt/csv re-export the context)"},
      {"reduced", "concept lattice with reduced labels"},
      {"hasse", "covers of the concept lattice (cxt/csv give (L, L, <=))"},
      {"collapse", "deduplicated attribute hypergraph"},
      {"intersection", "intersection closure of the collapsed hypergraph"},
      {"dowker", "Dowker complex and its Betti numbers"},
      {"cosheaf", "Dowker cosheaf cells with Galois labels"},
      {"cohomology", "Dowker sheaf cohomology over Q"},
      {"cor45", "zeroth cosheaf homology against the dual Dowker complex"},
      {"verify", "law suite over supplied and seeded random contexts"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    auto* in = sub->add_option("-i,--input", cfg.input, "context file (.cxt or .csv)")->check(CLI::ExistingFile);
    if (name != "verify") in->required();
    sub->add_option("-o,--output", cfg.output, "output file (default stdout)");
    sub->add_option("-f,--format", cfg.format, "output format")
        ->check(CLI::IsMember({"cxt", "csv", "json", "dot"}));
    sub->add_flag("--no-header", cfg.no_header, "CSV input has no label row or column");
    sub->add_option("--face-budget", cfg.verify.face_budget, "maximum number of faces to materialize");
    sub->add_option("--iso-budget", cfg.verify.iso_budget, "backtracking steps per isomorphism search");
    if (name == "cohomology") sub->add_flag("--matrices", cfg.matrices, "include the coboundary matrices");
    if (name == "verify") {
      sub->add_option("--seed", cfg.verify.seed, "64-bit seed of the random suite")->capture_default_str();
      sub->add_option("--count", cfg.verify.count, "number of random contexts")->capture_default_str();
      sub->add_option("--max-objects", cfg.verify.max_objects)->capture_default_str();
      sub->add_option("--max-attributes", cfg.verify.max_attributes)->capture_default_str();
      sub->add_flag("--allow-partial", cfg.allow_partial, "do not repair zero rows and columns");
    }
    sub->callback([&cfg, n = name] { cfg.command = n; });
  }
  CLI11_PARSE(app, argc, argv);

  int status = 0;
  try {
    const auto text = render(cfg, status);
    if (cfg.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.output, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + cfg.output);
      out << text;
    }
  } catch (const dowker::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
