#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "dowker/chain_complex.hpp"
#include "dowker/complexes.hpp"
#include "dowker/concept.hpp"
#include "dowker/context.hpp"
#include "dowker/cosheaf.hpp"
#include "dowker/homology.hpp"
#include "dowker/order.hpp"

namespace dowker {

/// Burmeister format:
///
///   B
///   <name, may be empty>
///   |G|
///   |M|
///   <blank>
///   one object label per line, then one attribute label per line
///   |G| rows of 'X' / '.' of length |M|
///
/// The name line may be omitted. Errors are ParseError (with line and
/// column) or DimensionMismatch (missing rows or labels).
FormalContext parse_cxt(std::string_view text);
std::string write_cxt(const FormalContext& ctx, std::string_view name = "");

/// Cells "0"/"1" separated by commas. With a header, the first row holds
/// attribute labels after one corner cell and every row starts with its
/// object label; without one, labels are g0.. and m0...
FormalContext parse_csv(std::string_view text, bool header = true);
std::string write_csv(const FormalContext& ctx);

using Json = nlohmann::ordered_json;

Json to_json(const FormalContext& ctx);
Json to_json(const Poset& p);
Json to_json(const ConceptLattice& lattice, bool with_reduced = true);
Json to_json(const Hypergraph& h);
Json to_json(const CollapsedHypergraph& h);
Json to_json(const SimplicialComplex& asc);
Json to_json(const DowkerCosheaf& cs);
Json to_json(const ChainComplex& cc, bool with_matrices = false);
Json to_json(const SheafCohomology& h, const FormalContext& ctx, bool with_matrices = false);
Json to_json(const Corollary45Report& r);
Json to_json(const RationalMatrix& m);

/// DOT digraphs drawn bottom-up (covers point from lower to upper).
std::string poset_dot(const Poset& p, std::string_view graph_name = "poset");
/// Nodes labeled "A | B"; `reduced` switches to reduced labels.
std::string lattice_dot(const ConceptLattice& lattice, bool reduced = false);
/// The Dowker faces, one rank per dimension; concept cells drawn bold. The
/// adjoined top cell is not drawn.
std::string cosheaf_dot(const DowkerCosheaf& cs);

/// Checks text against the DOT grammar (graph, subgraph, node, edge and
/// attribute statements, quoted and bare IDs). Returns an empty string when
/// valid, otherwise a description of the first error.
std::string validate_dot(std::string_view text);

}  // namespace dowker
