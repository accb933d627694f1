#include "dowker/io.hpp"

#include <cctype>
#include <charconv>

#include "dowker/error.hpp"

namespace dowker {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_count(std::string_view s, std::size_t& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

[[noreturn]] void parse_error(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

}  // namespace

FormalContext parse_cxt(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  auto need = [&](std::size_t count, const char* what) {
    if (i + count > lines.size())
      throw Error(Errc::DimensionMismatch, std::string("file ends before ") + what + " (line " +
                                               std::to_string(lines.size() + 1) + ")");
  };
  need(1, "the 'B' header");
  if (trim(lines[0]) != "B") parse_error(1, 1, "expected 'B'");
  i = 1;
  std::size_t scratch = 0;
  need(2, "the object and attribute counts");
  const bool numeric_name = i + 2 < lines.size() && parse_count(lines[i], scratch) &&
                            parse_count(lines[i + 1], scratch) && parse_count(lines[i + 2], scratch);
  if (!parse_count(lines[i], scratch) || numeric_name) ++i;  // name line
  std::size_t n_objects = 0;
  std::size_t n_attributes = 0;
  need(2, "the object and attribute counts");
  if (!parse_count(lines[i], n_objects)) parse_error(i + 1, 1, "expected the object count");
  if (!parse_count(lines[i + 1], n_attributes)) parse_error(i + 2, 1, "expected the attribute count");
  i += 2;
  while (i < lines.size() && trim(lines[i]).empty()) ++i;

  need(n_objects, "all object labels are read");
  std::vector<std::string> objects;
  for (std::size_t k = 0; k < n_objects; ++k) objects.emplace_back(lines[i++]);
  need(n_attributes, "all attribute labels are read");
  std::vector<std::string> attributes;
  for (std::size_t k = 0; k < n_attributes; ++k) attributes.emplace_back(lines[i++]);

  need(n_objects, "all incidence rows are read");
  std::vector<Bits> rows;
  for (std::size_t g = 0; g < n_objects; ++g, ++i) {
    auto row = lines[i];
    while (!row.empty() && (row.back() == ' ' || row.back() == '\t')) row.remove_suffix(1);
    if (row.size() != n_attributes)
      parse_error(i + 1, std::min(row.size(), n_attributes) + 1,
                  "row has " + std::to_string(row.size()) + " cells, expected " + std::to_string(n_attributes));
    Bits bits(n_attributes);
    for (std::size_t m = 0; m < n_attributes; ++m) {
      const char c = row[m];
      if (c == 'X' || c == 'x')
        bits.set(m);
      else if (c != '.')
        parse_error(i + 1, m + 1, std::string("expected 'X' or '.', found '") + c + "'");
    }
    rows.push_back(std::move(bits));
  }
  for (; i < lines.size(); ++i)
    if (!trim(lines[i]).empty()) parse_error(i + 1, 1, "unexpected content after the incidence rows");
  return FormalContext::from_rows(std::move(objects), std::move(attributes), std::move(rows));
}

std::string write_cxt(const FormalContext& ctx, std::string_view name) {
  std::string out = "B\n";
  out += name;
  out += "\n" + std::to_string(ctx.num_objects()) + "\n" + std::to_string(ctx.num_attributes()) + "\n\n";
  for (const auto& g : ctx.objects()) out += g + "\n";
  for (const auto& m : ctx.attributes()) out += m + "\n";
  for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m) out += ctx.incident(g, m) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    auto end = line.find(',', start);
    if (end == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, end - start)));
    start = end + 1;
  }
  return cells;
}

}  // namespace

FormalContext parse_csv(std::string_view text, bool header) {
  const auto lines = split_lines(text);
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  std::vector<Bits> rows;
  std::size_t first = 0;
  std::size_t width = 0;
  if (header) {
    if (lines.empty()) return FormalContext();
    const auto cells = split_cells(lines[0]);
    for (std::size_t c = 1; c < cells.size(); ++c) attributes.emplace_back(cells[c]);
    width = attributes.size();
    first = 1;
  } else if (!lines.empty()) {
    width = split_cells(lines[0]).size();
    for (std::size_t m = 0; m < width; ++m) attributes.push_back("m" + std::to_string(m));
  }
  const std::size_t label_cells = header ? 1 : 0;
  for (std::size_t i = first; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) parse_error(i + 1, 1, "blank row");
    const auto cells = split_cells(lines[i]);
    if (cells.size() != width + label_cells)
      parse_error(i + 1, std::min(cells.size(), width + label_cells) + 1,
                  "row has " + std::to_string(cells.size()) + " cells, expected " +
                      std::to_string(width + label_cells));
    objects.push_back(header ? std::string(cells[0]) : "g" + std::to_string(i - first));
    Bits bits(width);
    for (std::size_t m = 0; m < width; ++m) {
      const auto cell = cells[m + label_cells];
      if (cell == "1")
        bits.set(m);
      else if (cell != "0")
        parse_error(i + 1, m + label_cells + 1, "expected 0 or 1, found '" + std::string(cell) + "'");
    }
    rows.push_back(std::move(bits));
  }
  return FormalContext::from_rows(std::move(objects), std::move(attributes), std::move(rows));
}

std::string write_csv(const FormalContext& ctx) {
  std::string out;
  for (const auto& m : ctx.attributes()) out += "," + m;
  out += '\n';
  for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
    out += ctx.objects()[g];
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m) out += ctx.incident(g, m) ? ",1" : ",0";
    out += '\n';
  }
  return out;
}

Json to_json(const FormalContext& ctx) {
  Json incidence = Json::array();
  for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
    Json row = Json::array();
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m) row.push_back(ctx.incident(g, m) ? 1 : 0);
    incidence.push_back(std::move(row));
  }
  return {{"objects", ctx.objects()}, {"attributes", ctx.attributes()}, {"incidence", std::move(incidence)}};
}

Json to_json(const Poset& p) {
  Json covers = Json::array();
  for (const auto& c : hasse(p)) covers.push_back({c.lower, c.upper});
  return {{"elements", p.elements()}, {"covers", std::move(covers)}};
}

Json to_json(const ConceptLattice& lattice, bool with_reduced) {
  const auto& ctx = lattice.context();
  auto pair_json = [&](const GaloisPair& k) {
    return Json{{"extent", member_labels(ctx.objects(), k.extent.bits())},
                {"intent", member_labels(ctx.attributes(), k.intent.bits())}};
  };
  Json concepts = Json::array();
  for (const auto& k : lattice.concepts()) concepts.push_back(pair_json(k));
  Json covers = Json::array();
  for (const auto& c : hasse(lattice.order())) covers.push_back({c.lower, c.upper});
  Json out{{"concepts", std::move(concepts)}, {"covers", std::move(covers)}};
  if (with_reduced) {
    Json reduced = Json::array();
    for (const auto& k : reduced_labels(lattice)) reduced.push_back(pair_json(k));
    out["reduced"] = std::move(reduced);
  }
  return out;
}

Json to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (const auto& e : h.edges) edges.push_back(member_labels(h.vertices, e));
  return {{"vertices", h.vertices}, {"edges", std::move(edges)}};
}

Json to_json(const CollapsedHypergraph& h) {
  Json out = to_json(h.hypergraph);
  out["edge_of_attribute"] = h.edge_of_attribute;
  return out;
}

Json to_json(const SimplicialComplex& asc) {
  Json facets = Json::array();
  for (const auto& f : asc.facets()) facets.push_back(member_labels(asc.vertices(), f));
  Json counts = Json::array();
  for (int k = 0; k <= asc.dimension(); ++k) counts.push_back(asc.count_of_dimension(static_cast<std::size_t>(k)));
  return {{"vertices", asc.vertices()}, {"facets", std::move(facets)}, {"face_counts", std::move(counts)}};
}

Json to_json(const DowkerCosheaf& cs) {
  const auto& ctx = cs.context();
  Json cells = Json::array();
  for (const auto& cell : cs.cells()) {
    cells.push_back({{"face", member_labels(ctx.objects(), cell.face.bits())},
                     {"costalk", member_labels(ctx.attributes(), cell.costalk.bits())},
                     {"is_concept", cell.is_concept},
                     {"is_top", cell.is_top}});
  }
  return {{"cells", std::move(cells)}};
}

Json to_json(const RationalMatrix& m) { return m.to_strings(); }

Json to_json(const ChainComplex& cc, bool with_matrices) {
  Json out{{"grading", cc.grading() == Grading::Chain ? "chain" : "cochain"},
           {"field", "Q"},
           {"dims", cc.dims()},
           {"ranks", ranks(cc)},
           {"betti", betti(cc)}};
  if (with_matrices) {
    Json mats = Json::array();
    for (std::size_t k = 0; k < cc.num_degrees(); ++k) mats.push_back(to_json(cc.differential(k)));
    out["differentials"] = std::move(mats);
    Json labels = Json::array();
    for (std::size_t k = 0; k < cc.num_degrees(); ++k) labels.push_back(cc.basis_labels(k));
    out["basis"] = std::move(labels);
  }
  return out;
}

Json to_json(const SheafCohomology& h, const FormalContext& ctx, bool with_matrices) {
  Json out = to_json(h.cochain, with_matrices);
  Json decomposition = Json::array();
  for (const auto& [face, attrs] : h.decomposition)
    decomposition.push_back({{"face", member_labels(ctx.objects(), face.bits())},
                             {"attributes", member_labels(ctx.attributes(), attrs.bits())}});
  out["h0_decomposition"] = std::move(decomposition);
  out["generators_span_h0"] = h.generators_span_h0;
  return out;
}

Json to_json(const Corollary45Report& r) {
  return {{"holds", r.holds},
          {"field", "Q"},
          {"zeroth_homology_dims", r.zeroth_dims},
          {"dual_dowker_dims", r.dual_dims},
          {"zeroth_homology_betti", r.zeroth_betti},
          {"dual_dowker_betti", r.dual_betti},
          {"column_betti", r.column_betti},
          {"columns_concentrated", r.columns_concentrated},
          {"chain_isomorphism", r.chain_isomorphism},
          {"detail", r.detail}};
}

}  // namespace dowker
