#include "dynkin/tables.hpp"

#include <algorithm>
#include <sstream>

namespace dynkin {

namespace {

using nlohmann::ordered_json;

std::string algebra_name(const SimpleType& t) {
  switch (t.family) {
    case Family::A: return "sl_" + std::to_string(t.rank + 1);
    case Family::B: return "so_" + std::to_string(2 * t.rank + 1);
    case Family::C: return "sp_" + std::to_string(2 * t.rank);
    case Family::D: return "so_" + std::to_string(2 * t.rank);
    default: {
      auto s = t.name();
      s[0] = static_cast<char>(std::tolower(s[0]));
      return s;
    }
  }
}

std::string weight_text(const std::vector<Weight>& ws) {
  std::string s;
  for (std::size_t c = 0; c < ws.size(); ++c) {
    if (c) s += ";";
    for (std::size_t i = 0; i < ws[c].coeffs.size(); ++i) s += (i ? "," : "") + to_string(ws[c].coeffs[i]);
  }
  return s.empty() ? "-" : s;
}

std::string int_list(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<int> ints(const Weight& w) {
  std::vector<int> out;
  for (const auto& c : w.coeffs) out.push_back(static_cast<int>(c.get_num().get_si()));
  return out;
}

}  // namespace

std::vector<SimpleType> simple_types(int max_rank) {
  std::vector<SimpleType> out;
  for (auto f : {Family::A, Family::B, Family::C, Family::D})
    for (int r = 1; r <= max_rank; ++r)
      if (is_canonical_type(f, r)) out.push_back({f, r});
  for (int r : {6, 7, 8})
    if (r <= max_rank) out.push_back({Family::E, r});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

GradedPiecesRow graded_pieces_row(const SimpleType& t, int node) {
  auto rs = std::make_shared<const RootSystem>(build_root_system(DynkinDiagram({t})));
  const Gradation gr(rs, node);
  const LeviData ld(rs, node);
  const auto& comps = ld.components();
  if (comps.size() > 1 || (comps.size() == 1 && comps[0].type.family != Family::A))
    throw Unsupported("Levi factor of " + t.name() + " at node " + std::to_string(node + 1) + " is not gl_n");
  const int n = comps.empty() ? 1 : comps[0].type.rank + 1;

  GradedPiecesRow row;
  row.algebra = algebra_name(t);
  row.type = t;
  row.node = node;
  row.order = gr.order();
  row.g0_dim = gr.dim(0);
  row.g0 = "gl_" + std::to_string(n);
  int k = 0;
  for (int i = 1; i <= 3; ++i) {
    PieceLabel p{-i, gr.dim(-i), "0"};
    if (p.dim) {
      const auto hw = n == 1 ? Weight{} : piece_rep(gr, ld, -i).highest_weight;
      if (i == 1)
        for (std::size_t j = 0; j < hw.coeffs.size(); ++j) k += static_cast<int>(j + 1) * ints(hw)[j];
      if (n == 1 && i == 1) k = 1;
      p.label = gln_module_name(n, hw, i * k);
    }
    row.pieces.push_back(p);
  }
  return row;
}

std::vector<GradedPiecesRow> graded_pieces_table(int max_rank) {
  std::vector<GradedPiecesRow> out;
  for (int n = 2; n <= max_rank; ++n) out.push_back(graded_pieces_row({Family::A, n}, 0));
  for (int n = 4; n <= max_rank; ++n) out.push_back(graded_pieces_row({Family::D, n}, n - 1));
  for (int r : {6, 7, 8})
    if (r <= max_rank) out.push_back(graded_pieces_row({Family::E, r}, 1));
  return out;
}

PvsRow pvs_row(const SimpleType& t, int node) {
  auto rs = std::make_shared<const RootSystem>(build_root_system(DynkinDiagram({t})));
  const Gradation gr(rs, node);
  const LeviData ld(rs, node);
  PvsRow row;
  row.type = t;
  row.node = node;
  row.levi = ld.diagram0().name();
  for (const auto& c : ld.components()) row.weights.push_back(c.weight);
  row.nu = ld.nu();
  row.name = pvs_name(ld);
  row.dim_v = gr.dim(-1);
  row.order = gr.order();
  return row;
}

std::vector<PvsRow> pvs_table(int max_rank) {
  std::vector<PvsRow> out;
  for (const auto& t : simple_types(max_rank))
    for (int node = 0; node < t.rank; ++node) out.push_back(pvs_row(t, node));
  return out;
}

std::vector<MarksRow> marks_table(int max_rank) {
  std::vector<MarksRow> out;
  for (const auto& t : simple_types(max_rank)) {
    const auto rs = build_root_system(DynkinDiagram({t}));
    out.push_back({t, highest_root(rs, 0).coords});
  }
  return out;
}

ordered_json to_json(const GradedPiecesRow& r) {
  ordered_json pieces = ordered_json::object();
  for (const auto& p : r.pieces) pieces[std::to_string(p.level)] = {{"label", p.label}, {"dim", p.dim}};
  return {{"algebra", r.algebra}, {"type", r.type.name()}, {"node", r.node + 1}, {"order", r.order},
          {"g0", r.g0},           {"g0_dim", r.g0_dim},     {"pieces", pieces}};
}

ordered_json to_json(const PvsRow& r) {
  ordered_json ws = ordered_json::array();
  for (const auto& w : r.weights) ws.push_back(ints(w));
  return {{"type", r.type.name()}, {"node", r.node + 1},      {"levi", r.levi},   {"highest_weight", ws},
          {"nu", r.nu},            {"group", r.name.group},   {"space", r.name.space},
          {"dim_v", r.dim_v},      {"order", r.order}};
}

ordered_json to_json(const MarksRow& r) { return {{"type", r.type.name()}, {"marks", r.marks}}; }

ordered_json to_json(const TwistedCaseResult& r) {
  std::vector<std::string> dims;
  for (const auto& d : r.piece_dims) dims.push_back(d.get_str());
  return {{"decomposition", r.name}, {"dim", r.ambient_dim}, {"dim_g0", r.level0_dim}, {"piece_dims", dims},
          {"pass", r.pass}};
}

ordered_json tables_json(int max_rank) {
  ordered_json out;
  out["max_rank"] = max_rank;
  for (const auto& r : graded_pieces_table(max_rank)) out["graded_pieces"].push_back(to_json(r));
  for (const auto& r : pvs_table(max_rank)) out["parabolic_pvs"].push_back(to_json(r));
  for (const auto& r : marks_table(max_rank)) out["marks"].push_back(to_json(r));
  for (const auto& r : twisted_affine_dim_check()) out["twisted_affine"].push_back(to_json(r));
  return out;
}

std::string align_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << line << "\n";
  }
  return os.str();
}

std::string tables_text(int max_rank) {
  std::ostringstream os;
  os << "Graded pieces of the gl_n gradations\n";
  std::vector<std::vector<std::string>> t1{{"g", "node", "g0", "g-1", "g-2", "g-3"}};
  for (const auto& r : graded_pieces_table(max_rank)) {
    std::vector<std::string> row{r.algebra, std::to_string(r.node + 1), r.g0};
    for (const auto& p : r.pieces) row.push_back(p.label);
    t1.push_back(row);
  }
  os << align_columns(t1) << "\n";

  os << "Parabolic prehomogeneous spaces\n";
  std::vector<std::vector<std::string>> t2{{"G", "a0", "levi", "weight", "nu", "(G0, V)", "dim V"}};
  for (const auto& r : pvs_table(max_rank))
    t2.push_back({r.type.name(), std::to_string(r.node + 1), r.levi, weight_text(r.weights), int_list(r.nu),
                  "(" + r.name.group + ", " + r.name.space + ")", std::to_string(r.dim_v)});
  os << align_columns(t2) << "\n";

  os << "Highest-root marks\n";
  std::vector<std::vector<std::string>> t4{{"type", "marks"}};
  for (const auto& r : marks_table(max_rank)) t4.push_back({r.type.name(), int_list(r.marks)});
  os << align_columns(t4) << "\n";

  os << "Twisted affine decompositions\n";
  std::vector<std::vector<std::string>> t3{{"decomposition", "dim g", "dim g0", "pieces", "ok"}};
  for (const auto& r : twisted_affine_dim_check()) {
    std::string pieces;
    for (const auto& d : r.piece_dims) pieces += (pieces.empty() ? "" : " + ") + d.get_str();
    t3.push_back({r.name, std::to_string(r.ambient_dim), std::to_string(r.level0_dim), pieces, r.pass ? "yes" : "NO"});
  }
  os << align_columns(t3);
  return os.str();
}

}  // namespace dynkin
