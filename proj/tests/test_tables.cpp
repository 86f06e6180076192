#include <algorithm>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dynkin/tables.hpp"
#include "oracles.hpp"

using namespace dynkin;

namespace {

std::vector<int> ints(const Weight& w) {
  std::vector<int> out;
  for (const auto& c : w.coeffs) out.push_back(static_cast<int>(c.get_num().get_si()));
  return out;
}

std::vector<oracle::Factor> computed_factors(char family, int rank, int node1) {
  const auto ld = levi({DynkinDiagram({SimpleType{static_cast<Family>(std::string("ABCDEFG").find(family)), rank}}),
                        node1 - 1});
  std::vector<oracle::Factor> out;
  for (const auto& c : ld.components()) {
    const char f = family_letter(c.type.family);
    out.push_back({f, c.type.rank, oracle::canonical_weight(f, c.type.rank, ints(c.weight)), c.nu});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<oracle::Factor> printed_factors(const oracle::PrintedRow& row) {
  auto out = row.factors;
  for (auto& f : out) f.weight = oracle::canonical_weight(f.family, f.rank, f.weight);
  std::sort(out.begin(), out.end());
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("graded pieces table") {
  const auto rows = graded_pieces_table(8);
  for (const auto& expected : oracle::graded_piece_rows()) {
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const GradedPiecesRow& r) {
      return family_letter(r.type.family) == expected.family && r.type.rank == expected.rank &&
             r.node + 1 == expected.node;
    });
    REQUIRE(it != rows.end());
    CAPTURE(it->algebra);
    CHECK(it->g0 == "gl_" + std::to_string(expected.rank));
    CHECK(it->g0_dim == expected.rank * expected.rank);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(it->pieces[i].label == expected.labels[i]);
      CHECK(it->pieces[i].dim == expected.dims[i]);
    }
  }
  CHECK(rows.size() == oracle::graded_piece_rows().size());
}

TEST_CASE("parabolic PVS rows match the printed table") {
  const auto rows = oracle::pvs_rows();
  CHECK(rows.size() > 100);
  for (const auto& row : rows) {
    CAPTURE(std::string(1, row.family) + std::to_string(row.rank));
    CAPTURE(row.node);
    CHECK(computed_factors(row.family, row.rank, row.node) == printed_factors(row));
  }
}

TEST_CASE("every node is covered up to diagram symmetry") {
  const auto rows = oracle::pvs_rows();
  for (const auto& t : simple_types(8)) {
    if (t.rank < 2) continue;
    const char f = family_letter(t.family);
    if (f == 'C' && t.rank == 2) continue;
    const auto d = DynkinDiagram({t});
    for (int node = 0; node < t.rank; ++node) {
      bool found = false;
      for (const auto& s : diagram_automorphisms(d.cartan()))
        for (const auto& r : rows)
          found = found || (r.family == f && r.rank == t.rank && r.node - 1 == s[node]);
      CAPTURE(t.name());
      CAPTURE(node + 1);
      CHECK(found);
    }
  }
}

TEST_CASE("highest-root marks") {
  int sixes = 0;
  for (const auto& r : marks_table(8)) {
    const char f = family_letter(r.type.family);
    CAPTURE(r.type.name());
    CHECK(r.marks == oracle::printed_marks(f, r.type.rank));
    CHECK(r.marks == oracle::highest_root(oracle::cartan(f, r.type.rank)));
    for (std::size_t i = 0; i < r.marks.size(); ++i)
      if (r.marks[i] == 6) {
        ++sixes;
        CHECK(r.type.name() == "E8");
        CHECK(i == 3);
      }
    CHECK(*std::max_element(r.marks.begin(), r.marks.end()) <= 6);
  }
  CHECK(sixes == 1);
}

TEST_CASE("tables match the checked-in golden files") {
  const auto json_golden = slurp(std::string(GOLDEN_DIR) + "/tables.json");
  const auto text_golden = slurp(std::string(GOLDEN_DIR) + "/tables.txt");
  REQUIRE_FALSE(json_golden.empty());
  REQUIRE_FALSE(text_golden.empty());
  CHECK(tables_json(8).dump(2) + "\n" == json_golden);
  CHECK(tables_text(8) == text_golden);
}

TEST_CASE("column alignment") {
  CHECK(align_columns({{"a", "bb"}, {"ccc", "d"}}) == "a    bb\nccc  d\n");
}
