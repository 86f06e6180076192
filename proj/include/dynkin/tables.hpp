#pragma once

// Regenerates the classification tables from first principles: graded pieces
// of the gl_n-type gradations, the parabolic PVS list with connecting
// multiplicities, highest-root marks, and the twisted-affine dimension report.

#include <string>
#include <vector>

#include "dynkin/naming.hpp"
#include "json.hpp"

namespace dynkin {

/// Canonical simple types of rank <= max_rank: A1.., B2.., C3.., D4.., E6-8, F4, G2.
std::vector<SimpleType> simple_types(int max_rank);

struct PieceLabel {
  int level = 0;
  int dim = 0;
  std::string label;
};

struct GradedPiecesRow {
  std::string algebra;
  SimpleType type;
  int node = 0;  // 0-based
  int order = 0;
  int g0_dim = 0;
  std::string g0;
  /// Levels -1, -2, -3.
  std::vector<PieceLabel> pieces;
};

/// Requires the Levi factor to be a single A_{n-1}; Unsupported otherwise.
GradedPiecesRow graded_pieces_row(const SimpleType& t, int node);
std::vector<GradedPiecesRow> graded_pieces_table(int max_rank);

struct PvsRow {
  SimpleType type;
  int node = 0;  // 0-based
  std::string levi;
  std::vector<Weight> weights;  // highest weight of g_{-1}, per Levi component
  std::vector<int> nu;
  PvsName name;
  int dim_v = 0;
  int order = 0;
};

PvsRow pvs_row(const SimpleType& t, int node);
std::vector<PvsRow> pvs_table(int max_rank);

struct MarksRow {
  SimpleType type;
  std::vector<int> marks;
};

std::vector<MarksRow> marks_table(int max_rank);

nlohmann::ordered_json to_json(const GradedPiecesRow& r);
nlohmann::ordered_json to_json(const PvsRow& r);
nlohmann::ordered_json to_json(const MarksRow& r);
nlohmann::ordered_json to_json(const TwistedCaseResult& r);

nlohmann::ordered_json tables_json(int max_rank);
std::string tables_text(int max_rank);

/// Columns padded to their widest entry.
std::string align_columns(const std::vector<std::vector<std::string>>& rows);

}  // namespace dynkin
