#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the library except for the Matrix/Rational containers.

#include <set>
#include <string>
#include <vector>

#include "dynkin/linalg.hpp"

namespace oracle {

using dynkin::IntMatrix;
using dynkin::RatMatrix;
using dynkin::Rational;

/// Bourbaki Cartan matrix a_ij = <alpha_i, alpha_j^vee>, written out from the bond list.
IntMatrix cartan(char family, int rank);

/// All roots, by closing the simple roots under the simple reflections.
std::set<std::vector<int>> roots_by_reflection(const IntMatrix& a);

/// Highest root: the unique root of maximal height.
std::vector<int> highest_root(const IntMatrix& a);

/// Coefficients of (l w1 + mu w2)^m on e^1 ^ ... ^ e^2m, expanded in the
/// exterior algebra term by term (index c_k of l^(m-k) mu^k).
std::vector<Rational> wedge_phi(const RatMatrix& M1, const RatMatrix& M2, int m);

/// Marks read off the labelled diagrams of the classification, in Bourbaki order.
std::vector<int> printed_marks(char family, int rank);

/// One simple factor of a Levi subalgebra and its action on g_{-1}.
struct Factor {
  char family = 'A';
  int rank = 1;
  std::vector<int> weight;
  int nu = 1;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// Representative of the weight modulo diagram automorphisms of the factor.
std::vector<int> canonical_weight(char family, int rank, std::vector<int> weight);

/// A printed (G0, V) row translated to simple factors.
struct PrintedRow {
  char family = 'A';
  int rank = 1;
  int node = 1;  // 1-based
  std::vector<Factor> factors;
};

/// Rows of the parabolic PVS table, with the classical families
/// instantiated at every rank 2..8 for which the row is printed.
std::vector<PrintedRow> pvs_rows();

/// Rows of the graded-pieces table for one gradation, labels at levels -1..-3.
struct GradedPieceRow {
  char family = 'A';
  int rank = 1;
  int node = 1;
  std::vector<std::string> labels;
  std::vector<int> dims;
};
std::vector<GradedPieceRow> graded_piece_rows();

}  // namespace oracle
