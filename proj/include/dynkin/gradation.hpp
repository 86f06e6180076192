#pragma once

// Z-gradations induced by a single marked node, and the level-zero
// subsystems obtained by collapsing the grading modulo m.

#include <map>
#include <memory>
#include <vector>

#include "dynkin/rootsys.hpp"

namespace dynkin {

/// A diagram together with the marked node (0-based, in diagram order).
struct NodeChoice {
  DynkinDiagram diagram;
  int node = 0;
};

class Gradation {
 public:
  Gradation(std::shared_ptr<const RootSystem> rs, int node);

  const RootSystem& roots() const noexcept { return *rs_; }
  std::shared_ptr<const RootSystem> root_system() const noexcept { return rs_; }
  int node() const noexcept { return node_; }
  int order() const noexcept { return order_; }

  /// Level i root set; empty when |i| > order.
  const std::vector<Root>& level(int i) const;
  const std::map<int, std::vector<Root>>& levels() const noexcept { return levels_; }
  int level_of(const Root& r) const { return r.coords.at(node_); }
  /// dim g_0 = rank + |Delta_0|, dim g_i = |Delta_i| otherwise.
  int dim(int i) const;

  /// Grading element in coroot coordinates: alpha_j(c) = delta_{j,node}.
  const std::vector<Rational>& grading_element() const noexcept { return c_; }

 private:
  std::shared_ptr<const RootSystem> rs_;
  int node_;
  int order_ = 0;
  std::map<int, std::vector<Root>> levels_;
  std::vector<Rational> c_;
};

Gradation grade(const NodeChoice& choice);
int order_of(const NodeChoice& choice);

/// Union of the levels divisible by m. Throws DivisibilityError unless m | order.
std::vector<Root> level_zero_subsystem(const Gradation& gr, int m);

/// Residue class j (0 <= j < m) -> union of levels congruent to j mod m.
std::map<int, std::vector<Root>> zm_pieces(const Gradation& gr, int m);

bool closed_symmetric(const RootSystem& rs, const std::vector<Root>& subset);

/// Marks of the extended diagram: index 0 is the lowest root (mark 1), index k
/// is the k-th simple root with its coefficient in the highest root.
std::vector<int> extended_marks(const DynkinDiagram& diagram);

/// Type of the subsystem generated by the extended simple roots minus the given
/// one (mark prime), or of the Levi subsystem (mark 1). Extended index 0 is the
/// lowest root. Marks 4 and 6 raise Unsupported.
DynkinDiagram borel_de_siebenthal(const DynkinDiagram& diagram, int extended_node);

/// Cartan matrix <b_i, b_j> of an arbitrary list of roots.
IntMatrix pairing_matrix(const RootSystem& rs, const std::vector<Root>& generators);

}  // namespace dynkin
