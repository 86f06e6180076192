#pragma once

// Levi data of a single-node gradation: the semisimple part g0^ss, the
// restriction of ambient roots to its weight lattice, the graded pieces as
// g0^ss-representations, and the connecting multiplicities.

#include <memory>
#include <string>
#include <vector>

#include "dynkin/gradation.hpp"

namespace dynkin {

struct LeviComponent {
  SimpleType type;
  /// nodes[t] = ambient node playing the role of canonical node t.
  std::vector<int> nodes;
  /// max over the component of -<alpha, alpha_0>; 0 when detached.
  int nu = 0;
  /// Restriction of -alpha_0 in this component's fundamental weights.
  Weight weight;
};

class LeviData {
 public:
  LeviData(std::shared_ptr<const RootSystem> ambient, int node);

  const RootSystem& ambient() const noexcept { return *ambient_; }
  int node() const noexcept { return node_; }
  /// Components ordered by family, rank, descending nu, descending weight,
  /// then smallest ambient node.
  const std::vector<LeviComponent>& components() const noexcept { return components_; }
  const DynkinDiagram& diagram0() const noexcept { return diagram0_; }
  const RootSystem& root_system0() const noexcept { return *rs0_; }
  /// Ambient node of each diagram0 node.
  const std::vector<int>& ambient_nodes() const noexcept { return ambient_nodes_; }
  /// The center of g0 is always one-dimensional.
  int center_dim() const noexcept { return 1; }

  std::vector<int> nu() const;
  /// Highest weight of g_{-1} over diagram0.
  Weight omega() const;

 private:
  std::shared_ptr<const RootSystem> ambient_;
  int node_;
  std::vector<LeviComponent> components_;
  DynkinDiagram diagram0_;
  std::shared_ptr<const RootSystem> rs0_;
  std::vector<int> ambient_nodes_;
};

LeviData levi(const NodeChoice& choice);

/// <alpha, alpha_j> for every node j of diagram0, in diagram0 order.
Weight restrict_weight(const LeviData& ld, const Root& alpha);

/// Splits a diagram0 weight into per-component weights.
std::vector<Weight> component_weights(const LeviData& ld, const Weight& w);
std::vector<Weight> component_weights(const DynkinDiagram& d, const Weight& w);

struct PieceRep {
  int level = 0;
  std::vector<Weight> weights;
  Weight highest_weight;
  int dim = 0;
};

PieceRep piece_rep(const Gradation& gr, const LeviData& ld, int level);

/// Weyl dimension formula. Throws DomainError for non-dominant weights.
Integer weyl_dim(const DynkinDiagram& d, const Weight& w);
Integer weyl_dim(const LeviData& ld, const Weight& w);

std::vector<int> connecting_multiplicities(const NodeChoice& choice);

/// One summand of a decomposition: `count` copies of the irreducible module
/// with highest weight `weight` over `diagram`.
struct DimTerm {
  int count = 1;
  DynkinDiagram diagram;
  Weight weight;
};

struct TwistedCase {
  std::string name;
  DynkinDiagram ambient;
  int center_dim = 0;
  DynkinDiagram reductive;
  std::vector<DimTerm> pieces;
};

struct TwistedCaseResult {
  std::string name;
  int ambient_dim = 0;
  int level0_dim = 0;
  std::vector<Integer> piece_dims;  // already multiplied by the count
  bool pass = false;
};

/// The six folded decompositions (one per twisted-affine prehomogeneous space).
std::vector<TwistedCase> twisted_affine_cases();
std::vector<TwistedCaseResult> twisted_affine_dim_check();

}  // namespace dynkin
