#pragma once

// Inverse construction: from (g0^ss, highest weight, connecting
// multiplicities) assemble the augmented Cartan matrix, validate it, and
// identify the ambient algebra.

#include <string>
#include <vector>

#include "dynkin/rootsys.hpp"

namespace dynkin {

struct AugmentationInput {
  DynkinDiagram diagram0;
  Weight omega;
  std::vector<int> nu;
};

/// Candidate matrix with the new node at index 0 and diagram0 at 1..rank.
/// Kept as a raw integer matrix so invalid candidates can still be reported on.
struct AugmentedMatrix {
  IntMatrix matrix;
  /// Attachment node (diagram0 index) per component, -1 when detached.
  std::vector<int> attachments;
};

AugmentedMatrix build_augmented_matrix(const AugmentationInput& in);

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool valid() const;
};

ValidationReport validate(const IntMatrix& m);
ValidationReport validate(const AugmentedMatrix& am);

struct Ambient {
  DynkinDiagram diagram;
  /// Canonical index of the new node.
  int node = 0;
};

/// Throws ValidationFailed when validate() reports a failure.
Ambient identify_ambient(const AugmentationInput& in);

struct Augmentation {
  AugmentationInput input;
  Ambient ambient;
};

/// Every (omega, nu) attaching one node to diagram0 with a finite-type result,
/// including the detached one.
std::vector<Augmentation> enumerate_augmentations(const DynkinDiagram& diagram0);

/// Parses "1;0,1,0,0" (components separated by ';', entries by ',').
Weight parse_component_weight(const DynkinDiagram& d, const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

}  // namespace dynkin
