#pragma once

// Human-readable names for simple groups, their irreducible representations
// and the (G0, V) pairs of a parabolic gradation. ASCII only:
// "Lambda^3 C^8", "S^2 C^3", "(C^5)*", "C^2 (x) C^3".

#include <string>

#include "dynkin/levirep.hpp"

namespace dynkin {

/// SL_n, SO_n / Spin_n, Sp_r (rank-indexed), E6, E7, E8, F4, G2.
std::string group_name(const SimpleType& t, const Weight& w);

/// Name of the irreducible module with highest weight w; "V(a,b,...)" when
/// no classical name applies.
std::string rep_name(const SimpleType& t, const Weight& w);

struct PvsName {
  std::string group;
  std::string space;
};

/// (G0, g_{-1}) with the centre absorbed into the first A-type factor that
/// acts nontrivially, as GL_k.
PvsName pvs_name(const LeviData& ld);

/// Label of the gl_n-module whose sl_n highest weight is w and on which the
/// centre acts with total degree `degree`, e.g. (n=8, w=omega_1, degree 9)
/// -> "C^8 (x) Lambda^8 C^8". DomainError when degree is incompatible.
std::string gln_module_name(int n, const Weight& w, int degree);

}  // namespace dynkin
