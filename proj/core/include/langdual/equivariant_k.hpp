#pragma once

// Rational ranks of W-equivariant K-theory of a torus via the delocalized
// fixed-point formula
//
//   rank K^0_W(T) = sum over classes [w] of dim H^even(T^w)^{Z(w)}
//   rank K^1_W(T) = sum over classes [w] of dim H^odd(T^w)^{Z(w)}
//
// with the invariant dimensions obtained by averaging traces over Z(w).

#include "langdual/root_datum.hpp"
#include "langdual/weyl_group.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace langdual {

struct GradedRank {
  std::uint64_t k0 = 0;
  std::uint64_t k1 = 0;

  bool operator==(const GradedRank&) const = default;
};

struct ClassContribution {
  std::size_t representative = 0;
  std::size_t class_size = 0;
  std::size_t centralizer_order = 0;
  std::size_t fixed_dim = 0;
  std::size_t components = 0;
  std::uint64_t even = 0;
  std::uint64_t odd = 0;
};

struct KTheoryComputation {
  GradedRank rank;
  std::vector<ClassContribution> classes;  // in class order
};

// tr(M | Λ^even) and tr(M | Λ^odd), from det(I + M) and det(I - M).
Rational trace_even(const RationalMatrix& m);
Rational trace_odd(const RationalMatrix& m);

// Torus t / Z^n with the group acting through its matrices.
KTheoryComputation rational_equivariant_k(const WeylGroup& group);
// Same, using representatives[c] for class c instead of the default one.
KTheoryComputation rational_equivariant_k(const WeylGroup& group, const std::vector<std::size_t>& representatives);
// T = t / X_*(rd) under W(rd).
GradedRank rational_equivariant_k(const RootDatum& rd, std::size_t cap = kDefaultWeylCap);

struct DualityReport {
  RootDatumLabel primal_label;
  RootDatumLabel dual_label;
  GradedRank primal;
  GradedRank dual;
  bool equal = false;        // k0 = k0 and k1 = k1
  bool cross_equal = false;  // k0 = k1 and k1 = k0, recorded for reference
  std::vector<ClassContribution> primal_classes;
  std::vector<ClassContribution> dual_classes;
};

// Compares W-equivariant K-theory of T (from rd) and T^vee (from dualize(rd),
// with its own Weyl group generated independently).
DualityReport verify_duality(const RootDatum& rd, std::size_t cap = kDefaultWeylCap);

// Rank of K_*(C*(Λ ⋊ W)) ⊗ Q for the sublattice Λ ⊆ Z^n spanned by the
// columns of lattice_basis (which W must preserve): the W-equivariant K-theory
// of the Pontryagin dual torus of Λ.
GradedRank group_algebra_k(const WeylGroup& group, const IntegerMatrix& lattice_basis);

struct AffineReport {
  RootDatumLabel label;
  GradedRank extended;      // W_a' = X_* ⋊ W
  GradedRank dual_affine;   // W_a^vee = (coroot lattice of the dual) ⋊ W
  GradedRank affine;        // W_a = (coroot lattice) ⋊ W
  bool dual_affine_equal = false;
  bool affine_asserted = false;  // only for types A, D, E, F, G
  bool affine_equal = false;
  bool passed() const { return dual_affine_equal && (!affine_asserted || affine_equal); }
};

// rd must be adjoint (trivial center); throws InvalidArgument otherwise.
AffineReport affine_comparison(const RootDatum& rd, std::size_t cap = kDefaultWeylCap);

}  // namespace langdual
