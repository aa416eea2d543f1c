#pragma once

#include "langdual/exact_linalg.hpp"
#include "langdual/root_datum.hpp"
#include "langdual/weyl_group.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace langdual {

// Fixed set T^w of a lattice automorphism w acting on T = t / Z^n: a disjoint
// union of parallel subtori of dimension fixed_dim, one per component.
struct FixedSetReport {
  // Group element the report describes; nullopt for the simultaneous fixed
  // points of all generators.
  std::optional<std::size_t> element;
  std::size_t fixed_dim = 0;
  // Representatives in [0,1)^n, lexicographically sorted.
  std::vector<RationalVector> components;
  // Z-basis of Z^n ∩ ker(w - 1), as columns.
  IntegerMatrix fixed_lattice_basis;
};

// Fixed set together with the data needed to locate points in it.
class FixedSet {
 public:
  explicit FixedSet(const IntegerMatrix& w);

  const FixedSetReport& report() const { return report_; }
  std::size_t component_count() const { return report_.components.size(); }
  // Component containing a point of T^w, or nullopt if x is not in T^w.
  std::optional<std::size_t> component_of(const RationalVector& x) const { return cosets_.coset_index(x); }

 private:
  FixedSetReport report_;
  LatticeCosets cosets_;
};

FixedSetReport fixed_set(const IntegerMatrix& w);
FixedSetReport fixed_set(const WeylGroup& group, std::size_t w);
// Uses the Weyl group of rd on X_*.
FixedSetReport fixed_set(const RootDatum& rd, const IntegerMatrix& w);

// Points of T fixed by every generator: solves the stacked system
// (s - 1)x ∈ Z^n over all generators s. Throws InfiniteSolutionSet if the
// common fixed space is not zero.
FixedSetReport full_fixed_points(const std::vector<IntegerMatrix>& generators, std::size_t rank);
FixedSetReport full_fixed_points(const RootDatum& rd);

struct CentralizerAction {
  // permutation[c] = component containing z * (representative c).
  std::vector<std::size_t> permutation;
  // Matrix of z on ker(w - 1) ⊗ Q in the basis fixed_lattice_basis.
  RationalMatrix restriction;
};

// Throws InvalidArgument unless zw = wz.
CentralizerAction centralizer_action(const FixedSet& fixed, const IntegerMatrix& w, const IntegerMatrix& z);
CentralizerAction centralizer_action(const RootDatum& rd, const IntegerMatrix& w, const IntegerMatrix& z);

}  // namespace langdual
