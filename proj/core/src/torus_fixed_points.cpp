#include "langdual/torus_fixed_points.hpp"

#include "langdual/error.hpp"

#include <algorithm>
#include <set>

namespace langdual {

namespace {

IntegerMatrix minus_identity(const IntegerMatrix& w) {
  if (!w.is_square()) throw InvalidArgument("lattice automorphism must be square");
  return w - IntegerMatrix::identity(w.rows());
}

void require_weyl_like(const RootDatum& rd, const IntegerMatrix& w) {
  if (w.rows() != rd.rank() || w.cols() != rd.rank()) throw InvalidArgument("element has wrong shape for datum");
  std::set<IntegerVector> coroots(rd.coroots().begin(), rd.coroots().end());
  for (const auto& c : rd.coroots())
    if (!coroots.count(w * c)) throw InvalidArgument("element does not permute the coroots of the datum");
}

}  // namespace

FixedSet::FixedSet(const IntegerMatrix& w) {
  const IntegerMatrix m = minus_identity(w);
  cosets_ = solve_mod_lattice(m);
  report_.fixed_dim = cosets_.kernel_dimension();
  report_.components = cosets_.representatives();
  report_.fixed_lattice_basis = kernel_basis(m);
}

FixedSetReport fixed_set(const IntegerMatrix& w) { return FixedSet(w).report(); }

FixedSetReport fixed_set(const WeylGroup& group, std::size_t w) {
  if (w >= group.size()) throw InvalidArgument("element index out of range");
  FixedSetReport r = fixed_set(group.element(w));
  r.element = w;
  return r;
}

FixedSetReport fixed_set(const RootDatum& rd, const IntegerMatrix& w) {
  require_weyl_like(rd, w);
  return fixed_set(w);
}

FixedSetReport full_fixed_points(const std::vector<IntegerMatrix>& generators, std::size_t rank) {
  std::vector<IntegerMatrix> blocks;
  for (const auto& s : generators) {
    if (s.rows() != rank || s.cols() != rank) throw InvalidArgument("generator has wrong shape");
    blocks.push_back(minus_identity(s));
  }
  if (blocks.empty()) blocks.push_back(IntegerMatrix::zero(rank, rank));
  const IntegerMatrix stacked = IntegerMatrix::stack(blocks);
  auto cosets = solve_mod_lattice(stacked, false);
  FixedSetReport r;
  r.fixed_dim = 0;
  r.components = cosets.representatives();
  r.fixed_lattice_basis = IntegerMatrix::zero(rank, 0);
  return r;
}

FixedSetReport full_fixed_points(const RootDatum& rd) { return full_fixed_points(rd.simple_reflections(), rd.rank()); }

CentralizerAction centralizer_action(const FixedSet& fixed, const IntegerMatrix& w, const IntegerMatrix& z) {
  if (z.rows() != w.rows() || z.cols() != w.cols()) throw InvalidArgument("centralizer_action: shape mismatch");
  if (z * w != w * z) throw InvalidArgument("centralizer_action: z does not commute with w");

  CentralizerAction out;
  const auto zr = to_rational(z);
  for (const auto& x : fixed.report().components) {
    auto c = fixed.component_of(zr * x);
    if (!c) throw Error("centralizer_action: image left the fixed set");
    out.permutation.push_back(*c);
  }

  const IntegerMatrix& k = fixed.report().fixed_lattice_basis;
  if (k.cols() == 0) {
    out.restriction = RationalMatrix(0, 0);
    return out;
  }
  const RationalMatrix kr = to_rational(k);
  const RationalMatrix zk = zr * kr;
  out.restriction = left_inverse(k) * zk;
  if (kr * out.restriction != zk) throw Error("centralizer_action: z does not preserve ker(w - 1)");
  return out;
}

CentralizerAction centralizer_action(const RootDatum& rd, const IntegerMatrix& w, const IntegerMatrix& z) {
  require_weyl_like(rd, w);
  require_weyl_like(rd, z);
  return centralizer_action(FixedSet(w), w, z);
}

}  // namespace langdual
