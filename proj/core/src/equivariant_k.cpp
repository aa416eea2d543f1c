#include "langdual/equivariant_k.hpp"

#include "langdual/error.hpp"
#include "langdual/torus_fixed_points.hpp"

namespace langdual {

namespace {

std::uint64_t to_count(const Rational& q, const char* what) {
  if (denominator(q) != 1 || q < 0)
    throw NonIntegralDimension(std::string("non-integral invariant dimension (") + what + " = " + q.str() + ")");
  return numerator(q).convert_to<std::uint64_t>();
}

ClassContribution class_contribution(const WeylGroup& group, std::size_t w) {
  const IntegerMatrix& wm = group.element(w);
  const FixedSet fixed(wm);
  const IntegerMatrix& k = fixed.report().fixed_lattice_basis;
  const std::size_t f = k.cols();
  const RationalMatrix kr = to_rational(k);
  const RationalMatrix kl = f ? left_inverse(k) : RationalMatrix(0, wm.rows());
  const auto z_list = group.centralizer(w);

  Rational even = 0, odd = 0;
  for (auto z : z_list) {
    const RationalMatrix zr = to_rational(group.element(z));
    std::size_t stable = 0;
    for (const auto& x : fixed.report().components) {
      auto c = fixed.component_of(zr * x);
      if (!c) throw Error("centralizer element moved a point off the fixed set");
      if (fixed.report().components[*c] == x) ++stable;
    }
    if (stable == 0) continue;
    const RationalMatrix restriction = f ? RationalMatrix(kl * zr * kr) : RationalMatrix(0, 0);
    even += Rational(stable) * trace_even(restriction);
    odd += Rational(stable) * trace_odd(restriction);
  }
  const Rational zsize(z_list.size());
  ClassContribution out;
  out.representative = w;
  out.class_size = group.conjugacy_classes()[group.class_of(w)].members.size();
  out.centralizer_order = z_list.size();
  out.fixed_dim = f;
  out.components = fixed.component_count();
  out.even = to_count(even / zsize, "even");
  out.odd = to_count(odd / zsize, "odd");
  return out;
}

IntegerMatrix inverse_transpose(const IntegerMatrix& m) { return to_integer(inverse(to_rational(m))).transpose(); }

}  // namespace

Rational trace_even(const RationalMatrix& m) {
  const auto id = RationalMatrix::identity(m.rows());
  return (determinant(id + m) + determinant(id - m)) / 2;
}

Rational trace_odd(const RationalMatrix& m) {
  const auto id = RationalMatrix::identity(m.rows());
  return (determinant(id + m) - determinant(id - m)) / 2;
}

KTheoryComputation rational_equivariant_k(const WeylGroup& group, const std::vector<std::size_t>& representatives) {
  const auto& classes = group.conjugacy_classes();
  if (representatives.size() != classes.size()) throw InvalidArgument("need one representative per class");
  KTheoryComputation out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const std::size_t w = representatives[c];
    if (w >= group.size() || group.class_of(w) != c) throw InvalidArgument("representative is not in its class");
    auto contrib = class_contribution(group, w);
    out.rank.k0 += contrib.even;
    out.rank.k1 += contrib.odd;
    out.classes.push_back(contrib);
  }
  return out;
}

KTheoryComputation rational_equivariant_k(const WeylGroup& group) {
  std::vector<std::size_t> reps;
  for (const auto& c : group.conjugacy_classes()) reps.push_back(c.representative);
  return rational_equivariant_k(group, reps);
}

GradedRank rational_equivariant_k(const RootDatum& rd, std::size_t cap) {
  return rational_equivariant_k(WeylGroup::generate(rd, cap)).rank;
}

DualityReport verify_duality(const RootDatum& rd, std::size_t cap) {
  const RootDatum dual = dualize(rd);
  const auto primal = rational_equivariant_k(WeylGroup::generate(rd, cap));
  const auto other = rational_equivariant_k(WeylGroup::generate(dual, cap));
  DualityReport r;
  r.primal_label = rd.label();
  r.dual_label = dual.label();
  r.primal = primal.rank;
  r.dual = other.rank;
  r.equal = r.primal == r.dual;
  r.cross_equal = r.primal.k0 == r.dual.k1 && r.primal.k1 == r.dual.k0;
  r.primal_classes = primal.classes;
  r.dual_classes = other.classes;
  return r;
}

GradedRank group_algebra_k(const WeylGroup& group, const IntegerMatrix& lattice_basis) {
  const std::size_t n = group.rank();
  if (lattice_basis.rows() != n || lattice_basis.cols() != n) throw InvalidArgument("lattice basis must be n x n");
  const RationalMatrix b = to_rational(lattice_basis);
  const RationalMatrix binv = inverse(b);
  std::vector<IntegerMatrix> gens;
  for (auto g : group.generators()) {
    IntegerMatrix on_sublattice;
    try {
      on_sublattice = to_integer(binv * to_rational(group.element(g)) * b);
    } catch (const InvalidArgument&) {
      throw InvalidArgument("group does not preserve the sublattice");
    }
    gens.push_back(inverse_transpose(on_sublattice));
  }
  return rational_equivariant_k(WeylGroup::from_generators(n, gens)).rank;
}

AffineReport affine_comparison(const RootDatum& rd, std::size_t cap) {
  if (!center(rd).is_trivial())
    throw InvalidArgument("affine_comparison needs an adjoint datum; " + rd.label().to_string() + " has center " +
                          center(rd).to_string());
  const WeylGroup w = WeylGroup::generate(rd, cap);
  const std::size_t n = rd.rank();
  AffineReport r;
  r.label = rd.label();
  r.extended = group_algebra_k(w, IntegerMatrix::identity(n));
  r.dual_affine = group_algebra_k(w.contragredient(), column_lattice_basis(rd.root_matrix()));
  r.affine = group_algebra_k(w, column_lattice_basis(rd.coroot_matrix()));
  r.dual_affine_equal = r.dual_affine == r.extended;
  const CartanType t = rd.label().type;
  r.affine_asserted = t != CartanType::B && t != CartanType::C;
  r.affine_equal = r.affine == r.extended;
  return r;
}

}  // namespace langdual
