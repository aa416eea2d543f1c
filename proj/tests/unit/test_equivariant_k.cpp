#include "langdual/equivariant_k.hpp"
#include "langdual/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace langdual;

namespace {

struct Case {
  CartanType type;
  std::size_t rank;
};

// Every simple type with |W| <= 48.
const std::vector<Case> kSmall = {{CartanType::A, 1}, {CartanType::A, 2}, {CartanType::A, 3}, {CartanType::B, 2},
                                  {CartanType::B, 3}, {CartanType::C, 2}, {CartanType::C, 3}, {CartanType::D, 3},
                                  {CartanType::G, 2}};

std::vector<RootDatum> small_data() {
  std::vector<RootDatum> out;
  for (const auto& c : kSmall) {
    out.push_back(build_simple(c.type, c.rank, GroupForm::simply_connected()));
    out.push_back(build_simple(c.type, c.rank, GroupForm::adjoint()));
  }
  out.push_back(build_simple(CartanType::A, 3, GroupForm::parse("quotient:2", CartanType::A, 3)));
  out.push_back(build_simple(CartanType::D, 3, GroupForm::parse("so", CartanType::D, 3)));
  return out;
}

}  // namespace

TEST_CASE("exterior traces") {
  const RationalMatrix r{{0, -1}, {1, 0}};  // rotation by 90 degrees
  CHECK(trace_even(r) == 2);                // 1 + det
  CHECK(trace_odd(r) == 0);                 // trace
  CHECK(trace_even(RationalMatrix(0, 0)) == 1);
  CHECK(trace_odd(RationalMatrix(0, 0)) == 0);
  const RationalMatrix m{{2, 1, 0}, {0, 1, 3}, {1, 0, 1}};
  CHECK(trace_even(m) == oracle::exterior_trace(m, 0) + oracle::exterior_trace(m, 2));
  CHECK(trace_odd(m) == oracle::exterior_trace(m, 1) + oracle::exterior_trace(m, 3));
}

TEST_CASE("inversion on the circle gives (3, 0)") {
  const auto w = WeylGroup::from_generators(1, {IntegerMatrix{{-1}}});
  const auto k = rational_equivariant_k(w);
  CHECK(k.rank == GradedRank{3, 0});
  REQUIRE(k.classes.size() == 2);
  CHECK(k.classes[0].components == 2);
  CHECK(k.classes[1].fixed_dim == 1);
  // same as the SU2 datum
  CHECK(rational_equivariant_k(build_simple(CartanType::A, 1, GroupForm::simply_connected())) == GradedRank{3, 0});
}

TEST_CASE("trivial group gives non-equivariant torus ranks") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto k = rational_equivariant_k(WeylGroup::from_generators(n, {})).rank;
    CHECK(k.k0 == (std::uint64_t{1} << (n - 1)));
    CHECK(k.k1 == (std::uint64_t{1} << (n - 1)));
  }
}

TEST_CASE("class-representative and commuting-pairs forms agree, |W| <= 48") {
  for (const auto& rd : small_data()) {
    CAPTURE(rd.label().to_string());
    const auto w = WeylGroup::generate(rd);
    REQUIRE(w.size() <= 48);
    CHECK(rational_equivariant_k(w).rank == oracle::commuting_pairs_k(w));
  }
}

TEST_CASE("result does not depend on class representatives, |W| <= 48") {
  for (const auto& rd : small_data()) {
    CAPTURE(rd.label().to_string());
    const auto w = WeylGroup::generate(rd);
    const auto base = rational_equivariant_k(w);
    std::vector<std::size_t> reps;
    for (const auto& c : w.conjugacy_classes()) reps.push_back(c.representative);
    for (std::size_t c = 0; c < reps.size(); ++c)
      for (auto member : w.conjugacy_classes()[c].members) {
        auto alt = reps;
        alt[c] = member;
        const auto other = rational_equivariant_k(w, alt);
        CHECK(other.rank == base.rank);
        CHECK(other.classes[c].even == base.classes[c].even);
        CHECK(other.classes[c].odd == base.classes[c].odd);
      }
  }
}

TEST_CASE("Euler characteristic matches the Lefschetz count") {
  for (const auto& rd : small_data()) {
    CAPTURE(rd.label().to_string());
    const auto w = WeylGroup::generate(rd);
    const auto k = rational_equivariant_k(w).rank;
    const Rational euler = Rational(static_cast<long long>(k.k0)) - Rational(static_cast<long long>(k.k1));
    CHECK(euler == oracle::lefschetz_euler(w));
  }
}

TEST_CASE("Euler characteristic for rank <= 2 by grid enumeration") {
  // k0 - k1 = (1/|W|) sum over commuting pairs with finite common fixed set
  // of the number of common fixed points, counted on a grid.
  for (const auto& rd : small_data()) {
    if (rd.rank() > 2) continue;
    CAPTURE(rd.label().to_string());
    const auto w = WeylGroup::generate(rd);
    Rational total = 0;
    for (const auto& a : w.elements())
      for (const auto& b : w.elements()) {
        if (a * b != b * a) continue;
        const auto stacked = IntegerMatrix::stack({a - IntegerMatrix::identity(rd.rank()), b - IntegerMatrix::identity(rd.rank())});
        if (rank(stacked) < rd.rank()) continue;
        total += Rational(static_cast<long long>(oracle::grid_common_fixed({a, b}, rd.rank(), 12)));
      }
    total /= Rational(w.size());
    const auto k = rational_equivariant_k(w).rank;
    CHECK(total == Rational(static_cast<long long>(k.k0)) - Rational(static_cast<long long>(k.k1)));
  }
}

TEST_CASE("duality verdicts") {
  const RootDatum su3 = build_simple(CartanType::A, 2, GroupForm::simply_connected());
  auto r = verify_duality(su3);
  CHECK(r.equal);
  CHECK(r.dual_label.form == "adjoint");
  CHECK(r.primal == GradedRank{5, 1});

  r = verify_duality(build_simple(CartanType::B, 2, GroupForm::simply_connected()));
  CHECK(r.equal);
  CHECK(r.dual_label.type == CartanType::C);

  r = verify_duality(build_simple(CartanType::G, 2, GroupForm::simply_connected()));
  CHECK(r.equal);
  CHECK(r.primal_label == r.dual_label);

  for (const auto& rd : small_data()) {
    CAPTURE(rd.label().to_string());
    CHECK(verify_duality(rd).equal);
  }
  CHECK_THROWS_AS(verify_duality(build_simple(CartanType::E, 7, GroupForm::simply_connected())), GroupTooLarge);
}

TEST_CASE("affine comparison") {
  const auto a2 = affine_comparison(build_simple(CartanType::A, 2, GroupForm::adjoint()));
  CHECK(a2.passed());
  CHECK(a2.affine_asserted);
  CHECK(a2.extended == a2.dual_affine);

  const auto g2 = affine_comparison(build_simple(CartanType::G, 2, GroupForm::adjoint()));
  CHECK(g2.passed());
  CHECK(g2.extended == g2.affine);

  const auto b2 = affine_comparison(build_simple(CartanType::B, 2, GroupForm::adjoint()));
  CHECK(b2.dual_affine_equal);
  CHECK_FALSE(b2.affine_asserted);
  CHECK(b2.passed());

  CHECK_THROWS_AS(affine_comparison(build_simple(CartanType::A, 2, GroupForm::simply_connected())), InvalidArgument);
}

TEST_CASE("group algebra of the full lattice is the torus computation") {
  const RootDatum rd = build_simple(CartanType::B, 3, GroupForm::adjoint());
  const auto w = WeylGroup::generate(rd);
  // Λ = Z^n: dual torus of X_* with the contragredient action, i.e. T^vee.
  CHECK(group_algebra_k(w, IntegerMatrix::identity(3)) == rational_equivariant_k(dualize(rd)));
  CHECK_THROWS_AS(group_algebra_k(w, IntegerMatrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), InvalidArgument);
}
