#include "langdual/clifford.hpp"
#include "langdual/error.hpp"

#include <doctest.h>

using namespace langdual;

namespace {

const GaussianRational kI = GaussianRational::i();

CliffordElement x(std::size_t n, std::size_t j) { return CliffordElement::e(n, j) * CliffordElement::eps(n, j); }

}  // namespace

TEST_CASE("generators") {
  for (std::size_t n = 1; n <= kMaxCliffordDimension; ++n) {
    const auto one = CliffordElement::scalar(n, Rational(1));
    for (std::size_t a = 0; a < 2 * n; ++a) {
      const auto ga = a < n ? CliffordElement::e(n, a) : CliffordElement::eps(n, a - n);
      CHECK(ga * ga == one);
      for (std::size_t b = a + 1; b < 2 * n; ++b) {
        const auto gb = b < n ? CliffordElement::e(n, b) : CliffordElement::eps(n, b - n);
        CHECK((ga * gb + gb * ga).is_zero());
      }
    }
    CHECK(one.blade_count() == (std::size_t{1} << (2 * n)));
    CHECK((x(n, 0) * x(n, 0) + one).is_zero());
  }
  CHECK_THROWS_AS(CliffordElement(0), InvalidArgument);
  CHECK_THROWS_AS(CliffordElement(5), InvalidArgument);
  CHECK(CliffordElement::blade_sign(0b10, 0b01) == -1);
  CHECK(CliffordElement::blade_sign(0b01, 0b10) == 1);
}

TEST_CASE("associativity on random-ish elements") {
  const std::size_t n = 2;
  CliffordElement a(n), b(n), c(n);
  for (CliffordElement::Blade k = 0; k < 16; ++k) {
    a.set_coefficient(k, GaussianRational(Rational(static_cast<int>(k % 5) - 2), Rational(static_cast<int>(k % 3))));
    b.set_coefficient(k, GaussianRational(Rational(static_cast<int>((3 * k) % 7) - 3), Rational(1, 2)));
    c.set_coefficient(k, GaussianRational(Rational(static_cast<int>(k) - 8, 3), Rational(static_cast<int>(k % 2))));
  }
  CHECK((a * b) * c == a * (b * c));
  CHECK((a * b).star() == b.star() * a.star());
  CHECK(a.star().star() == a);
}

TEST_CASE("projection is a self-adjoint idempotent") {
  for (std::size_t n = 1; n <= kMaxCliffordDimension; ++n) {
    CAPTURE(n);
    const auto p = clifford_projection(n);
    CHECK(p * p == p);
    CHECK(p.star() == p);
    CHECK_FALSE(p.is_zero());
    // normalized trace of a rank one projection on 2^n-dimensional spinors
    CHECK(p.coefficient(0) == GaussianRational(Rational(1, 1 << n)));

    const auto pd = dual_projection(n);
    CHECK(pd * pd == pd);
    CHECK(pd.star() == pd);
    CHECK((p * pd).is_zero());
    for (std::size_t j = 0; j < n; ++j) CHECK(x(n, j) * p == p * kI);
  }
}

TEST_CASE("corner identity for n = 1") {
  const auto p = clifford_projection(1);
  CHECK(p * x(1, 0) * p == p * kI);
  CHECK(p == (CliffordElement::scalar(1, Rational(1)) - x(1, 0) * kI) * GaussianRational(Rational(1, 2)));
}

TEST_CASE("spinor intertwiner") {
  for (std::size_t n = 1; n <= kMaxCliffordDimension; ++n) {
    CAPTURE(n);
    const auto u = spinor_intertwiner(n);
    CHECK(u * u.star() == CliffordElement::scalar(n, Rational(1)));
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(conjugation_by_u(n, CliffordElement::e(n, j)) == CliffordElement::e(n, j));
      CHECK(conjugation_by_u(n, CliffordElement::eps(n, j)) == CliffordElement::eps(n, j) * GaussianRational(-1));
    }
    CHECK(conjugation_by_u(n, clifford_projection(n)) == dual_projection(n));
    CHECK(u * clifford_projection(n) * u.star() == dual_projection(n));
  }
}

TEST_CASE("invariance under signed permutations") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const auto p = clifford_projection(n);
    const auto perms = signed_permutations(n);
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    CHECK(perms.size() == (std::size_t{1} << n) * fact);
    for (const auto& g : perms) {
      CHECK(symmetric_invariance_check(n, g, p));
      for (std::size_t k = 1; k <= n; ++k) {
        CHECK(symmetric_invariance_check(n, g, power_sum(n, k)));
        CHECK(symmetric_invariance_check(n, g, elementary_symmetric(n, k)));
      }
    }
  }
  // the swap on e_1 eps^1 + e_2 eps^2
  const RationalMatrix swap{{0, 1}, {1, 0}};
  const auto s = x(2, 0) + x(2, 1);
  CHECK(apply_orthogonal(swap, s) == s);
  CHECK(apply_orthogonal(swap, x(2, 0)) == x(2, 1));
  CHECK(apply_orthogonal(RationalMatrix{{1, 0}, {0, -1}}, clifford_projection(2)) == clifford_projection(2));
  // a non-permutation rotation still fixes the canonical element and P
  const RationalMatrix rot{{Rational(3, 5), Rational(-4, 5)}, {Rational(4, 5), Rational(3, 5)}};
  CHECK(apply_orthogonal(rot, s) == s);
  CHECK(apply_orthogonal(rot, clifford_projection(2)) == clifford_projection(2));
  CHECK_FALSE(apply_orthogonal(rot, x(2, 0)) == x(2, 0));
}

TEST_CASE("symmetric functions") {
  CHECK(power_sum(2, 1) == x(2, 0) + x(2, 1));
  CHECK(elementary_symmetric(2, 2) == x(2, 0) * x(2, 1));
  CHECK(elementary_symmetric(3, 0) == CliffordElement::scalar(3, Rational(1)));
  // x_j^2 = -1
  CHECK(power_sum(3, 2) == CliffordElement::scalar(3, Rational(-3)));
}

TEST_CASE("orthogonality is enforced") {
  CHECK_THROWS_AS(apply_orthogonal(RationalMatrix{{1, 1}, {0, 1}}, x(2, 0)), InvalidArgument);
  CHECK_THROWS_AS(apply_orthogonal(RationalMatrix{{2}}, x(1, 0)), InvalidArgument);
  CHECK_THROWS_AS(apply_orthogonal(RationalMatrix::identity(3), x(2, 0)), InvalidArgument);
  CHECK_THROWS_AS(clifford_projection(5), InvalidArgument);
}
