#pragma once

// Exact arithmetic in the Clifford algebra Cl(t x t*) with orthonormal
// generators e_1..e_n, eps^1..eps^n (all squaring to +1, pairwise
// anticommuting) and Gaussian-rational coefficients.

#include "langdual/exact_linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace langdual {

struct GaussianRational {
  Rational re = 0;
  Rational im = 0;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT: implicit from scalar

  static GaussianRational i() { return {0, 1}; }

  GaussianRational conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }

  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  bool operator==(const GaussianRational&) const = default;

  std::string to_string() const;
};

inline constexpr std::size_t kMaxCliffordDimension = 4;

// Basis blades are bitmasks over 2n generators: bit j is e_{j+1}, bit n + j is
// eps^{j+1}; a blade denotes the product of its generators in increasing bit
// order.
class CliffordElement {
 public:
  using Blade = std::uint32_t;

  // Zero element; throws InvalidArgument unless 1 <= n <= 4.
  explicit CliffordElement(std::size_t n);

  static CliffordElement scalar(std::size_t n, const GaussianRational& c);
  // 0-based index j: e_{j+1} and eps^{j+1}.
  static CliffordElement e(std::size_t n, std::size_t j);
  static CliffordElement eps(std::size_t n, std::size_t j);

  std::size_t dimension() const { return n_; }
  std::size_t blade_count() const { return coeffs_.size(); }
  const GaussianRational& coefficient(Blade b) const { return coeffs_.at(b); }
  void set_coefficient(Blade b, GaussianRational c) { coeffs_.at(b) = std::move(c); }

  CliffordElement operator+(const CliffordElement& o) const;
  CliffordElement operator-(const CliffordElement& o) const;
  CliffordElement operator*(const CliffordElement& o) const;
  CliffordElement operator*(const GaussianRational& c) const;
  bool operator==(const CliffordElement& o) const = default;

  // Reverse the word order and conjugate coefficients.
  CliffordElement star() const;
  bool is_zero() const;
  std::string to_string() const;

  // Sign of blade(a) * blade(b) after reordering.
  static int blade_sign(Blade a, Blade b);

 private:
  std::size_t n_;
  std::vector<GaussianRational> coeffs_;
};

// prod_j (1 - i e_j eps^j) / 2
CliffordElement clifford_projection(std::size_t n);
// prod_j (1 - i eps^j e_j) / 2
CliffordElement dual_projection(std::size_t n);
// eps^1 ... eps^n for n even, e_1 ... e_n for n odd.
CliffordElement spinor_intertwiner(std::size_t n);
// u a u*
CliffordElement conjugation_by_u(std::size_t n, const CliffordElement& a);

// Algebra automorphism induced by g in O(n) acting diagonally on t and t*:
// e_j -> sum_k g_kj e_k, eps^j -> sum_k g_kj eps^k. Throws InvalidArgument
// unless g^T g = I exactly.
CliffordElement apply_orthogonal(const RationalMatrix& g, const CliffordElement& a);
// Whether the diagonal action of g fixes a. a is expected to be a symmetric
// polynomial in e_1 eps^1, ..., e_n eps^n.
bool symmetric_invariance_check(std::size_t n, const RationalMatrix& g, const CliffordElement& a);

// x_j = e_j eps^j; power sum x_1^k + ... + x_n^k and elementary symmetric e_k(x).
CliffordElement power_sum(std::size_t n, std::size_t k);
CliffordElement elementary_symmetric(std::size_t n, std::size_t k);

// All 2^n n! signed permutation matrices.
std::vector<RationalMatrix> signed_permutations(std::size_t n);

}  // namespace langdual
