#pragma once

// Slow, independent recomputations used to cross-check the library. Nothing
// here calls smith_normal_form, solve_mod_lattice or the trace helpers of
// equivariant_k.

#include "langdual/equivariant_k.hpp"
#include "langdual/exact_linalg.hpp"
#include "langdual/torus_fixed_points.hpp"
#include "langdual/weyl_group.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using langdual::Integer;
using langdual::IntegerMatrix;
using langdual::Rational;
using langdual::RationalMatrix;

// Leibniz expansion; fine up to 6 x 6.
template <typename T>
T leibniz_det(const langdual::Matrix<T>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  T total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    T term = 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, p[i]);
    total += (inversions % 2) ? T(-term) : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

template <typename T>
langdual::Matrix<T> submatrix(const langdual::Matrix<T>& m, const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols) {
  langdual::Matrix<T> s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  return s;
}

// gcd of all r x r minors (Δ_r); Δ_0 = 1.
inline Integer determinantal_divisor(const IntegerMatrix& m, std::size_t r) {
  if (r == 0) return 1;
  Integer g = 0;
  for (const auto& rows : subsets(m.rows(), r))
    for (const auto& cols : subsets(m.cols(), r)) g = gcd(g, Integer(abs(leibniz_det(submatrix(m, rows, cols)))));
  return g;
}

inline std::size_t rank_by_minors(const IntegerMatrix& m) {
  std::size_t r = 0;
  while (r < std::min(m.rows(), m.cols()) && determinantal_divisor(m, r + 1) != 0) ++r;
  return r;
}

// Order of the torsion subgroup of Z^rows / M Z^cols.
inline Integer torsion_order(const IntegerMatrix& m) { return determinantal_divisor(m, rank_by_minors(m)); }

// Points of (1/N)Z^n / Z^n fixed by every matrix in gens (mod Z^n).
inline std::size_t grid_common_fixed(const std::vector<IntegerMatrix>& gens, std::size_t n, long grid) {
  std::size_t count = 0;
  std::vector<long> k(n, 0);
  while (true) {
    bool fixed = true;
    for (const auto& g : gens) {
      for (std::size_t i = 0; i < n && fixed; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < n; ++j) s += g(i, j) * k[j];
        if ((s - k[i]) % grid != 0) fixed = false;
      }
      if (!fixed) break;
    }
    if (fixed) ++count;
    std::size_t i = 0;
    while (i < n && k[i] == grid - 1) k[i++] = 0;
    if (i == n) break;
    ++k[i];
  }
  return count;
}

// e_k(R) = sum of k x k principal minors = trace of R on Λ^k.
inline Rational exterior_trace(const RationalMatrix& r, std::size_t k) {
  if (k == 0) return 1;
  Rational s = 0;
  for (const auto& idx : subsets(r.rows(), k)) s += leibniz_det(submatrix(r, idx, idx));
  return s;
}

// Matrix of z on the column span of K: (K^T K)^{-1} K^T z K.
inline RationalMatrix restrict_to_columns(const IntegerMatrix& k, const IntegerMatrix& z) {
  const RationalMatrix kr = langdual::to_rational(k);
  const RationalMatrix kt = kr.transpose();
  return langdual::inverse(kt * kr) * kt * langdual::to_rational(z) * kr;
}

// Delocalized formula summed over all commuting pairs (w, z) with weight
// 1/|W|, commutation tested by matrix products.
inline langdual::GradedRank commuting_pairs_k(const langdual::WeylGroup& group) {
  Rational even = 0, odd = 0;
  const auto& els = group.elements();
  for (std::size_t w = 0; w < els.size(); ++w) {
    const langdual::FixedSet fixed(els[w]);
    const IntegerMatrix& kb = fixed.report().fixed_lattice_basis;
    for (std::size_t z = 0; z < els.size(); ++z) {
      if (els[w] * els[z] != els[z] * els[w]) continue;
      const RationalMatrix zr = langdual::to_rational(els[z]);
      std::size_t stable = 0;
      for (std::size_t c = 0; c < fixed.component_count(); ++c)
        if (fixed.component_of(zr * fixed.report().components[c]) == c) ++stable;
      if (stable == 0) continue;
      const RationalMatrix r = kb.cols() ? restrict_to_columns(kb, els[z]) : RationalMatrix(0, 0);
      for (std::size_t k = 0; k <= r.rows(); ++k) (k % 2 ? odd : even) += Rational(stable) * exterior_trace(r, k);
    }
  }
  even /= Rational(els.size());
  odd /= Rational(els.size());
  if (denominator(even) != 1 || denominator(odd) != 1) throw std::runtime_error("oracle: non-integral rank");
  return {numerator(even).convert_to<std::uint64_t>(), numerator(odd).convert_to<std::uint64_t>()};
}

// k0 - k1 via Lefschetz: (1/|W|) sum over commuting pairs with finite common
// fixed set of the number of common fixed points, counted as Δ_n of the
// stacked matrix [w - 1; z - 1].
inline Rational lefschetz_euler(const langdual::WeylGroup& group) {
  const auto& els = group.elements();
  const std::size_t n = group.rank();
  const IntegerMatrix id = IntegerMatrix::identity(n);
  Rational total = 0;
  for (const auto& w : els)
    for (const auto& z : els) {
      if (w * z != z * w) continue;
      const IntegerMatrix stacked = IntegerMatrix::stack({w - id, z - id});
      if (rank_by_minors(stacked) < n) continue;
      total += Rational(determinantal_divisor(stacked, n));
    }
  return total / Rational(els.size());
}

}  // namespace oracle
