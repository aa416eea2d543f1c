#pragma once

// Sections of the Poincaré line bundle over T x T^vee built from compactly
// supported bumps on t, with Γ = Z^n.
//
//   σ(x, χ)              = sum_γ φ(x - γ) χ(γ)
//   <φ1, φ2>(x, η)       = sum_{α,β} conj φ1(x - α) φ2(x - β) e^{2πi <η, β - α>}

#include "langdual/exact_linalg.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace langdual {

using Complex = std::complex<double>;
using Point = std::vector<double>;

// φ(x) = amplitude · ψ(|A (x - center)|), ψ(r) = (1 - (r/R)^2)^2 for r < R.
class CompactBump {
 public:
  CompactBump(Point center, double radius, Complex amplitude = 1.0);
  CompactBump(Point center, double radius, Complex amplitude, Eigen::MatrixXd shape);

  std::size_t rank() const { return center_.size(); }
  const Point& center() const { return center_; }
  double radius() const { return radius_; }
  Complex amplitude() const { return amplitude_; }
  const Eigen::MatrixXd& shape() const { return shape_; }

  Complex operator()(const Point& x) const;
  // φ vanishes outside the Euclidean ball of this radius around center().
  double support_radius() const;

  // (w·φ)(x) = φ(w^{-1} x) for w in GL(n, Z).
  CompactBump transformed(const IntegerMatrix& w) const;
  CompactBump scaled(Complex c) const;

 private:
  Point center_;
  double radius_;
  Complex amplitude_;
  Eigen::MatrixXd shape_;
  Eigen::MatrixXd shape_inverse_;
};

// Lattice points γ in Z^n with |x - γ - center| < support radius.
std::vector<std::vector<long>> contributing_translates(const CompactBump& phi, const Point& x);

// χ given as a point θ of t*/Z^n, χ(γ) = e^{2πi <θ, γ>}.
Complex section_transform(const CompactBump& phi, const Point& x, const Point& theta);

Complex pairing(const CompactBump& phi1, const CompactBump& phi2, const Point& x, const Point& eta);
// Pairing of finite linear combinations sum_k c_k φ_k.
Complex pairing(const std::vector<std::pair<Complex, CompactBump>>& f1,
                const std::vector<std::pair<Complex, CompactBump>>& f2, const Point& x, const Point& eta);

struct PairingSample {
  Point x;
  Point eta;
};

// max over samples of |<w φ1, w φ2>(x, η) - <φ1, φ2>(w^{-1} x, w^T η)|.
double equivariance_check(const IntegerMatrix& w, const CompactBump& phi1, const CompactBump& phi2,
                          const std::vector<PairingSample>& samples);

// Fourier coefficients c_γ of η -> <φ, φ>(x, η) for |γ_i| <= window, assembled
// into the Toeplitz matrix T_{μν} = c_{ν - μ}; returns its smallest eigenvalue
// and the largest |c_γ| for scale.
struct GramCheck {
  double min_eigenvalue = 0;
  double scale = 0;
  std::size_t size = 0;
};
GramCheck fourier_gram_check(const CompactBump& phi, const Point& x, int window);

CompactBump random_bump(std::mt19937_64& rng, std::size_t rank);
Point random_point(std::mt19937_64& rng, std::size_t rank, double lo, double hi);

struct PoincareSuiteResult {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double quasi_periodicity = 0;  // relative
  double periodicity_x = 0;
  double periodicity_eta = 0;
  double equivariance = 0;
  double hermitian = 0;
  double sesquilinearity = 0;
  double gram_min_eigenvalue = 0;  // relative to scale, should be >= -1e-10
  std::size_t weyl_elements = 0;

  double max_deviation() const;
};

// Runs every property for ranks 1 and 2 with `samples` random draws each.
// Equivariance uses all of W(A1) on Z and W(A2) on Z^2 plus the coordinate swap.
PoincareSuiteResult run_poincare_suite(std::uint64_t seed, std::size_t samples);

}  // namespace langdual
