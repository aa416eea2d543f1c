#pragma once

// Finite-difference model of Q_0 = d/dy^j ⊗ eps^j - 2 pi i y^j ⊗ e_j on
// [-L, L]^d, d = 1 or 2, and a sparse eigensolver for Q_0^2.
//
// 1D: the even spinor component lives on the n nodes y_i = -L + i h, the odd
// one on the n - 1 midpoints. B maps node values to midpoint values of
// f' + 2 pi y f (staggered differences and interpolation, fourth order in the
// interior, second order in the first and last row, or second order
// throughout), Q = [[0, B^T], [B, 0]] so Q^2 = B^T B ⊕ B B^T. 2D uses
// Q1 ⊗ 1 + γ ⊗ Q1 with grading γ ⊗ γ.

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace langdual {

struct OscillatorParams {
  int dimension = 1;
  std::size_t grid = 1600;  // nodes per axis
  double halfwidth = 6.0;
  int order = 4;  // 2 or 4
};

struct OscillatorDiscretization {
  OscillatorParams params;
  double spacing = 0;
  std::vector<double> nodes;
  std::vector<double> midpoints;
  Eigen::SparseMatrix<double> q;
  Eigen::VectorXd grading;  // +1 on even dofs, -1 on odd dofs
  Eigen::VectorXd ground_state() const;  // e^{-pi |y|^2} on the even-even sector, unit norm
};

// Throws InvalidArgument for dimension outside {1, 2}, grid outside [3, 4000]
// (1D) or [3, 200] (2D), halfwidth outside [4, 10], order not 2 or 4.
OscillatorDiscretization build_q0(const OscillatorParams& params);

// 4 pi times the lowest `count` levels with multiplicity: 1D sequence
// 0,1,1,2,2,...; 2D its self-convolution.
std::vector<double> expected_levels(int dimension, std::size_t count);

struct SpectralReport {
  int dimension = 1;
  std::size_t grid = 0;
  double halfwidth = 0;
  std::vector<double> eigenvalues;
  std::vector<double> residuals;
  std::vector<double> expected;
  std::vector<double> deviations;  // |λ - 4πk| / max(4πk, 4π)
  std::size_t kernel_dim = 0;
  double kernel_parity = 0;   // fraction of kernel-vector norm in even dofs
  double kernel_cosine = 0;   // |<v, ground_state>|
  double residual_max = 0;
  double residual_tolerance = 0;
  std::size_t iterations = 0;
  Eigen::VectorXd kernel_vector;

  double max_deviation() const;
};

inline constexpr double kKernelThreshold = 2.0 * 3.14159265358979323846;

// Lowest `count` eigenpairs of Q^2. Throws ConvergenceFailure (with the
// residuals in the message) if ||Q^2 v - λ v|| <= 1e-8 ||Q^2||_inf is not
// reached.
SpectralReport spectral_check(const OscillatorDiscretization& disc, std::size_t count, std::uint64_t seed = 7);

}  // namespace langdual
