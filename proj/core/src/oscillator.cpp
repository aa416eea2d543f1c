#include "langdual/oscillator.hpp"

#include "langdual/error.hpp"

#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

namespace langdual {

namespace {

using Sparse = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

constexpr double kPi = std::numbers::pi;

Sparse one_dim_q(const std::vector<double>& midpoints, double h, std::size_t n, int order) {
  // dofs: nodes 0..n-1 (even), midpoints n..2n-2 (odd)
  std::vector<Triplet> t;
  auto put = [&](std::size_t row, std::size_t node, double v) {
    t.emplace_back(row, node, v);
    t.emplace_back(node, row, v);
  };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double pos = 2.0 * kPi * midpoints[i];
    const std::size_t row = n + i;
    if (order == 4 && i >= 1 && i + 2 < n) {
      const double d[4] = {1.0 / 24.0, -27.0 / 24.0, 27.0 / 24.0, -1.0 / 24.0};
      const double avg[4] = {-1.0 / 16.0, 9.0 / 16.0, 9.0 / 16.0, -1.0 / 16.0};
      for (std::size_t k = 0; k < 4; ++k) put(row, i + k - 1, d[k] / h + pos * avg[k]);
    } else {
      put(row, i, -1.0 / h + 0.5 * pos);
      put(row, i + 1, 1.0 / h + 0.5 * pos);
    }
  }
  Sparse q(2 * n - 1, 2 * n - 1);
  q.setFromTriplets(t.begin(), t.end());
  return q;
}

Sparse two_dim_q(const Sparse& q1, const Eigen::VectorXd& gamma) {
  const Eigen::Index m = q1.rows();
  std::vector<Triplet> t;
  for (Eigen::Index k = 0; k < q1.outerSize(); ++k)
    for (Sparse::InnerIterator it(q1, k); it; ++it) {
      // Q1 ⊗ 1
      for (Eigen::Index b = 0; b < m; ++b) t.emplace_back(it.row() * m + b, it.col() * m + b, it.value());
      // γ ⊗ Q1
      for (Eigen::Index a = 0; a < m; ++a) t.emplace_back(a * m + it.row(), a * m + it.col(), gamma(a) * it.value());
    }
  Sparse q(m * m, m * m);
  q.setFromTriplets(t.begin(), t.end());
  return q;
}

double inf_norm(const Sparse& a) {
  Eigen::VectorXd rows = Eigen::VectorXd::Zero(a.rows());
  for (Eigen::Index k = 0; k < a.outerSize(); ++k)
    for (Sparse::InnerIterator it(a, k); it; ++it) rows(it.row()) += std::abs(it.value());
  return rows.maxCoeff();
}

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& y) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(y);
  return qr.householderQ() * Eigen::MatrixXd::Identity(y.rows(), y.cols());
}

}  // namespace

Eigen::VectorXd OscillatorDiscretization::ground_state() const {
  const std::size_t n = nodes.size();
  const std::size_t m = 2 * n - 1;
  Eigen::VectorXd g = Eigen::VectorXd::Zero(q.rows());
  if (params.dimension == 1) {
    for (std::size_t i = 0; i < n; ++i) g(i) = std::exp(-kPi * nodes[i] * nodes[i]);
  } else {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g(a * m + b) = std::exp(-kPi * (nodes[a] * nodes[a] + nodes[b] * nodes[b]));
  }
  return g.normalized();
}

OscillatorDiscretization build_q0(const OscillatorParams& params) {
  if (params.dimension != 1 && params.dimension != 2)
    throw InvalidArgument("oscillator dimension must be 1 or 2, got " + std::to_string(params.dimension));
  const std::size_t max_grid = params.dimension == 1 ? 4000 : 200;
  if (params.grid < 3 || params.grid > max_grid)
    throw InvalidArgument("grid must be in [3, " + std::to_string(max_grid) + "], got " + std::to_string(params.grid));
  if (!(params.halfwidth >= 4.0 && params.halfwidth <= 10.0))
    throw InvalidArgument("halfwidth must be in [4, 10], got " + std::to_string(params.halfwidth));
  if (params.order != 2 && params.order != 4)
    throw InvalidArgument("stencil order must be 2 or 4, got " + std::to_string(params.order));

  OscillatorDiscretization d;
  d.params = params;
  const std::size_t n = params.grid;
  const double l = params.halfwidth;
  d.spacing = 2.0 * l / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) d.nodes.push_back(-l + static_cast<double>(i) * d.spacing);
  for (std::size_t i = 0; i + 1 < n; ++i) d.midpoints.push_back(-l + (static_cast<double>(i) + 0.5) * d.spacing);

  const Sparse q1 = one_dim_q(d.midpoints, d.spacing, n, params.order);
  Eigen::VectorXd gamma(2 * n - 1);
  gamma.head(n).setOnes();
  gamma.tail(n - 1).setConstant(-1.0);

  if (params.dimension == 1) {
    d.q = q1;
    d.grading = gamma;
  } else {
    d.q = two_dim_q(q1, gamma);
    const Eigen::Index m = gamma.size();
    d.grading.resize(m * m);
    for (Eigen::Index a = 0; a < m; ++a)
      for (Eigen::Index b = 0; b < m; ++b) d.grading(a * m + b) = gamma(a) * gamma(b);
  }
  d.q.makeCompressed();
  return d;
}

std::vector<double> expected_levels(int dimension, std::size_t count) {
  // multiplicity of 4πk
  auto one = [](std::size_t k) -> std::size_t { return k == 0 ? 1 : 2; };
  std::vector<double> out;
  for (std::size_t k = 0; out.size() < count; ++k) {
    std::size_t mult = 0;
    if (dimension == 1) {
      mult = one(k);
    } else {
      for (std::size_t j = 0; j <= k; ++j) mult += one(j) * one(k - j);
    }
    for (std::size_t r = 0; r < mult && out.size() < count; ++r) out.push_back(4.0 * kPi * static_cast<double>(k));
  }
  return out;
}

double SpectralReport::max_deviation() const {
  return deviations.empty() ? 0.0 : *std::max_element(deviations.begin(), deviations.end());
}

SpectralReport spectral_check(const OscillatorDiscretization& disc, std::size_t count, std::uint64_t seed) {
  const Sparse a = (disc.q * disc.q).pruned();
  const Eigen::Index n = a.rows();
  if (count == 0 || static_cast<Eigen::Index>(count) > n / 2)
    throw InvalidArgument("eigenvalue count out of range for this grid");
  const Eigen::Index block = std::min<Eigen::Index>(n, std::max<Eigen::Index>(2 * count, count + 20));

  const double shift = 1.0;
  Sparse shifted = a;
  for (Eigen::Index i = 0; i < n; ++i) shifted.coeffRef(i, i) += shift;
  Eigen::SimplicialLDLT<Sparse> solver(shifted);
  if (solver.info() != Eigen::Success) throw ConvergenceFailure("factorization of Q^2 + I failed");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd x(n, block);
  for (Eigen::Index j = 0; j < block; ++j)
    for (Eigen::Index i = 0; i < n; ++i) x(i, j) = normal(rng);
  x = orthonormalize(x);

  SpectralReport r;
  r.dimension = disc.params.dimension;
  r.grid = disc.params.grid;
  r.halfwidth = disc.params.halfwidth;
  r.residual_tolerance = 1e-8 * inf_norm(a);

  Eigen::VectorXd theta;
  Eigen::VectorXd res(count);
  const std::size_t max_iterations = 2000;
  bool converged = false;
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    x = orthonormalize(solver.solve(x));
    const Eigen::MatrixXd ax = a * x;
    Eigen::MatrixXd h = x.transpose() * ax;
    h = 0.5 * (h + h.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
    x = x * eig.eigenvectors();
    theta = eig.eigenvalues();
    const Eigen::MatrixXd axr = ax * eig.eigenvectors();
    for (std::size_t i = 0; i < count; ++i) res(i) = (axr.col(i) - theta(i) * x.col(i)).norm();
    r.iterations = it;
    if (res.maxCoeff() <= r.residual_tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    std::ostringstream os;
    os << "eigensolver did not converge; residuals:";
    for (std::size_t i = 0; i < count; ++i) os << ' ' << res(i);
    os << " (target " << r.residual_tolerance << ")";
    throw ConvergenceFailure(os.str());
  }

  r.expected = expected_levels(disc.params.dimension, count);
  for (std::size_t i = 0; i < count; ++i) {
    r.eigenvalues.push_back(theta(i));
    r.residuals.push_back(res(i));
    r.deviations.push_back(std::abs(theta(i) - r.expected[i]) / std::max(r.expected[i], 4.0 * kPi));
    if (theta(i) < kKernelThreshold) ++r.kernel_dim;
  }
  r.residual_max = res.maxCoeff();

  r.kernel_vector = x.col(0).normalized();
  if (r.kernel_dim > 0) {
    double even = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      if (disc.grading(i) > 0) even += r.kernel_vector(i) * r.kernel_vector(i);
    r.kernel_parity = even;
    r.kernel_cosine = std::abs(r.kernel_vector.dot(disc.ground_state()));
  }
  return r;
}

}  // namespace langdual
